#include "conic/model_metrics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace conic {

const char* to_string(Chart chart) {
  switch (chart) {
    case Chart::Polar: return "Polar";
    case Chart::ConformalFlat: return "ConformalFlat";
    case Chart::Suspension: return "Suspension";
    case Chart::Cusp: return "Cusp";
  }
  return "?";
}

ModelMetric::ModelMetric(double beta, double curvature, Chart chart)
    : beta_(beta), curvature_(curvature), chart_(chart) {}

ModelMetric ModelMetric::polar(double beta, double curvature) {
  if (!(beta > -1.0 && beta <= 0.0))
    throw InvalidSpec("model metric requires beta in (-1,0]");
  return ModelMetric(beta, curvature, Chart::Polar);
}

ModelMetric ModelMetric::conformal_flat(double beta) {
  if (!(beta > -1.0 && beta <= 0.0))
    throw InvalidSpec("model metric requires beta in (-1,0]");
  return ModelMetric(beta, 0.0, Chart::ConformalFlat);
}

ModelMetric ModelMetric::suspension(double beta, double curvature) {
  if (!(beta > -1.0 && beta <= 0.0))
    throw InvalidSpec("model metric requires beta in (-1,0]");
  if (!(curvature > 0.0)) throw InvalidSpec("suspension chart requires K > 0");
  return ModelMetric(beta, curvature, Chart::Suspension);
}

ModelMetric ModelMetric::cusp() { return ModelMetric(0.0, -1.0, Chart::Cusp); }

double ModelMetric::domain_max() const {
  switch (chart_) {
    case Chart::Suspension:
      return M_PI / std::sqrt(curvature_);
    case Chart::Polar:
      return curvature_ > 0.0 ? M_PI / std::sqrt(curvature_)
                              : std::numeric_limits<double>::infinity();
    case Chart::ConformalFlat:
      return std::numeric_limits<double>::infinity();
    case Chart::Cusp:
      return 1.0;
  }
  return 0.0;
}

WarpedMetricSample evaluate_model(const ModelMetric& metric, double r) {
  if (!(r > 0.0) || !(r < metric.domain_max())) {
    std::ostringstream os;
    os << "r = " << r << " outside the open chart (0," << metric.domain_max() << ") of "
       << to_string(metric.chart());
    throw OutOfChart(os.str());
  }
  const double a = 1.0 + metric.beta();
  const double K = metric.curvature();
  WarpedMetricSample s{};
  s.r = r;
  if (metric.chart() == Chart::Cusp) {
    // arclength variable: f(s) = e^s = r, all arclength derivatives equal f
    s.f = r;
    s.fp = r;
    s.fpp = r;
    return s;
  }
  if (K < 0.0) {
    const double q = std::sqrt(-K);
    s.f = a / q * std::sinh(q * r);
    s.fp = a * std::cosh(q * r);
    s.fpp = a * q * std::sinh(q * r);
  } else if (K == 0.0) {
    s.f = a * r;
    s.fp = a;
    s.fpp = 0.0;
  } else {
    const double q = std::sqrt(K);
    s.f = a / q * std::sin(q * r);
    s.fp = a * std::cos(q * r);
    s.fpp = -a * q * std::sin(q * r);
  }
  return s;
}

double conformal_to_polar(double rho, double beta) {
  if (!(rho > 0.0)) throw InvalidSpec("rho must be positive");
  if (!(beta > -1.0 && beta < 0.0)) throw InvalidSpec("beta must lie in (-1,0)");
  return std::pow(rho, beta + 1.0) / (beta + 1.0);
}

double polar_to_conformal(double r, double beta) {
  if (!(r > 0.0)) throw InvalidSpec("r must be positive");
  if (!(beta > -1.0 && beta < 0.0)) throw InvalidSpec("beta must lie in (-1,0)");
  return std::pow((beta + 1.0) * r, 1.0 / (beta + 1.0));
}

double football_geodesic_diameter(double beta, double K) {
  if (!(beta > -1.0 && beta < 0.0)) throw InvalidSpec("beta must lie in (-1,0)");
  if (!(K > 0.0)) throw InvalidSpec("football requires K > 0");
  return M_PI / std::sqrt(K);
}

double football_area(double beta, double K) {
  if (!(beta > -1.0 && beta < 0.0)) throw InvalidSpec("beta must lie in (-1,0)");
  if (!(K > 0.0)) throw InvalidSpec("football requires K > 0");
  return 4.0 * M_PI * (1.0 + beta) / K;
}

}  // namespace conic
