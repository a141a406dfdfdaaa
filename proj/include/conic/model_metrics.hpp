#pragma once

#include "conic/errors.hpp"

namespace conic {

enum class Chart { Polar, ConformalFlat, Suspension, Cusp };

const char* to_string(Chart chart);

// Constant-curvature model metric g = dr^2 + f(r)^2 dy^2 with cone parameter
// beta at the pole. The warp factor by curvature branch:
//   K < 0 : f = (1+beta) |K|^{-1/2} sinh(|K|^{1/2} r)
//   K = 0 : f = (1+beta) r
//   K > 0 : f = (1+beta) K^{-1/2} sin(K^{1/2} r)
// The hyperbolic cusp g_c = dr^2/r^2 + r^2 dy^2 is carried in its own chart;
// its samples are reported in the arclength variable (f = r, with arclength
// derivatives), curvature -1.
class ModelMetric {
 public:
  static ModelMetric polar(double beta, double curvature);
  static ModelMetric conformal_flat(double beta);
  static ModelMetric suspension(double beta, double curvature);  // K > 0
  static ModelMetric cusp();

  double beta() const { return beta_; }
  double curvature() const { return curvature_; }
  Chart chart() const { return chart_; }

  // Open chart interior (0, domain_max); +inf when unbounded.
  double domain_max() const;

 private:
  ModelMetric(double beta, double curvature, Chart chart);
  double beta_;
  double curvature_;
  Chart chart_;
};

struct WarpedMetricSample {
  double r;
  double f;
  double fp;
  double fpp;
  double gauss_curvature() const { return -fpp / f; }
};

WarpedMetricSample evaluate_model(const ModelMetric& metric, double r);

// Coordinate change between the conformal flat picture |z|^{2 beta} |dz|^2
// (z = rho e^{iy}) and geodesic polar radius: r = rho^{beta+1} / (beta+1).
double conformal_to_polar(double rho, double beta);
double polar_to_conformal(double r, double beta);

// Pole-to-pole distance of the K-suspension; the extremal diameter.
double football_geodesic_diameter(double beta, double K);

// Area of the K-suspension with two equal cones: 4 pi (1+beta) / K.
double football_area(double beta, double K);

}  // namespace conic
