#include "conic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace conic {

namespace {
constexpr double kEuclideanTol = 1e-12;

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
}  // namespace

ConeAngleVector::ConeAngleVector(std::vector<double> betas) : betas_(std::move(betas)) {
  for (std::size_t j = 0; j < betas_.size(); ++j) {
    if (!(betas_[j] > -1.0 && betas_[j] < 0.0)) {
      std::ostringstream os;
      os << "cone angle parameter beta[" << j << "] = " << betas_[j]
         << " outside (-1,0)";
      throw InvalidSpec(os.str());
    }
  }
}

double ConeAngleVector::sum() const {
  return std::accumulate(betas_.begin(), betas_.end(), 0.0);
}

void ConicSurfaceSpec::validate() const {
  if (genus < 0) throw InvalidSpec("genus must be nonnegative");
  const std::size_t k = angles.size();
  if (sphere_positions && torus_positions)
    throw InvalidSpec("positions given for both genus-0 and genus-1 charts");
  if (sphere_positions) {
    if (genus != 0) throw InvalidSpec("sphere positions require genus 0");
    if (sphere_positions->size() != k)
      throw InvalidSpec("position count does not match cone count");
    for (const auto& p : *sphere_positions) {
      if (std::abs(norm3(p) - 1.0) > 1e-9)
        throw InvalidSpec("sphere positions must be unit vectors");
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto &a = (*sphere_positions)[i], &b = (*sphere_positions)[j];
        const double d2 = (a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                          (a[2] - b[2]) * (a[2] - b[2]);
        if (d2 < 1e-20) throw InvalidSpec("cone positions must be pairwise distinct");
      }
  }
  if (torus_positions) {
    if (genus != 1) throw InvalidSpec("torus positions require genus 1");
    if (torus_positions->size() != k)
      throw InvalidSpec("position count does not match cone count");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        double dx = std::abs((*torus_positions)[i][0] - (*torus_positions)[j][0]);
        double dy = std::abs((*torus_positions)[i][1] - (*torus_positions)[j][1]);
        dx = std::min(dx, 1.0 - dx);
        dy = std::min(dy, 1.0 - dy);
        if (dx * dx + dy * dy < 1e-20)
          throw InvalidSpec("cone positions must be pairwise distinct");
      }
  }
}

const char* to_string(GeometryTag tag) {
  switch (tag) {
    case GeometryTag::Hyperbolic: return "Hyperbolic";
    case GeometryTag::Euclidean: return "Euclidean";
    case GeometryTag::Spherical: return "Spherical";
    case GeometryTag::OutsideTroyanov: return "OutsideTroyanov";
    case GeometryTag::TwoConeUnequal: return "TwoConeUnequal";
    case GeometryTag::NotCoveredByTheorem: return "NotCoveredByTheorem";
  }
  return "?";
}

double chi_beta(const ConicSurfaceSpec& spec) {
  spec.validate();
  return 2.0 - 2.0 * spec.genus + spec.angles.sum();
}

GeometryClass classify(const ConicSurfaceSpec& spec) {
  const double chi = chi_beta(spec);
  GeometryClass out{GeometryTag::Hyperbolic, chi, std::nullopt};
  if (std::abs(chi) <= kEuclideanTol) {
    out.tag = GeometryTag::Euclidean;
    return out;
  }
  if (chi < 0.0) {
    out.tag = GeometryTag::Hyperbolic;
    return out;
  }
  // chi > 0
  const std::size_t k = spec.angles.size();
  if (k <= 1) {
    out.tag = GeometryTag::NotCoveredByTheorem;
    return out;
  }
  if (k == 2) {
    out.tag = (spec.angles[0] == spec.angles[1]) ? GeometryTag::Spherical
                                                 : GeometryTag::TwoConeUnequal;
    return out;
  }
  const double total = spec.angles.sum();
  for (std::size_t j = 0; j < k; ++j) {
    // Troyanov: sum_{i != j} beta_i < beta_j, evaluated strictly.
    if (!(total - spec.angles[j] < spec.angles[j])) {
      out.tag = GeometryTag::OutsideTroyanov;
      out.violated_index = static_cast<int>(j) + 1;
      return out;
    }
  }
  out.tag = GeometryTag::Spherical;
  return out;
}

double gauss_bonnet_pair(const ConicSurfaceSpec& spec, double area) {
  if (!(area > 0.0)) throw InvalidSpec("area must be positive");
  const double chi = chi_beta(spec);
  if (std::abs(chi) <= kEuclideanTol) return 0.0;
  return 2.0 * M_PI * chi / area;
}

SphToEucProjection sph_to_euc_projection(const ConeAngleVector& betas) {
  ConicSurfaceSpec spec;
  spec.genus = 0;
  spec.angles = betas;
  const GeometryClass cls = classify(spec);
  if (cls.tag != GeometryTag::Spherical)
    throw NotSpherical(std::string("projection requires a Spherical angle vector, got ") +
                       to_string(cls.tag));
  if (betas.size() < 3)
    throw NotSpherical(
        "projection requires k >= 3: two equal cones map to the boundary of the "
        "Euclidean cross-section");
  const double lambda = -betas.sum() / 2.0;
  std::vector<double> euc(betas.size());
  for (std::size_t j = 0; j < betas.size(); ++j) euc[j] = betas[j] / lambda;
  return SphToEucProjection{lambda, ConeAngleVector(std::move(euc))};
}

DimensionReport dimension_report(const ConicSurfaceSpec& spec) {
  spec.validate();
  const int g = spec.genus;
  const int k = static_cast<int>(spec.angles.size());
  DimensionReport r{};
  if (g > 1)
    r.dim_tt = 6 * g - 6;
  else if (g == 1)
    r.dim_tt = 2;
  else
    r.dim_tt = 0;

  r.tt_sing_clamped = false;
  if (g > 1) {
    r.dim_tt_sing = r.dim_tt + 2 * k;
  } else if (g == 1) {
    r.dim_tt_sing = 2 * k;
  } else {
    r.dim_tt_sing = 2 * k - 3;
    if (r.dim_tt_sing < 0) {
      r.dim_tt_sing = 0;
      r.tt_sing_clamped = true;
    }
  }

  r.dim_teich_conic = 6 * g - 6 + 3 * k;
  r.dim_slice = r.dim_teich_conic + 1;
  r.dim_fiber = 6 * g - 6 + 2 * k;
  r.formula_negative = r.dim_slice < 0 || r.dim_teich_conic < 0 || r.dim_fiber < 0;
  return r;
}

}  // namespace conic
