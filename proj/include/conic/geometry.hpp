#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "conic/errors.hpp"

namespace conic {

using Vec3 = std::array<double, 3>;
using Vec2 = std::array<double, 2>;

// Cone angle parameters beta_j, each in (-1,0) strictly; the cone angle is
// theta_j = 2*pi*(1+beta_j).
class ConeAngleVector {
 public:
  ConeAngleVector() = default;
  explicit ConeAngleVector(std::vector<double> betas);

  std::size_t size() const { return betas_.size(); }
  bool empty() const { return betas_.empty(); }
  double operator[](std::size_t j) const { return betas_[j]; }
  const std::vector<double>& values() const { return betas_; }
  double sum() const;

 private:
  std::vector<double> betas_;
};

// Problem instance: genus, cone angles, optional cone positions.
// Positions live on the reference surface: unit vectors for genus 0,
// coordinates in the unit-square fundamental domain for genus 1.
struct ConicSurfaceSpec {
  int genus = 0;
  ConeAngleVector angles;
  std::optional<std::vector<Vec3>> sphere_positions;
  std::optional<std::vector<Vec2>> torus_positions;

  std::size_t cone_count() const { return angles.size(); }
  void validate() const;
};

enum class GeometryTag {
  Hyperbolic,
  Euclidean,
  Spherical,
  OutsideTroyanov,
  TwoConeUnequal,
  NotCoveredByTheorem,
};

const char* to_string(GeometryTag tag);

struct GeometryClass {
  GeometryTag tag;
  double chi_beta;
  std::optional<int> violated_index;  // 1-based index of the first cone failing Troyanov
};

struct DimensionReport {
  int dim_tt;
  int dim_tt_sing;
  int dim_slice;
  int dim_teich_conic;
  int dim_fiber;
  bool formula_negative;
  bool tt_sing_clamped;
};

// chi(Sigma_p, beta) = 2 - 2*gamma + sum_j beta_j.
double chi_beta(const ConicSurfaceSpec& spec);

GeometryClass classify(const ConicSurfaceSpec& spec);

// Constant curvature forced by Gauss-Bonnet: K * area = 2*pi*chi.
double gauss_bonnet_pair(const ConicSurfaceSpec& spec, double area);

struct SphToEucProjection {
  double lambda;            // in (0,1)
  ConeAngleVector euc_betas;  // betas/lambda, sums to -2
};

// The spherical region is the open cone over the Euclidean cross-section:
// writes a Spherical angle vector (k >= 3) as lambda * euc with sum(euc) = -2.
SphToEucProjection sph_to_euc_projection(const ConeAngleVector& betas);

DimensionReport dimension_report(const ConicSurfaceSpec& spec);

}  // namespace conic
