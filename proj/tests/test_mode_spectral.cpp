#include <doctest.h>

#include <cmath>

#include "conic/mode_spectral.hpp"
#include "support/bessel_oracle.hpp"

using namespace conic;

namespace {

ModeEigenproblem flat_cone(double beta, int mode, int n, double rmax = 1.0) {
  ModeEigenproblem p;
  p.geometry = ModelMetric::polar(beta, 0.0);
  p.mode = mode;
  p.n = n;
  p.r_max = rmax;
  p.outer = OuterBC::Dirichlet;
  return p;
}

ModeEigenproblem football(double beta, double K, int mode, int n) {
  ModeEigenproblem p;
  p.geometry = ModelMetric::suspension(beta, K);
  p.mode = mode;
  p.n = n;
  p.outer = OuterBC::SecondPole;
  return p;
}

}  // namespace

TEST_CASE("bessel oracle sanity") {
  // J_0's first zero, classical value
  CHECK(oracle::bessel_zero(0.0, 1) == doctest::Approx(2.404825557695773).epsilon(1e-12));
  CHECK(oracle::bessel_zero(0.0, 2) == doctest::Approx(5.520078110286311).epsilon(1e-12));
  CHECK(oracle::bessel_zero(2.0, 1) == doctest::Approx(5.135622301840683).epsilon(1e-12));
  CHECK(oracle::bessel_j(0.5, M_PI) == doctest::Approx(0.0).epsilon(1e-12));  // sqrt(2/pi x) sin x
}

TEST_CASE("flat cone Dirichlet eigenvalues match the Bessel oracle") {
  for (double beta : {-0.25, -0.5, -0.75}) {
    for (int k : {0, 1, 2}) {
      const auto s = solve_spectrum(flat_cone(beta, k, 1024), 2);
      for (int idx = 0; idx < 2; ++idx) {
        const double nu = std::abs(k) / (1.0 + beta);
        const double j = oracle::bessel_zero(nu, idx + 1);
        const auto& e = s.entries[idx];
        CHECK(std::abs(e.extrapolated - j * j) <=
              std::max(e.error_bar, 1e-9 * j * j));
      }
    }
  }
}

TEST_CASE("spec example: beta=-1/2 mode 1 lowest Dirichlet eigenvalue") {
  const auto s = solve_spectrum(flat_cone(-0.5, 1, 1024), 1);
  // Bessel order 2; frozen from the oracle: j_{2,1}^2
  CHECK(s.entries[0].extrapolated == doctest::Approx(26.374616427163198).epsilon(1e-7));
}

TEST_CASE("football mode 0: first nonzero eigenvalue is 2K, beta independent") {
  for (double K : {1.0, 4.0}) {
    double prev = -1.0;
    for (double beta : {-0.75, -0.5, -0.25}) {
      const auto s = solve_spectrum(football(beta, K, 0, 1024), 2);
      CHECK(std::abs(s.entries[0].extrapolated) < 1e-10 * K);  // constant mode
      CHECK(std::abs(s.entries[1].extrapolated - 2.0 * K) < 1e-6 * K);
      if (prev > 0) CHECK(std::abs(s.entries[1].extrapolated - prev) < 1e-8 * K);
      prev = s.entries[1].extrapolated;
    }
  }
}

TEST_CASE("football modes |k| >= 1 sit strictly above 2K") {
  for (double beta : {-0.5, -0.9}) {
    const auto rep = verify_eigenvalue_bound(beta, 1.0, 3, 512);
    CHECK(rep.bound_holds);
    CHECK(rep.equality_at_mode0);
    CHECK(rep.equality_only_mode0);
    CHECK(rep.min_margin_modes_ge1 > 0.1);
    CHECK(rep.cos_profile_dev < 1e-3);
  }
}

TEST_CASE("round-sphere limit: mode 1 eigenvalue approaches 2") {
  const auto far = solve_spectrum(football(-0.2, 1.0, 1, 512), 1);
  const auto near = solve_spectrum(football(-0.02, 1.0, 1, 512), 1);
  CHECK(far.entries[0].extrapolated > near.entries[0].extrapolated);
  CHECK(near.entries[0].extrapolated > 2.0);
  CHECK(near.entries[0].extrapolated - 2.0 < 0.2);
}

TEST_CASE("per-mode eigenvalues increase with |k|") {
  double prev = 0.0;
  for (int k = 0; k <= 3; ++k) {
    const auto s = solve_spectrum(flat_cone(-0.5, k, 256), 1);
    CHECK(s.entries[0].extrapolated > prev);
    prev = s.entries[0].extrapolated;
  }
  prev = 0.0;
  for (int k = 0; k <= 3; ++k) {
    const auto s = solve_spectrum(football(-0.5, 1.0, k, 256), 2);
    const double l1 = (k == 0) ? s.entries[1].extrapolated : s.entries[0].extrapolated;
    CHECK(l1 > prev);
    prev = l1;
  }
}

TEST_CASE("Friedrichs selection: dropping it moves the low eigenvalue") {
  auto p = flat_cone(-0.5, 0, 512);
  const auto friedrichs = solve_spectrum(p, 1);
  p.pin_inner = true;
  const auto pinned = solve_spectrum(p, 1);
  const double gap = std::abs(friedrichs.entries[0].extrapolated - pinned.entries[0].extrapolated);
  CHECK(gap > 10.0 * (friedrichs.entries[0].error_bar + pinned.entries[0].error_bar));

  // the Friedrichs eigenfunction stays bounded at the pole
  p.pin_inner = false;
  auto [grid, u] = solve_eigenvector(p, 0);
  double inner = 0.0, interior = 0.0;
  for (int i = 0; i < 3; ++i) inner = std::max(inner, std::abs(u[i]));
  for (std::size_t i = 3; i < u.size(); ++i) interior = std::max(interior, std::abs(u[i]));
  CHECK(inner <= 2.0 * interior);
}

TEST_CASE("assembled operator is symmetric in the weighted inner product") {
  const auto op = assemble_mode(flat_cone(-0.5, 1, 128));
  // stored form is explicitly tridiagonal-symmetric; weights positive
  for (double w : op.weight) CHECK(w > 0.0);
  std::vector<double> d, e;
  op.standardize(d, e);
  CHECK(d.size() == 128);
  CHECK(e.size() == 127);
}

TEST_CASE("grid and spectrum guards") {
  CHECK_THROWS_AS(assemble_mode(flat_cone(-0.5, 0, 32)), GridTooCoarse);
  ModeEigenproblem cusp;
  cusp.geometry = ModelMetric::cusp();
  cusp.mode = 0;
  cusp.n = 128;
  cusp.outer = OuterBC::None;
  CHECK_THROWS_AS(solve_spectrum(cusp, 1), NoDiscreteSpectrum);
}

TEST_CASE("friedrichs expansion fits") {
  auto away = [](double r) { return (r > 0.4 && r < 0.6) ? 1.0 : 0.0; };
  auto smooth = [](double) { return 1.0; };
  {
    // mode 1, rhs away from the pole: pure indicial branch r^{1/(1+beta)}
    auto p = flat_cone(-0.5, 1, 2048);
    const auto fit = friedrichs_expansion_fit(p, away);
    CHECK(fit.predicted == doctest::Approx(2.0));
    CHECK(std::abs(fit.slope - fit.predicted) <= 0.02 * fit.predicted);
  }
  {
    auto p = flat_cone(-0.25, 1, 2048);
    const auto fit = friedrichs_expansion_fit(p, away);
    CHECK(fit.predicted == doctest::Approx(4.0 / 3.0));
    CHECK(std::abs(fit.slope - fit.predicted) <= 0.02 * fit.predicted);
  }
  {
    // mode 0, smooth rhs: the forced r^2 family leads
    auto p = flat_cone(-0.75, 0, 2048);
    const auto fit = friedrichs_expansion_fit(p, smooth);
    CHECK(fit.predicted == doctest::Approx(2.0));
    CHECK(std::abs(fit.slope - fit.predicted) <= 0.02 * fit.predicted);
  }
  {
    // mode 0 with rhs supported away from the pole: u is exactly constant
    // near the pole (the log branch is gone), so the fit degenerates
    auto p = flat_cone(-0.5, 0, 2048);
    CHECK_THROWS_AS(friedrichs_expansion_fit(p, away), DegenerateFit);
  }
}

TEST_CASE("cusp zero-mode exponents") {
  auto [z1, z2] = cusp_zero_mode_roots();
  CHECK(z1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(z2 == doctest::Approx(-2.0).epsilon(1e-15));
  // substitute back into the symbol
  auto symbol = [](double z) { return -z * (z - 1.0) - 2.0 * z + 2.0; };
  CHECK(symbol(z1) == doctest::Approx(0.0));
  CHECK(symbol(z2) == doctest::Approx(0.0));
}

TEST_CASE("cusp mode decay barrier") {
  // barrier bound with the a-priori constant, at the c of the worked example
  for (int j = 1; j <= 5; ++j) {
    const auto rep = cusp_mode_decay_check(j, 0.5, 1.0);
    CHECK(rep.max_weighted > 0.0);
    CHECK(rep.bound_A <= rep.barrier_A * 1.02);
  }
  // j^{-2} scaling measured away from the outer Dirichlet layer; the exact
  // solution carries a (1 - c^2/j^2 + ...)^{-1} factor, so use a small c
  const double c = 0.3;
  const auto base = cusp_mode_decay_check(1, c, 1.0);
  for (int j = 2; j <= 5; ++j) {
    const auto rep = cusp_mode_decay_check(j, c, 1.0);
    const double ratio = rep.max_weighted_core * j * j / base.max_weighted_core;
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.2));
    CHECK(rep.max_weighted_core <= base.max_weighted_core / (j * j) * 1.2);
  }
  const auto zero = cusp_mode_decay_check(3, c, 0.0);
  CHECK(zero.max_weighted == 0.0);
  CHECK(zero.bound_A == 0.0);
}
