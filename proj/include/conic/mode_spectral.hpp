#pragma once

#include <functional>
#include <vector>

#include "conic/errors.hpp"
#include "conic/model_metrics.hpp"

namespace conic {

enum class OuterBC { Dirichlet, SecondPole, None };

// One Fourier mode of the Laplacian (minus an optional zeroth-order shift c)
// on a model geometry:  -(1/f)(f u')' + (k^2/f^2 - c) u  with weight f(r) dr.
// The pole is handled by the integrated half-cell form: the pole is a cell
// face where the degenerate weight f = 0 kills the flux, which selects the
// Friedrichs branch (no log / no unbounded branch).
struct ModeEigenproblem {
  ModelMetric geometry = ModelMetric::polar(-0.5, 0.0);
  int mode = 0;
  int n = 256;            // number of cells; >= 64
  double r_max = 1.0;     // outer radius (ignored for SecondPole; r0 for cusp)
  OuterBC outer = OuterBC::Dirichlet;
  double shift = 0.0;     // operator is Delta - shift
  double cusp_r_min = 0.02;  // inner truncation for the cusp chart
  bool pin_inner = false;    // test hook: Dirichlet-pin the pole cell instead of
                             // the Friedrichs half-cell form
};

struct RadialGrid {
  std::vector<double> faces;  // n+1, ascending; faces[0] may be the pole
  std::vector<double> nodes;  // n, cell representatives
};

// A u = lambda W u with A symmetric tridiagonal, W = diag(weight) > 0.
struct ModeOperator {
  RadialGrid grid;
  std::vector<double> diag, off, weight;
  // standardized symmetric tridiagonal D^{-1/2} A D^{-1/2}
  void standardize(std::vector<double>& d, std::vector<double>& e) const;
};

ModeOperator assemble_mode(const ModeEigenproblem& problem);

struct SpectrumEntry {
  int mode;
  int index;          // 0-based, ascending within the mode
  double value;       // finest-grid eigenvalue
  double extrapolated;
  double error_bar;   // |lambda_2n - lambda_n| / 3
};

struct SpectrumResult {
  std::vector<SpectrumEntry> entries;
  int grid_n;  // the finer grid (2n)
};

// Lowest `count` eigenvalues of the mode problem on grids n and 2n with
// Richardson extrapolation.
SpectrumResult solve_spectrum(const ModeEigenproblem& problem, int count);

// Eigenvector on the 2n grid for the given 0-based index.
std::pair<RadialGrid, std::vector<double>> solve_eigenvector(const ModeEigenproblem& problem,
                                                             int index);

struct ModeBoundEntry {
  int mode;
  double lambda1;        // first nonzero (mode 0) / lowest (mode != 0), extrapolated
  double error_bar;
  double margin;         // lambda1 - 2K
};

struct EigenvalueBoundReport {
  double two_K;
  std::vector<ModeBoundEntry> per_mode;
  bool bound_holds;          // min lambda1 >= 2K - 10 * bar
  bool equality_at_mode0;    // within 10 * bar
  bool equality_only_mode0;  // modes >= 1 strictly above
  double cos_profile_dev;    // sup deviation of the mode-0 eigenfunction from cos(sqrt(K) t)
  double min_margin_modes_ge1;
};

// Friedrichs first-eigenvalue bound on the K-suspension: lambda_1 >= 2K with
// equality exactly in the rotationally invariant mode.
EigenvalueBoundReport verify_eigenvalue_bound(double beta, double K, int max_mode, int n);

struct ExpansionFit {
  double slope;
  double predicted;
  int points;
  double a0;
};

// Solves the mode problem Delta u = f with Friedrichs selection and fits
// log|u - a0| against log r over r in [1e-4, 1e-3] * r_max. For the exact
// model cones the leading exponents are: mode 0 with smooth rhs -> 2 (the
// forced r^2 term); mode k with rhs supported away from the pole -> |k|/(1+beta)
// (the Friedrichs indicial branch); mode k with smooth rhs -> the smaller of
// the two.
ExpansionFit friedrichs_expansion_fit(const ModeEigenproblem& problem,
                                      const std::function<double(double)>& rhs);

// Characteristic exponents of the cusp zero-mode Euler operator
// -r^2 d^2/dr^2 - 2 r d/dr + 2, by root finding on its symbol: {1, -2}.
std::pair<double, double> cusp_zero_mode_roots();

struct CuspDecayReport {
  int j;
  double c;
  double max_weighted;       // max |u_j| e^{c/r} over the whole grid
  double max_weighted_core;  // same over r <= 0.2 r0, clear of the outer layer
  double bound_A;            // smallest A with |u_j| <= A j^{-2} e^{-c/r} on the grid
  double barrier_A;          // a r0^2: the j-uniform maximum-principle constant
  double r0;
};

// Solves (-r^2 d_r^2 - 2 r d_r + j^2/r^2 + 2) u = f with f = a e^{-c/r} and
// Dirichlet at r0. e^{-c/r} is a supersolution, so |u_j| <= (A/j^2) e^{-c/r}
// with the j-uniform A = a r0^2 (valid once 2 r0^2 >= c^2); bound_A is the
// measured sharp constant. The j^{-2} scaling itself carries an exact
// (1 - c^2/j^2 + 2r^2/j^2)^{-1} factor, so comparisons across j are made on
// the core window and are only tight for small c.
CuspDecayReport cusp_mode_decay_check(int j, double c, double a, double r0 = 0.5,
                                      int n = 1600);

}  // namespace conic
