#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "conic/errors.hpp"
#include "conic/geometry.hpp"

namespace conic {

// Operators on the flat model cone g_beta = dr^2 + (1+beta)^2 r^2 dy^2,
// reduced to the Fourier mode e^{iky}. Section bases:
//   scalars:            (u)
//   1-forms:            eta = eta1 dr + eta2 (1+beta) r dy            -> (eta1, eta2)
//   symmetric 2-tensors: h = p1 g_beta + p2 (dr^2 - (1+beta)^2 r^2 dy^2)
//                          + p3 (1+beta) r (dr dy + dy dr)            -> (p1, p2, p3)
enum class OperatorKind {
  ScalarLaplacian,   // 1x1, second order
  P,                 // 2x2 rough Laplacian realization on 1-forms
  L,                 // 3x3 rough Laplacian realization on symmetric 2-tensors
  Delta,             // divergence S^2 -> 1-forms, 2x3
  DeltaStar,         // symmetrized gradient 1-forms -> S^2 as displayed, 3x2
  ConformalKilling,  // trace-free part of delta*, 3x2 (zero first row)
  Bianchi,           // delta + (1/2) d tr, 2x3 (zero first column)
  Trace,             // 1x3, picks the pure-trace coefficient (tr h = 2 p1)
};

const char* to_string(OperatorKind op);

// Mode-reduced conic operator  r^{-drop} * sum_d coef[d] (r d/dr)^d
// acting on mode-k coefficient vectors.
struct ModeOperatorMatrix {
  OperatorKind op;
  double beta;
  int mode;
  int drop;
  std::vector<Eigen::MatrixXcd> coef;  // coef[d] multiplies (r d/dr)^d

  int rows() const { return static_cast<int>(coef.front().rows()); }
  int cols() const { return static_cast<int>(coef.front().cols()); }
  int degree() const { return static_cast<int>(coef.size()) - 1; }

  // Polynomial evaluation at s (the r d/dr symbol).
  Eigen::MatrixXcd at(std::complex<double> s) const;
  // d/ds of the polynomial at s (log-branch checks).
  Eigen::MatrixXcd deriv_at(std::complex<double> s) const;
};

ModeOperatorMatrix mode_matrix(OperatorKind op, double beta, int mode);

// Operator composition A after B, with the commutation shift
// (r^-a P(s)) (r^-b Q(s)) = r^-(a+b) P(s-b) Q(s).
ModeOperatorMatrix compose(const ModeOperatorMatrix& A, const ModeOperatorMatrix& B);

struct IndicialRoot {
  double value;
  int mode;                      // signed Fourier index k
  int branch;                    // 0 scalar/trace; +1/-1 the +-1 or +-2 shift branch
  int log_multiplicity;
  Eigen::VectorXcd eigensection;   // complex coefficients in the e^{iky} basis
  std::vector<double> cos_part;    // real rendering: section = cos(ky) cos_part + sin(ky) sin_part
  std::vector<double> sin_part;
  std::string family;              // "scalar", "oneform", "trace", "tracefree"
};

enum class RootOperator { ScalarLaplacian, P, L };

const char* to_string(RootOperator op);

struct IndicialRootTable {
  RootOperator op;
  double beta;
  double lo, hi;
  std::vector<IndicialRoot> roots;  // sorted by (value, family, mode)
  double max_residual;              // worst eigensection residual against the mode matrices
};

IndicialRootTable roots_scalar(double beta, double lo, double hi);
IndicialRootTable roots_oneform(double beta, double lo, double hi);
IndicialRootTable roots_symmetric2(double beta, double lo, double hi);

// Pushes every indicial pair of L at (zeta, mode) through the Bianchi operator and
// verifies the image is an indicial pair of P at zeta-1; same for P pairs through
// the conformal Killing operator into L. Throws NotIndicialRoot when (zeta, mode)
// is a root of neither.
struct IntertwiningReport {
  bool is_l_root = false;
  bool is_p_root = false;
  double bianchi_residual = 0.0;  // max |P(zeta-1) applied to B-image|
  double killing_residual = 0.0;  // max |L(zeta-1) applied to D-image|
  bool bianchi_image_zero = false;  // pure-trace sections are annihilated exactly
};
IntertwiningReport check_intertwining(double beta, int mode, double zeta);

// The map X_beta -> Y_beta induced by the displayed delta* on the mode +-1
// indicial pairs of P at zeta = -1 + 1/(1+beta), expressed in the real bases
// (a1,a2) -> (alpha2', alpha3').
struct XYMapReport {
  Eigen::Matrix2d matrix;
  double determinant;
};
XYMapReport xbeta_ybeta_map(double beta);

struct GeometricLabel {
  RootOperator op;
  double root;
  bool log_branch;
  std::string label;
};
std::vector<GeometricLabel> geometric_labels(double beta);

enum class RegularizationDecision { Identity, SubtractConformalKilling };

struct ConeRegularization {
  int cone;  // 1-based
  double beta;
  RegularizationDecision decision;
  double exponent;  // -1 + 1/(1+beta) when subtracting, else the admissible decay rate
};

// Per-cone bookkeeping for regularizing singular TT tensors at weight nu.
std::vector<ConeRegularization> regularization_plan(const ConeAngleVector& betas, double nu);

}  // namespace conic
