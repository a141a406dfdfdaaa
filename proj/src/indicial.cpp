#include "conic/indicial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace conic {

namespace {

using Cplx = std::complex<double>;
const Cplx I(0.0, 1.0);

void require_beta(double beta) {
  if (!(beta > -1.0 && beta < 0.0)) throw InvalidSpec("beta must lie in (-1,0)");
}

Eigen::MatrixXcd Z(int r, int c) { return Eigen::MatrixXcd::Zero(r, c); }

// Binomial shift P(s) -> P(s + t).
std::vector<Eigen::MatrixXcd> shift_poly(const std::vector<Eigen::MatrixXcd>& coef, double t) {
  const int deg = static_cast<int>(coef.size()) - 1;
  std::vector<Eigen::MatrixXcd> out(coef.size(),
                                    Z(coef.front().rows(), coef.front().cols()));
  for (int d = 0; d <= deg; ++d) {
    // (s+t)^d = sum_j C(d,j) t^(d-j) s^j
    double binom = 1.0;
    std::vector<double> tow(d + 1);
    tow[d] = 1.0;
    for (int j = d - 1; j >= 0; --j) tow[j] = tow[j + 1] * t;
    for (int j = 0; j <= d; ++j) {
      out[j] += binom * tow[j] * coef[d];
      binom = binom * (d - j) / (j + 1.0);
    }
  }
  return out;
}

}  // namespace

const char* to_string(OperatorKind op) {
  switch (op) {
    case OperatorKind::ScalarLaplacian: return "scalar_laplacian";
    case OperatorKind::P: return "p";
    case OperatorKind::L: return "l";
    case OperatorKind::Delta: return "delta";
    case OperatorKind::DeltaStar: return "delta_star";
    case OperatorKind::ConformalKilling: return "conformal_killing";
    case OperatorKind::Bianchi: return "bianchi";
    case OperatorKind::Trace: return "trace";
  }
  return "?";
}

const char* to_string(RootOperator op) {
  switch (op) {
    case RootOperator::ScalarLaplacian: return "scalar";
    case RootOperator::P: return "p";
    case RootOperator::L: return "l";
  }
  return "?";
}

Eigen::MatrixXcd ModeOperatorMatrix::at(Cplx s) const {
  Eigen::MatrixXcd out = coef.back();
  for (int d = degree() - 1; d >= 0; --d) out = out * s + coef[d];
  return out;
}

Eigen::MatrixXcd ModeOperatorMatrix::deriv_at(Cplx s) const {
  Eigen::MatrixXcd out = Z(rows(), cols());
  for (int d = degree(); d >= 1; --d) out = out * s + static_cast<double>(d) * coef[d];
  return out;
}

ModeOperatorMatrix mode_matrix(OperatorKind op, double beta, int mode) {
  require_beta(beta);
  const double a = 1.0 + beta;
  const Cplx ika = I * (mode / a);  // d/dy / (1+beta) on the mode
  const double kb = mode / a;      // k_beta
  ModeOperatorMatrix M;
  M.op = op;
  M.beta = beta;
  M.mode = mode;
  switch (op) {
    case OperatorKind::ScalarLaplacian: {
      M.drop = 2;
      M.coef = {Z(1, 1), Z(1, 1), Z(1, 1)};
      M.coef[0](0, 0) = kb * kb;
      M.coef[2](0, 0) = -1.0;
      break;
    }
    case OperatorKind::P: {
      M.drop = 2;
      M.coef = {Z(2, 2), Z(2, 2), Z(2, 2)};
      M.coef[0] << 1.0 + kb * kb, 2.0 * I * kb, -2.0 * I * kb, 1.0 + kb * kb;
      M.coef[2] = -Eigen::MatrixXcd::Identity(2, 2);
      break;
    }
    case OperatorKind::L: {
      M.drop = 2;
      M.coef = {Z(3, 3), Z(3, 3), Z(3, 3)};
      M.coef[0](0, 0) = kb * kb;  // pure-trace part decouples as the scalar Laplacian
      M.coef[0](1, 1) = 4.0 + kb * kb;
      M.coef[0](2, 2) = 4.0 + kb * kb;
      M.coef[0](1, 2) = 4.0 * I * kb;
      M.coef[0](2, 1) = -4.0 * I * kb;
      M.coef[2] = -Eigen::MatrixXcd::Identity(3, 3);
      break;
    }
    case OperatorKind::Delta: {
      M.drop = 1;
      M.coef = {Z(2, 3), Z(2, 3)};
      M.coef[0] << 0.0, -2.0, -ika, -ika, ika, -2.0;
      M.coef[1] << -1.0, -1.0, 0.0, 0.0, 0.0, -1.0;
      break;
    }
    case OperatorKind::DeltaStar: {
      M.drop = 1;
      M.coef = {Z(3, 2), Z(3, 2)};
      M.coef[0] << 1.0, ika, -1.0, -ika, ika, -1.0;
      M.coef[1] << 1.0, 0.0, 1.0, 0.0, 0.0, 1.0;
      break;
    }
    case OperatorKind::ConformalKilling: {
      // (1/2) delta*_displayed with the trace row projected away
      M.drop = 1;
      M.coef = {Z(3, 2), Z(3, 2)};
      M.coef[0] << 0.0, 0.0, -0.5, -0.5 * ika, 0.5 * ika, -0.5;
      M.coef[1] << 0.0, 0.0, 0.5, 0.0, 0.0, 0.5;
      break;
    }
    case OperatorKind::Bianchi: {
      // delta + (1/2) d tr; annihilates pure trace exactly (zero first column)
      M.drop = 1;
      M.coef = {Z(2, 3), Z(2, 3)};
      M.coef[0] << 0.0, -2.0, -ika, 0.0, ika, -2.0;
      M.coef[1] << 0.0, -1.0, 0.0, 0.0, 0.0, -1.0;
      break;
    }
    case OperatorKind::Trace: {
      M.drop = 0;
      M.coef = {Z(1, 3)};
      M.coef[0] << 2.0, 0.0, 0.0;
      break;
    }
  }
  return M;
}

ModeOperatorMatrix compose(const ModeOperatorMatrix& A, const ModeOperatorMatrix& B) {
  if (A.cols() != B.rows()) throw InvalidSpec("operator composition shape mismatch");
  if (A.mode != B.mode || A.beta != B.beta)
    throw InvalidSpec("operator composition requires matching (beta, mode)");
  // A acts after B: shift A's symbol by -drop(B).
  const auto As = shift_poly(A.coef, -static_cast<double>(B.drop));
  ModeOperatorMatrix out;
  out.op = A.op;
  out.beta = A.beta;
  out.mode = A.mode;
  out.drop = A.drop + B.drop;
  const int deg = static_cast<int>(As.size() + B.coef.size()) - 2;
  out.coef.assign(deg + 1, Z(A.rows(), B.cols()));
  for (std::size_t i = 0; i < As.size(); ++i)
    for (std::size_t j = 0; j < B.coef.size(); ++j) out.coef[i + j] += As[i] * B.coef[j];
  return out;
}

namespace {

// Real rendering of a mode-k complex section c * v e^{iky} (+ conjugate):
// section(y) = cos(ky) * cos_part + sin(ky) * sin_part.
void real_parts(const Eigen::VectorXcd& v, int /*mode*/, std::vector<double>& cosp,
                std::vector<double>& sinp) {
  cosp.resize(v.size());
  sinp.resize(v.size());
  for (int i = 0; i < v.size(); ++i) {
    cosp[i] = v(i).real();
    sinp[i] = -v(i).imag();
  }
}

IndicialRoot make_root(double value, int mode, int branch, int logmult,
                       Eigen::VectorXcd section, std::string family) {
  IndicialRoot r;
  r.value = value;
  r.mode = mode;
  r.branch = branch;
  r.log_multiplicity = logmult;
  r.eigensection = std::move(section);
  real_parts(r.eigensection, mode, r.cos_part, r.sin_part);
  r.family = std::move(family);
  return r;
}

bool in_window(double v, double lo, double hi) {
  const double tol = 1e-13 * std::max({1.0, std::abs(lo), std::abs(hi)});
  return v >= lo - tol && v <= hi + tol;
}

void sort_roots(std::vector<IndicialRoot>& roots) {
  std::stable_sort(roots.begin(), roots.end(), [](const IndicialRoot& x, const IndicialRoot& y) {
    if (x.value != y.value) return x.value < y.value;
    if (x.family != y.family) return x.family < y.family;
    return x.mode < y.mode;
  });
}

// Scalar-family entries: for every Fourier index n >= 1, roots +-n/a with the two
// real sections cos(ny), sin(ny); for n = 0 the value 0 with log multiplicity 1.
void append_scalar_family(double beta, double lo, double hi, const std::string& family,
                          int dim, int slot, std::vector<IndicialRoot>& out) {
  const double a = 1.0 + beta;
  auto section = [&](Cplx amp) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(slot) = amp;
    return v;
  };
  if (in_window(0.0, lo, hi)) out.push_back(make_root(0.0, 0, 0, 1, section(1.0), family));
  const int nmax = static_cast<int>(std::floor(std::max(std::abs(lo), std::abs(hi)) * a)) + 1;
  for (int n = 1; n <= nmax; ++n) {
    for (int sgn : {+1, -1}) {
      const double v = sgn * n / a;
      if (!in_window(v, lo, hi)) continue;
      // modes +-n both reach this value; real combinations cos(ny), sin(ny)
      out.push_back(make_root(v, n, 0, 0, section(1.0), family));
      out.push_back(make_root(v, n, 0, 0, section(I), family));
    }
  }
}

// Shifted families zeta = p*shift + k/a (1-forms: shift 1, trace-free: shift 2).
// For each (p, k) the two real sections are
//   [cos(ky), p sin(ky)] and [-sin(ky), p cos(ky)]
// which correspond to the complex pairs psi_k [1, -pi] and psi_k [i, p].
void append_shifted_family(double beta, double lo, double hi, int shift,
                           const std::string& family, int dim, int slot0,
                           std::vector<IndicialRoot>& out) {
  const double a = 1.0 + beta;
  const int kmax =
      static_cast<int>(std::floor((std::max(std::abs(lo), std::abs(hi)) + shift) * a)) + 1;
  for (int p : {+1, -1}) {
    for (int k = -kmax; k <= kmax; ++k) {
      const double v = p * shift + k / a;
      if (!in_window(v, lo, hi)) continue;
      const bool collision = std::abs(v) < 1e-13;  // branches (p,k) and (-p,-k) meet at 0
      if (collision && k < 0) continue;            // same real solutions as (-p,-k)
      const int logm = collision ? 1 : 0;
      auto section = [&](Cplx c1, Cplx c2) {
        Eigen::VectorXcd s = Eigen::VectorXcd::Zero(dim);
        s(slot0) = c1;
        s(slot0 + 1) = c2;
        return s;
      };
      out.push_back(
          make_root(v, k, p, logm, section(1.0, -static_cast<double>(p) * I), family));
      out.push_back(
          make_root(v, k, p, logm, section(I, static_cast<double>(p)), family));
    }
  }
}

double table_residual(const IndicialRootTable& table) {
  double worst = 0.0;
  for (const auto& root : table.roots) {
    OperatorKind kind = OperatorKind::ScalarLaplacian;
    if (table.op == RootOperator::P) kind = OperatorKind::P;
    if (table.op == RootOperator::L) kind = OperatorKind::L;
    const auto M = mode_matrix(kind, table.beta, root.mode);
    worst = std::max(worst, (M.at(root.value) * root.eigensection).cwiseAbs().maxCoeff());
    if (root.log_multiplicity > 0)
      worst =
          std::max(worst, (M.deriv_at(root.value) * root.eigensection).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

IndicialRootTable roots_scalar(double beta, double lo, double hi) {
  require_beta(beta);
  if (!(lo <= hi)) throw InvalidSpec("window must satisfy lo <= hi");
  IndicialRootTable t{RootOperator::ScalarLaplacian, beta, lo, hi, {}, 0.0};
  append_scalar_family(beta, lo, hi, "scalar", 1, 0, t.roots);
  sort_roots(t.roots);
  t.max_residual = table_residual(t);
  return t;
}

IndicialRootTable roots_oneform(double beta, double lo, double hi) {
  require_beta(beta);
  if (!(lo <= hi)) throw InvalidSpec("window must satisfy lo <= hi");
  IndicialRootTable t{RootOperator::P, beta, lo, hi, {}, 0.0};
  append_shifted_family(beta, lo, hi, 1, "oneform", 2, 0, t.roots);
  sort_roots(t.roots);
  t.max_residual = table_residual(t);
  return t;
}

IndicialRootTable roots_symmetric2(double beta, double lo, double hi) {
  require_beta(beta);
  if (!(lo <= hi)) throw InvalidSpec("window must satisfy lo <= hi");
  IndicialRootTable t{RootOperator::L, beta, lo, hi, {}, 0.0};
  append_scalar_family(beta, lo, hi, "trace", 3, 0, t.roots);
  append_shifted_family(beta, lo, hi, 2, "tracefree", 3, 1, t.roots);
  sort_roots(t.roots);
  t.max_residual = table_residual(t);
  return t;
}

namespace {

// Orthonormal basis of the kernel of M (columns), via SVD.
Eigen::MatrixXcd kernel_basis(const Eigen::MatrixXcd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double tol = 1e-10 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= tol) ++null_dim;
  return svd.matrixV().rightCols(null_dim);
}

}  // namespace

IntertwiningReport check_intertwining(double beta, int mode, double zeta) {
  require_beta(beta);
  IntertwiningReport rep;

  const auto L = mode_matrix(OperatorKind::L, beta, mode);
  const auto P = mode_matrix(OperatorKind::P, beta, mode);
  const auto B = mode_matrix(OperatorKind::Bianchi, beta, mode);
  const auto D = mode_matrix(OperatorKind::ConformalKilling, beta, mode);

  const Eigen::MatrixXcd kerL = kernel_basis(L.at(zeta));
  const Eigen::MatrixXcd kerP = kernel_basis(P.at(zeta));
  rep.is_l_root = kerL.cols() > 0;
  rep.is_p_root = kerP.cols() > 0;
  if (!rep.is_l_root && !rep.is_p_root) {
    std::ostringstream os;
    os << "zeta = " << zeta << " (mode " << mode << ") is an indicial root of neither L nor P";
    throw NotIndicialRoot(os.str());
  }

  rep.bianchi_image_zero = rep.is_l_root;
  for (int j = 0; j < kerL.cols(); ++j) {
    const Eigen::VectorXcd phi = kerL.col(j);
    // first-order image: zeta T_B phi + B~ phi, an indicial pair of P at zeta-1
    const Eigen::VectorXcd image = B.at(zeta) * phi;
    if (image.cwiseAbs().maxCoeff() > 1e-13) rep.bianchi_image_zero = false;
    rep.bianchi_residual =
        std::max(rep.bianchi_residual, (P.at(zeta - 1.0) * image).cwiseAbs().maxCoeff());
  }
  for (int j = 0; j < kerP.cols(); ++j) {
    const Eigen::VectorXcd omega = kerP.col(j);
    const Eigen::VectorXcd image = D.at(zeta) * omega;
    rep.killing_residual =
        std::max(rep.killing_residual, (L.at(zeta - 1.0) * image).cwiseAbs().maxCoeff());
  }
  return rep;
}

XYMapReport xbeta_ybeta_map(double beta) {
  require_beta(beta);
  const double a = 1.0 + beta;
  const double zeta = -1.0 + 1.0 / a;

  // X_beta basis in complex form: psi_1 [1, i] (and its conjugate on mode -1).
  Eigen::VectorXcd u(2);
  u << 1.0, I;
  const auto P = mode_matrix(OperatorKind::P, beta, 1);
  if ((P.at(zeta) * u).cwiseAbs().maxCoeff() > 1e-10)
    throw NotIndicialRoot("X_beta basis is not a P indicial pair (internal)");

  const auto Dstar = mode_matrix(OperatorKind::DeltaStar, beta, 1);
  const Eigen::VectorXcd image = Dstar.at(zeta) * u;
  if (std::abs(image(0)) > 1e-12)
    throw Error("delta* image on X_beta unexpectedly has a trace component");
  // image = w * [0, 1, i]; the real-basis matrix of c = a1 + i a2 -> w c
  const Cplx w = image(1);
  if (std::abs(image(2) - I * w) > 1e-12 * std::max(1.0, std::abs(w)))
    throw Error("delta* image on X_beta is not of the expected [0,1,i] form");

  XYMapReport rep;
  rep.matrix << w.real(), -w.imag(), w.imag(), w.real();
  rep.determinant = std::norm(w);
  return rep;
}

std::vector<GeometricLabel> geometric_labels(double beta) {
  require_beta(beta);
  const double a = 1.0 + beta;
  std::vector<GeometricLabel> out;
  out.push_back({RootOperator::ScalarLaplacian, 0.0, false, "metric scaling"});
  out.push_back({RootOperator::ScalarLaplacian, 0.0, true, "cone angle change"});
  out.push_back({RootOperator::P, 1.0, false, "dilation r d/dr"});
  out.push_back({RootOperator::P, 1.0, false, "rotation d/dy"});
  out.push_back({RootOperator::L, -2.0 + 2.0 / a, false, "smooth tensor rate"});
  out.push_back({RootOperator::L, -2.0 + 1.0 / a, false, "singular TT rate"});
  return out;
}

std::vector<ConeRegularization> regularization_plan(const ConeAngleVector& betas, double nu) {
  if (!(nu > 0.0 && nu < 1.0)) throw InvalidSpec("nu must lie in (0,1)");
  std::vector<ConeRegularization> plan;
  double max_nu = 1.0;
  bool nu_bad = false;
  for (std::size_t j = 0; j < betas.size(); ++j) {
    const double b = betas[j];
    const double a = 1.0 + b;
    ConeRegularization c{static_cast<int>(j) + 1, b, RegularizationDecision::Identity, 0.0};
    if (b < -0.5) {
      const double rate = -2.0 + 1.0 / a;  // > 0 here; any nu below it works
      c.decision = RegularizationDecision::Identity;
      c.exponent = rate;
      if (!(nu < rate)) {
        nu_bad = true;
        max_nu = std::min(max_nu, rate);
      }
    } else {
      c.decision = RegularizationDecision::SubtractConformalKilling;
      c.exponent = -1.0 + 1.0 / a;
    }
    plan.push_back(c);
  }
  if (nu_bad) {
    std::ostringstream os;
    os << "nu = " << nu << " is not admissible; require nu < " << max_nu;
    throw InvalidNu(os.str(), max_nu);
  }
  return plan;
}

}  // namespace conic
