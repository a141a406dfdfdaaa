#include "conic/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace conic {

int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& off, double x) {
  const std::size_t n = diag.size();
  double pivmin = std::numeric_limits<double>::min();
  for (double e : off) pivmin = std::max(pivmin, e * e);
  pivmin = std::max(pivmin * std::numeric_limits<double>::epsilon() *
                        std::numeric_limits<double>::epsilon(),
                    std::numeric_limits<double>::min());
  int cnt = 0;
  double q = diag[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++cnt;
  for (std::size_t i = 1; i < n; ++i) {
    q = diag[i] - x - off[i - 1] * off[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++cnt;
  }
  return cnt;
}

std::vector<double> lowest_eigenvalues(const std::vector<double>& diag,
                                       const std::vector<double>& off, int m) {
  const std::size_t n = diag.size();
  if (n == 0 || m <= 0) return {};
  m = std::min<std::size_t>(m, n);
  // Gershgorin interval
  double lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  std::vector<double> out(m);
  for (int idx = 1; idx <= m; ++idx) {
    double a = lo, b = hi;
    for (int it = 0; it < 250; ++it) {
      // tolerance tracks the bracket location, not the Gershgorin spread
      if (b - a <= 1e-15 * std::max(1.0, std::abs(a) + std::abs(b))) break;
      const double mid = 0.5 * (a + b);
      if (sturm_count_below(diag, off, mid) >= idx)
        b = mid;
      else
        a = mid;
    }
    out[idx - 1] = 0.5 * (a + b);
  }
  return out;
}

std::vector<double> solve_tridiag(std::vector<double> sub, std::vector<double> diag,
                                  std::vector<double> sup, std::vector<double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  // LU with partial pivoting; fill-in creates a second superdiagonal.
  std::vector<double> sup2(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(sub[i]) > std::abs(diag[i])) {
      std::swap(diag[i], sub[i]);
      std::swap(sup[i], diag[i + 1]);
      if (i + 2 < n) std::swap(sup2[i], sup[i + 1]);
      std::swap(rhs[i], rhs[i + 1]);
    }
    if (diag[i] == 0.0) diag[i] = std::numeric_limits<double>::min();
    const double f = sub[i] / diag[i];
    diag[i + 1] -= f * sup[i];
    if (i + 2 < n) sup[i + 1] -= f * sup2[i];
    rhs[i + 1] -= f * rhs[i];
  }
  std::vector<double> x(n);
  if (diag[n - 1] == 0.0) diag[n - 1] = std::numeric_limits<double>::min();
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  if (n >= 2) {
    x[n - 2] = (rhs[n - 2] - sup[n - 2] * x[n - 1]) / diag[n - 2];
    for (std::size_t ii = n - 2; ii-- > 0;) {
      x[ii] = (rhs[ii] - sup[ii] * x[ii + 1] - sup2[ii] * x[ii + 2]) / diag[ii];
    }
  }
  return x;
}

std::vector<double> eigenvector(const std::vector<double>& diag, const std::vector<double>& off,
                                double lambda) {
  const std::size_t n = diag.size();
  const double shift = lambda + 1e-11 * std::max(1.0, std::abs(lambda));
  // deterministic start with components in every symmetry class
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + std::sin(1.0 + 2.399 * i);
  for (int pass = 0; pass < 4; ++pass) {
    std::vector<double> d(n), sub(off.size()), sup(off.size());
    for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) sub[i] = sup[i] = off[i];
    sub.resize(n, 0.0);
    sup.resize(n, 0.0);
    x = solve_tridiag(sub, d, sup, x);
    double nrm = 0.0;
    for (double v : x) nrm = std::max(nrm, std::abs(v));
    if (nrm == 0.0) throw std::runtime_error("inverse iteration collapsed");
    for (double& v : x) v /= nrm;
  }
  // deterministic sign: largest-magnitude component positive
  double best = 0.0;
  for (double v : x)
    if (std::abs(v) > std::abs(best)) best = v;
  if (best < 0.0)
    for (double& v : x) v = -v;
  return x;
}

}  // namespace conic
