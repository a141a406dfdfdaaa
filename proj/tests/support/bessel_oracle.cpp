#include "bessel_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace conic::oracle {

double bessel_j(double nu, double x) {
  if (!(nu >= 0.0) || !(x > 0.0)) throw std::invalid_argument("bessel_j domain");
  const long double lx = static_cast<long double>(x) / 2.0L;
  const long double lnu = static_cast<long double>(nu);
  long double sum = 0.0L;
  long double sign = 1.0L;
  for (int m = 0; m < 200; ++m) {
    const long double lt = (lnu + 2.0L * m) * std::log(lx) - std::lgamma((long double)(m + 1)) -
                           std::lgamma(lnu + m + 1.0L);
    const long double term = sign * std::exp(lt);
    sum += term;
    if (m > x / 2 + 4 && std::fabs((double)term) < 1e-24 * std::max(1.0, std::fabs((double)sum)))
      break;
    sign = -sign;
  }
  return static_cast<double>(sum);
}

double bessel_zero(double nu, int n) {
  if (n < 1) throw std::invalid_argument("zero index must be >= 1");
  // scan upward from just past nu (J_nu > 0 there), bracketing sign changes
  double x = std::max(nu, 1e-3) + 1e-3;
  double prev = bessel_j(nu, x);
  int found = 0;
  const double step = 0.05;
  for (int it = 0; it < 40000; ++it) {
    const double xn = x + step;
    const double cur = bessel_j(nu, xn);
    if ((prev > 0 && cur < 0) || (prev < 0 && cur > 0)) {
      ++found;
      if (found == n) {
        double a = x, b = xn;
        for (int k = 0; k < 200; ++k) {
          const double mid = 0.5 * (a + b);
          const double fm = bessel_j(nu, mid);
          if ((fm > 0) == (prev > 0))
            a = mid;
          else
            b = mid;
          if (b - a < 1e-15 * b) break;
        }
        return 0.5 * (a + b);
      }
    }
    prev = cur;
    x = xn;
  }
  throw std::runtime_error("bessel zero scan failed");
}

}  // namespace conic::oracle
