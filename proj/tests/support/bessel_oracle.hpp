#pragma once

// Independent Bessel oracle for the flat-cone Dirichlet spectra: J_nu from the
// ascending series in extended precision, zeros by scan + bisection. Kept
// separate from the mode solver on purpose; nothing here touches the
// discretization path it is used to check.

namespace conic::oracle {

// J_nu(x) for nu >= 0, x in (0, ~60], ascending series in long double.
double bessel_j(double nu, double x);

// n-th positive zero of J_nu (n >= 1).
double bessel_zero(double nu, int n);

}  // namespace conic::oracle
