#pragma once

#include <vector>

namespace conic {

// Symmetric tridiagonal eigenvalue tools: Sturm-count bisection for the lowest
// eigenvalues plus inverse iteration for eigenvectors. Deterministic.

// Number of eigenvalues of (diag, off) strictly below x.
int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& off, double x);

// The m smallest eigenvalues, ascending.
std::vector<double> lowest_eigenvalues(const std::vector<double>& diag,
                                       const std::vector<double>& off, int m);

// Eigenvector for an isolated eigenvalue lambda via inverse iteration;
// normalized to unit max-norm with the largest component positive.
std::vector<double> eigenvector(const std::vector<double>& diag, const std::vector<double>& off,
                                double lambda);

// Solves the tridiagonal system (sub, diag, sup) x = rhs with partial pivoting.
std::vector<double> solve_tridiag(std::vector<double> sub, std::vector<double> diag,
                                  std::vector<double> sup, std::vector<double> rhs);

}  // namespace conic
