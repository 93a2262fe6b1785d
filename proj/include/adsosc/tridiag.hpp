#pragma once

#include <cstddef>
#include <vector>

// Real symmetric tridiagonal eigenproblems: Sturm-sequence bisection for
// eigenvalues, inverse iteration for eigenvectors.

namespace adsosc::tridiag {

struct SymTridiag {
  std::vector<double> diag;     // size n
  std::vector<double> offdiag;  // size n - 1
  std::size_t size() const noexcept { return diag.size(); }
};

/// Number of eigenvalues strictly below x.
std::size_t sturm_count(const SymTridiag& t, double x);

/// Interval containing the whole spectrum (Gershgorin).
std::pair<double, double> gershgorin_bounds(const SymTridiag& t);

/// The k lowest eigenvalues in ascending order, each bracketed by bisection
/// down to abs_tol + rel_tol * |value|.
std::vector<double> lowest_eigenvalues(const SymTridiag& t, std::size_t k,
                                       double rel_tol = 1e-15, double abs_tol = 0.0);

/// Unit eigenvector for an accurate eigenvalue, by inverse iteration with a
/// partially pivoted tridiagonal LU.
std::vector<double> eigenvector(const SymTridiag& t, double eigenvalue, int iterations = 4);

}  // namespace adsosc::tridiag
