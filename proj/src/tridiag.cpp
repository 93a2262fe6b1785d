#include "adsosc/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "adsosc/error.hpp"

namespace adsosc::tridiag {

std::size_t sturm_count(const SymTridiag& t, double x) {
  const std::size_t n = t.size();
  std::size_t count = 0;
  double q = 1.0;
  const double tiny = std::numeric_limits<double>::min() * 1e10;
  for (std::size_t i = 0; i < n; ++i) {
    const double e2 = i == 0 ? 0.0 : t.offdiag[i - 1] * t.offdiag[i - 1];
    q = t.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin_bounds(const SymTridiag& t) {
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(t.offdiag[i]);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  return {lo, hi};
}

std::vector<double> lowest_eigenvalues(const SymTridiag& t, std::size_t k, double rel_tol,
                                       double abs_tol) {
  const std::size_t n = t.size();
  if (t.offdiag.size() + 1 != n && n != 0) {
    throw NumericError(ErrorCode::InvalidArgument, "off-diagonal must have size n - 1");
  }
  if (k > n) throw NumericError(ErrorCode::InvalidArgument, "asked for more eigenvalues than n");
  auto [glo, ghi] = gershgorin_bounds(t);
  std::vector<double> values(k);
  double lower = glo;
  for (std::size_t j = 0; j < k; ++j) {
    // eigenvalue j is the smallest x with sturm_count(x) > j
    double a = lower;
    double b = ghi;
    while (true) {
      const double mid = 0.5 * (a + b);
      if (b - a <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b)) || mid <= a || mid >= b) {
        break;
      }
      if (sturm_count(t, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    values[j] = 0.5 * (a + b);
    lower = a;
  }
  return values;
}

std::vector<double> eigenvector(const SymTridiag& t, double eigenvalue, int iterations) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  if (n == 1) return {1.0};
  // Perturb the shift slightly so the factorization stays nonsingular.
  auto [glo, ghi] = gershgorin_bounds(t);
  const double scale = std::max({std::abs(glo), std::abs(ghi), 1.0});
  const double shift = eigenvalue + 64.0 * std::numeric_limits<double>::epsilon() * scale;

  // LU of (T - shift I) with partial pivoting: U has up to two superdiagonals.
  std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), mult(n, 0.0);
  std::vector<char> swapped(n, 0);
  std::vector<double> dl(t.offdiag), d(n), du(t.offdiag);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = std::numeric_limits<double>::epsilon() * scale;
      mult[i] = dl[i] / d[i];
      u0[i] = d[i];
      u1[i] = du[i];
      u2[i] = 0.0;
      d[i + 1] -= mult[i] * du[i];
    } else {
      swapped[i] = 1;
      mult[i] = d[i] / dl[i];
      u0[i] = dl[i];
      u1[i] = d[i + 1];
      u2[i] = i + 1 < n - 1 ? du[i + 1] : 0.0;
      const double next_d = du[i] - mult[i] * d[i + 1];
      if (i + 1 < n - 1) du[i + 1] = -mult[i] * du[i + 1];
      d[i + 1] = next_d;
    }
  }
  u0[n - 1] = d[n - 1] == 0.0 ? std::numeric_limits<double>::epsilon() * scale : d[n - 1];

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 0; it < iterations; ++it) {
    // forward: apply row swaps and L^{-1}
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(v[i], v[i + 1]);
      v[i + 1] -= mult[i] * v[i];
    }
    // back substitution with U
    for (std::size_t ii = n; ii-- > 0;) {
      double s = v[ii];
      if (ii + 1 < n) s -= u1[ii] * v[ii + 1];
      if (ii + 2 < n) s -= u2[ii] * v[ii + 2];
      v[ii] = s / u0[ii];
    }
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (double& x : v) x /= norm;
  }
  // fix the sign so the first significant component is positive
  auto it = std::find_if(v.begin(), v.end(), [](double x) { return std::abs(x) > 1e-8; });
  if (it != v.end() && *it < 0.0) {
    for (double& x : v) x = -x;
  }
  return v;
}

}  // namespace adsosc::tridiag
