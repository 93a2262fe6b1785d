#include "adsosc/specfun.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "adsosc/error.hpp"

namespace adsosc::specfun {

namespace {

void require_degree(int n) {
  if (n < 0) {
    throw NumericError(ErrorCode::InvalidArgument,
                       "polynomial degree must be >= 0, got " + std::to_string(n));
  }
}

}  // namespace

double jacobi(int n, double a, double b, double x) {
  require_degree(n);
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = 0.5 * (2.0 * (a + 1.0) + (a + b + 2.0) * (x - 1.0));
  const double ab = a + b;
  const double a2b2 = a * a - b * b;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + ab;
    const double c0 = 2.0 * k * (k + ab) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a2b2);
    const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double p_next = (c1 * p - c2 * p_prev) / c0;
    p_prev = p;
    p = p_next;
  }
  if (!std::isfinite(p)) {
    std::ostringstream os;
    os << "P_" << n << "^(" << a << "," << b << ")(" << x << ") overflowed";
    throw NumericError(ErrorCode::DomainViolation, os.str());
  }
  return p;
}

double jacobi_derivative(int n, double a, double b, double x) {
  require_degree(n);
  if (n == 0) return 0.0;
  return 0.5 * (n + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, x);
}

double laguerre(int n, double alpha, double x) {
  require_degree(n);
  if (n == 0) return 1.0;
  double l_prev = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double l_next = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * l_prev) / (k + 1.0);
    l_prev = l;
    l = l_next;
  }
  return l;
}

double kummer_phi(double a, double b, double x, int max_terms) {
  if (b <= 0.0 && b == std::floor(b)) {
    std::ostringstream os;
    os << "1F1 undefined for b = " << b;
    throw NumericError(ErrorCode::DomainViolation, os.str());
  }
  if (x < 0.0) return std::exp(x) * kummer_phi(b - a, b, -x, max_terms);

  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < max_terms; ++k) {
    term *= (a + k) * x / ((b + k) * (k + 1.0));
    sum += term;
    if (term == 0.0 || std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  std::ostringstream os;
  os << "1F1(" << a << "; " << b << "; " << x << ") not converged after " << max_terms
     << " terms";
  throw NumericError(ErrorCode::SeriesDivergence, os.str());
}

double bernoulli_even(int p) {
  // B_2, B_4, ..., B_30
  static constexpr std::array<double, kMaxBernoulliIndex> table = {
      1.0 / 6.0,
      -1.0 / 30.0,
      1.0 / 42.0,
      -1.0 / 30.0,
      5.0 / 66.0,
      -691.0 / 2730.0,
      7.0 / 6.0,
      -3617.0 / 510.0,
      43867.0 / 798.0,
      -174611.0 / 330.0,
      854513.0 / 138.0,
      -236364091.0 / 2730.0,
      8553103.0 / 6.0,
      -23749461029.0 / 870.0,
      8615841276005.0 / 14322.0,
  };
  if (p < 1 || p > kMaxBernoulliIndex) {
    throw NumericError(ErrorCode::InvalidArgument,
                       "Bernoulli table covers B_2..B_30, requested B_" + std::to_string(2 * p));
  }
  return table[static_cast<std::size_t>(p - 1)];
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "log_gamma requires x > 0, got " << x;
    throw NumericError(ErrorCode::DomainViolation, os.str());
  }
  return std::lgamma(x);
}

double double_factorial_ratio(int n) {
  require_degree(n);
  double r = 1.0;
  for (int k = 1; k <= n; ++k) r *= (2.0 * k - 1.0) / (2.0 * k);
  return r;
}

double jacobi_norm_squared(int n, double a, double b) {
  require_degree(n);
  const double s = a + b + 1.0 + 2.0 * n;
  const double log_num = (a + b + 1.0) * std::log(2.0) + log_gamma(a + n + 1.0) +
                         log_gamma(b + n + 1.0);
  const double log_den = log_gamma(n + 1.0) + log_gamma(a + b + n + 1.0);
  return std::exp(log_num - log_den) / s;
}

}  // namespace adsosc::specfun
