#pragma once

// Special functions used by the closed-form spectra, wavefunctions and the
// partition-function series. Everything here is pure and self-contained.

namespace adsosc::specfun {

/// Jacobi polynomial P_n^{(a,b)}(x) by forward three-term recurrence.
double jacobi(int n, double a, double b, double x);

/// d/dx P_n^{(a,b)}(x) = (n + a + b + 1)/2 * P_{n-1}^{(a+1,b+1)}(x); zero for n = 0.
double jacobi_derivative(int n, double a, double b, double x);

/// Generalized Laguerre polynomial L_n^{alpha}(x).
double laguerre(int n, double alpha, double x);

/// Kummer's confluent hypergeometric function 1F1(a; b; x), summed until the
/// term ratio drops below machine precision. Negative x goes through Kummer's
/// transformation so the series never alternates.
double kummer_phi(double a, double b, double x, int max_terms = 10000);

/// Bernoulli number B_{2p} for 1 <= p <= 15 (B_2 = 1/6, ..., B_30).
double bernoulli_even(int p);
inline constexpr int kMaxBernoulliIndex = 15;

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// (2n-1)!! / (2n)!!, with the n = 0 value equal to 1.
double double_factorial_ratio(int n);

/// Right-hand side of the Jacobi orthogonality relation:
/// int_{-1}^{1} (1-y)^a (1+y)^b [P_n^{(a,b)}(y)]^2 dy.
double jacobi_norm_squared(int n, double a, double b);

}  // namespace adsosc::specfun
