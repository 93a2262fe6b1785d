#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <boost/math/special_functions/jacobi.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <cmath>

#include "adsosc/error.hpp"
#include "adsosc/specfun.hpp"
#include "doctest.h"

using namespace adsosc;
using namespace adsosc::specfun;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_CASE("jacobi matches boost on a parameter grid") {
  for (int n = 0; n <= 12; ++n) {
    for (double a : {0.0, 1.0, 3.0, 2.5}) {
      for (double b : {0.5, 4.2, 19.5, 99.5}) {
        for (double x : {-0.97, -0.3, 0.0, 0.41, 0.999}) {
          const double ref = boost::math::jacobi(n, a, b, x);
          CHECK(std::abs(jacobi(n, a, b, x) - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
        }
      }
    }
  }
}

TEST_CASE("jacobi low degrees in closed form") {
  CHECK(jacobi(0, 2.0, 3.0, 0.7) == 1.0);
  // P_1^{(a,b)}(x) = (a + 1) + (a + b + 2)(x - 1)/2
  CHECK(jacobi(1, 2.0, 3.0, 0.7) == doctest::Approx(3.0 + 7.0 * (-0.3) / 2.0));
  // P_n^{(a,b)}(1) = (a+1)_n / n!
  CHECK(jacobi(3, 1.5, 0.5, 1.0) == doctest::Approx(2.5 * 3.5 * 4.5 / 6.0));
  CHECK_THROWS_AS(jacobi(-1, 0.0, 0.0, 0.0), NumericError);
}

TEST_CASE("jacobi derivative identity against a finite difference") {
  const double h = 1e-5;
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 20; ++i) {
      const double a = 1.0 + 0.3 * (i % 4);
      const double b = 2.5 + 1.7 * (i % 5);
      const double x = -0.95 + 0.1 * i;
      const double fd = (-jacobi(n, a, b, x + 2 * h) + 8 * jacobi(n, a, b, x + h) -
                         8 * jacobi(n, a, b, x - h) + jacobi(n, a, b, x - 2 * h)) /
                        (12 * h);
      const double exact = jacobi_derivative(n, a, b, x);
      CHECK(std::abs(exact - fd) <= 1e-8 * std::max(1.0, std::abs(exact)));
    }
  }
  CHECK(jacobi_derivative(0, 1.0, 1.0, 0.3) == 0.0);
}

TEST_CASE("jacobi orthogonality norm matches quadrature") {
  boost::math::quadrature::tanh_sinh<double> ts;
  for (int n : {0, 2, 5}) {
    for (double a : {0.0, 1.0, 3.0}) {
      for (double b : {0.5, 2.5, 7.5}) {
        const double q = ts.integrate([&](double y) {
          const double p = jacobi(n, a, b, y);
          return std::pow(1 - y, a) * std::pow(1 + y, b) * p * p;
        }, -1.0, 1.0);
        CHECK(rel(jacobi_norm_squared(n, a, b), q) <= 1e-8);
      }
    }
  }
}

TEST_CASE("laguerre matches boost and the L_1 closed form") {
  for (int n = 0; n <= 15; ++n) {
    for (unsigned m = 0; m <= 4; ++m) {
      for (double x : {0.0, 0.3, 2.0, 7.5, 20.0}) {
        const double ref = boost::math::laguerre(n, m, x);
        CHECK(std::abs(laguerre(n, m, x) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
      }
    }
  }
  CHECK(laguerre(1, 2.5, 1.25) == doctest::Approx(1.0 + 2.5 - 1.25));
}

TEST_CASE("kummer function") {
  for (double b : {2.0, 4.0, 11.0, 31.0}) {
    for (double x : {-3.0, -0.1, 0.0, 0.05, 1.0, 6.0}) {
      CHECK(rel(kummer_phi(1.0, b, x), boost::math::hypergeometric_1F1(1.0, b, x)) <= 1e-13);
    }
  }
  // 1F1(a; a; x) = e^x
  CHECK(rel(kummer_phi(2.5, 2.5, 1.7), std::exp(1.7)) <= 1e-14);
  CHECK_THROWS_AS(kummer_phi(1.0, -2.0, 0.5), NumericError);
  CHECK_THROWS_AS(kummer_phi(1.0, 2.0, 500.0, 10), NumericError);
}

TEST_CASE("bernoulli table") {
  for (int p = 1; p <= kMaxBernoulliIndex; ++p) {
    CHECK(rel(bernoulli_even(p), boost::math::bernoulli_b2n<double>(p)) <= 1e-15);
  }
  CHECK_THROWS_AS(bernoulli_even(0), NumericError);
  CHECK_THROWS_AS(bernoulli_even(16), NumericError);
}

TEST_CASE("log gamma and double factorial ratio") {
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)));
  CHECK_THROWS_AS(log_gamma(0.0), NumericError);
  CHECK(double_factorial_ratio(0) == 1.0);
  CHECK(double_factorial_ratio(3) == doctest::Approx(15.0 / 48.0));
  // (2n-1)!!/(2n)!! = Gamma(n + 1/2) / (sqrt(pi) n!)
  CHECK(rel(double_factorial_ratio(40),
            std::exp(std::lgamma(40.5) - std::lgamma(41.0)) / std::sqrt(M_PI)) <= 1e-12);
}
