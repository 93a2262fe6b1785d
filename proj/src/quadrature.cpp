#include "adsosc/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include "adsosc/error.hpp"

namespace adsosc::quad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;
using Gauss = boost::math::quadrature::gauss<double, 30>;

struct Piece {
  double a;
  double b;
  double value;
  double error;
  double l1;
  bool operator<(const Piece& o) const { return error < o.error; }
};

// Boost's own adaptive driver does not rescale the error estimate of its leaf
// intervals, so only the fixed rules are used here.
template <class F>
Piece rule(const F& f, double a, double b) {
  double l1 = 0.0;
  const double k = Kronrod::integrate(f, a, b, 0, 0.0, nullptr, &l1);
  const double g = Gauss::integrate(f, a, b);
  return {a, b, k, std::abs(k - g), std::abs(l1)};
}

}  // namespace

QuadResult adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                    double rel_tol, int max_intervals) {
  std::function<double(double)> g = f;
  if (std::isinf(b)) {
    // x = a + t / (1 - t) on [0, 1)
    g = [&f, a](double t) {
      const double s = 1.0 - t;
      return f(a + t / s) / (s * s);
    };
    a = 0.0;
    b = 1.0;
  }
  std::priority_queue<Piece> heap;
  heap.push(rule(g, a, b));
  double value = heap.top().value;
  double error = heap.top().error;
  double l1 = heap.top().l1;
  int intervals = 1;
  while (error > std::max(abs_tol, rel_tol * l1)) {
    if (intervals >= max_intervals || !std::isfinite(error)) {
      std::ostringstream os;
      os << "achieved error " << error << " exceeds " << std::max(abs_tol, rel_tol * l1)
         << " after " << intervals << " intervals (value " << value << ")";
      throw NumericError(ErrorCode::QuadratureFailure, os.str());
    }
    const Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Piece left = rule(g, worst.a, mid);
    const Piece right = rule(g, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // re-add from the leaves to shed the running-update rounding
  value = 0.0;
  error = 0.0;
  l1 = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    l1 += heap.top().l1;
    heap.pop();
  }
  return {value, error, l1};
}

QuadResult integrate(const std::function<double(double)>& F, Measure measure, double lambda,
                     double abs_tol) {
  if (measure == Measure::AdS) {
    if (!(lambda > 0.0)) {
      throw NumericError(ErrorCode::LambdaZero, "AdS measure needs lambda > 0");
    }
    const double scale = kTwoPi / lambda;
    auto in_rho = [&](double rho) {
      const double r = std::sqrt((1.0 - rho) * (1.0 + rho) / lambda);
      return F(r);
    };
    const QuadResult q = adaptive(in_rho, 0.0, 1.0, abs_tol / scale);
    return {scale * q.value, scale * q.error, scale * q.l1};
  }
  return adaptive([&](double r) { return kTwoPi * r * F(r); }, 0.0,
                  std::numeric_limits<double>::infinity(), abs_tol);
}

QuadResult quad_inner(const std::function<double(double)>& f,
                      const std::function<double(double)>& g, Measure measure, double lambda,
                      double abs_tol) {
  return integrate([&](double r) { return f(r) * g(r); }, measure, lambda, abs_tol);
}

QuadResult quad_norm(const std::function<double(double)>& f, Measure measure, double lambda,
                     double abs_tol) {
  return integrate(
      [&](double r) {
        const double v = f(r);
        return v * v;
      },
      measure, lambda, abs_tol);
}

}  // namespace adsosc::quad
