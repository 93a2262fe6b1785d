#include <cmath>
#include <optional>

#include "adsosc/error.hpp"
#include "adsosc/oracle.hpp"
#include "adsosc/quadrature.hpp"
#include "adsosc/wavefn.hpp"
#include "doctest.h"

using namespace adsosc;
using namespace adsosc::oracle;

namespace {

PhysicalParams hartree(double b, double lambda) {
  return make_params(UnitSystem::Hartree, 1.0, 1.0, b, lambda);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("oracle reproduces the closed-form levels") {
  const auto p = hartree(1.0, 0.01);
  const auto res = solve_radial(p, 0, 5);
  CHECK(res.extrapolated);
  CHECK(res.l == 0);
  REQUIRE(res.eigen_eps.size() == 5);
  for (int n = 0; n < 5; ++n) {
    CHECK(rel(res.eigen_eps[n], formula_eps(p, n, 0)) <= 1e-6);
    if (n > 0) CHECK(res.eigen_eps[n] > res.eigen_eps[n - 1]);
  }
}

TEST_CASE("near-flat ladder spacing") {
  const auto p = hartree(1.0, 1e-8);
  const auto res = solve_radial(p, 1, 4);
  auto flat = p;
  flat.lambda = 0.0;
  const double big_omega = std::sqrt(eta(flat)) / p.hbar;
  for (int n = 0; n + 1 < 4; ++n) {
    CHECK(rel(res.eigen_eps[n + 1] - res.eigen_eps[n], 4.0 * big_omega) <= 1e-4);
  }
}

TEST_CASE("second-order convergence before extrapolation") {
  const auto p = hartree(1.0, 0.1);
  const double cut = choose_cut(p, 1, 3, 400);
  const double exact = formula_eps(p, 2, 1);
  const double e1 = raw_eigenvalues(p, 1, 3, 400, cut)[2] - exact;
  const double e2 = raw_eigenvalues(p, 1, 3, 800, cut)[2] - exact;
  const double e3 = raw_eigenvalues(p, 1, 3, 1600, cut)[2] - exact;
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
  CHECK(e2 / e3 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("no spurious or missing levels") {
  for (double lambda : {1e-3, 1e-1}) {
    const auto p = hartree(1.0, lambda);
    for (int l : {0, 2}) {
      const double bound = 0.5 * (formula_eps(p, 4, l) + formula_eps(p, 5, l));
      const auto t = discretize_radial(p, l, 4000, choose_cut(p, l, 6, 4000));
      CHECK(tridiag::sturm_count(t, bound) == 5);
    }
  }
}

TEST_CASE("discrete eigenvector follows the closed-form state") {
  const auto p = hartree(1.0, 0.05);
  const int N = 4000;
  const double cut = arclength_extent(p.lambda);
  const auto t = discretize_radial(p, 1, N, cut);
  const auto vals = tridiag::lowest_eigenvalues(t, 3);
  const auto v = tridiag::eigenvector(t, vals[2]);
  const auto f = wavefn::kg_wavefunction(p, {2, 1});
  const double h = cut / (N + 0.5);
  const double s = std::sqrt(p.lambda);
  // undo the symmetrization, then fit one overall factor
  std::vector<double> r(N), u(N);
  double num = 0.0, den = 0.0, peak = 0.0;
  for (int i = 0; i < N; ++i) {
    const double x = (i + 0.5) * h;
    r[i] = std::sin(s * x) / s;
    u[i] = v[i] / std::sqrt(r[i]);
    num += u[i] * f(r[i]);
    den += u[i] * u[i];
    peak = std::max(peak, std::abs(f(r[i])));
  }
  double worst = 0.0;
  for (int i = 0; i < N; ++i) worst = std::max(worst, std::abs(num / den * u[i] - f(r[i])));
  CHECK(worst <= 1e-3 * peak);
}

TEST_CASE("oracle input errors") {
  auto code_of = [](auto&& fn) -> std::optional<ErrorCode> {
    try {
      fn();
    } catch (const NumericError& e) {
      return e.code();
    }
    return std::nullopt;
  };
  CHECK(code_of([] { solve_radial(hartree(1, 0), 0, 3); }) == ErrorCode::LambdaZero);
  CHECK(code_of([] { solve_radial(hartree(1, 0.01), 0, 11); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { solve_radial(hartree(1, 0.01), 0, 3, 100); }) == ErrorCode::InvalidArgument);
  SolveOptions strict;
  strict.rel_tol = 1e-18;
  strict.max_grid = 1600;
  CHECK(code_of([&] { solve_radial(hartree(1, 0.01), 0, 3, 200, strict); }) ==
        ErrorCode::ConvergenceFailure);
}

TEST_CASE("quadrature on analytic cases") {
  const auto disc = quad::integrate([](double r) { return r < 1.0 ? 1.0 : 0.0; }, Measure::Flat, 0.0);
  CHECK(std::abs(disc.value - M_PI) <= disc.error + 1e-10);
  CHECK(disc.value == doctest::Approx(M_PI).epsilon(1e-12));

  for (double lambda : {1e-3, 0.01, 0.5}) {
    const auto w = quad::integrate([](double) { return 1.0; }, Measure::AdS, lambda);
    const double exact = 2.0 * M_PI / lambda;
    CHECK(std::abs(w.value - exact) <= w.error + 4e-16 * exact);
  }

  const auto p = hartree(1.0, 0.01);
  const auto f = wavefn::kg_wavefunction(p, {3, 2});
  const auto n = quad::quad_norm(f, Measure::AdS, p.lambda);
  CHECK(std::abs(n.value - 1.0) <= n.error + 1e-14);

  // int 2 pi r e^{-r^2} dr = pi
  const auto g = quad::integrate([](double r) { return std::exp(-r * r); }, Measure::Flat, 0.0);
  CHECK(std::abs(g.value - M_PI) <= g.error + 1e-14);

  CHECK_THROWS_AS(quad::integrate([](double) { return 1.0; }, Measure::AdS, 0.0), NumericError);
  CHECK_THROWS_AS(quad::adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-15, 0.0, 10),
                  NumericError);
}
