#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "adsosc/error.hpp"
#include "adsosc/tridiag.hpp"
#include "doctest.h"

using namespace adsosc;
using namespace adsosc::tridiag;

namespace {

SymTridiag random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  SymTridiag t;
  for (int i = 0; i < n; ++i) t.diag.push_back(g(rng));
  for (int i = 0; i + 1 < n; ++i) t.offdiag.push_back(g(rng));
  return t;
}

Eigen::VectorXd eigen_values(const SymTridiag& t) {
  const int n = static_cast<int>(t.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = t.diag[i];
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = t.offdiag[i];
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

}  // namespace

TEST_CASE("bisection matches a dense solver on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial * 7;
    const auto t = random_matrix(rng, n);
    const auto ref = eigen_values(t);
    const std::size_t k = std::min<std::size_t>(10, n);
    const auto ours = lowest_eigenvalues(t, k);
    for (std::size_t i = 0; i < k; ++i) CHECK(ours[i] == doctest::Approx(ref[i]).epsilon(1e-12));
    CHECK(sturm_count(t, ref[n - 1] + 1.0) == static_cast<std::size_t>(n));
    CHECK(sturm_count(t, ref[0] - 1.0) == 0);
  }
}

TEST_CASE("discrete Laplacian spectrum") {
  // -u'' with Dirichlet ends: 2 - 2 cos(k pi / (n + 1))
  const int n = 500;
  SymTridiag t{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
  const auto vals = lowest_eigenvalues(t, 6);
  for (int k = 1; k <= 6; ++k) {
    CHECK(vals[k - 1] == doctest::Approx(2.0 - 2.0 * std::cos(k * M_PI / (n + 1))).epsilon(1e-10));
  }
  const auto v = eigenvector(t, vals[2]);
  double norm = 0.0;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    norm += v[i] * v[i];
    const double exact = std::sqrt(2.0 / (n + 1)) * std::sin(3 * (i + 1) * M_PI / (n + 1));
    worst = std::max(worst, std::abs(v[i] - exact));
  }
  CHECK(norm == doctest::Approx(1.0));
  CHECK(worst <= 1e-8);
}

TEST_CASE("inverse iteration residual on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_matrix(rng, 60);
    const auto vals = lowest_eigenvalues(t, 4);
    for (double lambda : vals) {
      const auto v = eigenvector(t, lambda);
      double res = 0.0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        double tv = t.diag[i] * v[i];
        if (i > 0) tv += t.offdiag[i - 1] * v[i - 1];
        if (i + 1 < t.size()) tv += t.offdiag[i] * v[i + 1];
        res = std::max(res, std::abs(tv - lambda * v[i]));
      }
      CHECK(res <= 1e-9);
    }
  }
}

TEST_CASE("input checks") {
  SymTridiag t{{1.0, 2.0}, {0.5}};
  CHECK_THROWS_AS(lowest_eigenvalues(t, 3), NumericError);
  SymTridiag bad{{1.0, 2.0}, {}};
  CHECK_THROWS_AS(lowest_eigenvalues(bad, 1), NumericError);
}
