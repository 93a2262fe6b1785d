#include <cmath>
#include <limits>
#include <random>

#include "adsosc/error.hpp"
#include "adsosc/spectrum.hpp"
#include "doctest.h"

using namespace adsosc;
using namespace adsosc::spectrum;

namespace {

PhysicalParams hartree(double b, double lambda) {
  return make_params(UnitSystem::Hartree, 1.0, 1.0, b, lambda);
}

}  // namespace

TEST_CASE("undeformed ground state without field sits at the rest energy") {
  const auto p = hartree(0.0, 0.0);
  CHECK(kg_energy(p, {0, 0}).value == p.rest_energy());
  CHECK(kg_nonrel_energy(p, {0, 0}).value == 0.0);
}

TEST_CASE("scalar DKP, branches and vector DKP reduction") {
  for (double b : {0.0, 1.0, 25.0}) {
    for (double lambda : {0.0, 1e-3, 0.3}) {
      const auto p = hartree(b, lambda);
      for (int n = 0; n <= 6; ++n) {
        for (int l = 0; l <= 4; ++l) {
          const auto kg = kg_energy(p, {n, l});
          const auto dkp = dkp_scalar_energy(p, {n, l});
          CHECK(kg.value == dkp.value);
          CHECK(dkp.scheme == Scheme::DkpScalar);
          CHECK(kg_energy(p, {n, l, 0, Branch::Minus}).value == -kg.value);
          CHECK(dkp_vector_nonrel_energy(p, {n, l, 0}).value == kg_nonrel_energy(p, {n, l}).value);
          CHECK(dkp_vector_nonrel_energy(p, {n, l, 0}, VectorDkpForm::Verbatim).value ==
                doctest::Approx(kg_nonrel_energy(p, {n, l}).value + omega_tilde(p) * l * (p.hbar - 1.0)));
        }
      }
    }
  }
}

TEST_CASE("radicand never drops below one for physical parameters") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const auto p = make_params(UnitSystem::Hartree, 0.1 + 5 * u(rng), 5 * u(rng), 100 * u(rng),
                               u(rng) < 0.1 ? 0.0 : std::pow(10.0, -6 + 6 * u(rng)));
    const int n = static_cast<int>(20 * u(rng));
    const int l = static_cast<int>(20 * u(rng));
    CHECK(kg_radicand(p, n, l) >= 1.0 - 1e-15);
  }
}

TEST_CASE("non-relativistic limit") {
  const auto p = hartree(1.0, 0.01);
  for (int n = 0; n <= 5; ++n) {
    for (int l = 0; l <= 3; ++l) {
      const double enr = kg_nonrel_energy(p, {n, l}).value;
      const double erel = kg_energy(p, {n, l}).value - p.rest_energy();
      // E - mc^2 = E_nr - E_nr^2 / (2 m c^2) + ..., plus rounding of the subtraction
      const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * p.rest_energy();
      CHECK(std::abs(erel - enr) <= enr * enr / p.rest_energy() + rounding);
    }
  }
}

TEST_CASE("level spacing") {
  const auto p = hartree(1.0, 0.01);
  for (int n : {0, 3, 50}) {
    const double direct = kg_energy(p, {n + 1, 1}).value - kg_energy(p, {n, 1}).value;
    CHECK(level_spacing(p, n, 1) == doctest::Approx(direct).epsilon(1e-9));
  }
  CHECK(asymptotic_spacing(p) == doctest::Approx(2.0 * p.c * 0.1));
  const double big = level_spacing(p, 1000000, 0);
  CHECK(std::abs(big - asymptotic_spacing(p)) / asymptotic_spacing(p) <= 1e-3);
}

TEST_CASE("deformation shift is the cancellation-free energy difference") {
  for (double lambda : {0.5, 1e-2}) {
    const auto p = hartree(1.0, lambda);
    auto flat = p;
    flat.lambda = 0.0;
    for (int n = 0; n <= 3; ++n) {
      const double naive = kg_energy(p, {n, 2}).value - kg_energy(flat, {n, 2}).value;
      CHECK(deformation_shift(p, n, 2) == doctest::Approx(naive).epsilon(1e-8));
    }
  }
  CHECK(deformation_shift(hartree(1.0, 0.0), 2, 1) == 0.0);
}

TEST_CASE("first-order expansion") {
  const auto flat = hartree(1.0, 0.0);
  for (int n = 0; n <= 4; ++n) {
    const auto fo = first_order_expansion(flat, n);
    CHECK(fo.e0 == doctest::Approx(kg_energy(flat, {n, 0}).value).epsilon(1e-14));
    CHECK(fo.delta_e() == 0.0);
  }
  // residual against the exact shift falls by ~100x per decade of lambda
  const double r1 = std::abs(deformation_shift(hartree(1.0, 1e-4), 2, 0) -
                             first_order_expansion(hartree(1.0, 1e-4), 2).delta_e());
  const double r2 = std::abs(deformation_shift(hartree(1.0, 1e-3), 2, 0) -
                             first_order_expansion(hartree(1.0, 1e-3), 2).delta_e());
  CHECK(std::log10(r2 / r1) == doctest::Approx(2.0).epsilon(0.05));
  CHECK_THROWS_AS(first_order_expansion(make_params(UnitSystem::Hartree, 1, 0, 1, 0.01), 0),
                  NumericError);
}

TEST_CASE("vector DKP imaginary frequency") {
  // w~ = w - lambda hbar / 2m makes the m_s = +1 frequency squared negative
  const auto p = make_params(UnitSystem::Hartree, 1.0, 1.0, 2.0 * constants::c_hartree, 0.0);
  CHECK_NOTHROW(dkp_vector_nonrel_energy(p, {0, 0, -1}));
  try {
    dkp_vector_nonrel_energy(p, {0, 0, 1});
    FAIL("expected ImaginaryFrequency");
  } catch (const NumericError& e) {
    CHECK(e.code() == ErrorCode::ImaginaryFrequency);
  }
}

TEST_CASE("spin splitting of the vector DKP levels") {
  const auto p = hartree(10.0, 0.01);
  const double up = dkp_vector_nonrel_energy(p, {1, 1, 1}).value;
  const double zero = dkp_vector_nonrel_energy(p, {1, 1, 0}).value;
  const double down = dkp_vector_nonrel_energy(p, {1, 1, -1}).value;
  CHECK(up != zero);
  CHECK(down != zero);
  CHECK(std::isfinite(dkp_vector_nonrel_energy(p, {1, 1, 1}, VectorDkpForm::Verbatim).value));
}

TEST_CASE("Penning trap bound") {
  const auto b = lambda_upper_bound(6.0, 1e10);
  CHECK(std::abs(b.lambda_max - 3.36e-4) / 3.36e-4 <= 0.02);
  CHECK(b.delta_p_min < 2e-36);
  CHECK(b.delta_p_min == doctest::Approx(constants::hbar_si * std::sqrt(b.lambda_max)));
  // low levels: E0 ~ m c^2, so the bound falls like 1/n^2
  const double ratio = lambda_upper_bound(6.0, 2e6).lambda_max / lambda_upper_bound(6.0, 1e6).lambda_max;
  CHECK(ratio == doctest::Approx(0.25).epsilon(0.01));
  CHECK_THROWS_AS(lambda_upper_bound(0.0, 1e10), NumericError);
}
