#include <cmath>
#include <numbers>

#include "adsosc/error.hpp"
#include "adsosc/params.hpp"
#include "doctest.h"

using namespace adsosc;

TEST_CASE("unit systems") {
  for (auto u : {UnitSystem::Hartree, UnitSystem::Natural, UnitSystem::SI}) {
    CHECK(parse_unit_system(to_string(u)) == u);
  }
  CHECK_FALSE(parse_unit_system("cgs").has_value());
  const auto h = fundamental_constants(UnitSystem::Hartree);
  CHECK(h.c == constants::c_hartree);
  CHECK(h.hbar == 1.0);
  CHECK(h.e == 1.0);
  const auto n = fundamental_constants(UnitSystem::Natural);
  CHECK(n.c == 1.0);
  CHECK(n.e * n.e == doctest::Approx(constants::fine_structure));
  const auto si = fundamental_constants(UnitSystem::SI);
  CHECK(si.e == constants::e_si);
  CHECK(si.electron_mass == constants::electron_mass_si);
}

TEST_CASE("make_params validates") {
  CHECK_NOTHROW(make_params(UnitSystem::Hartree, 1, 1, 1, 0.01));
  CHECK_THROWS_AS(make_params(UnitSystem::Hartree, 0, 1, 1, 0.01), NumericError);
  CHECK_THROWS_AS(make_params(UnitSystem::Hartree, 1, -1, 1, 0.01), NumericError);
  CHECK_THROWS_AS(make_params(UnitSystem::Hartree, 1, 1, 1, -0.01), NumericError);
  CHECK_THROWS_AS(make_params(UnitSystem::Hartree, 1, 1, NAN, 0.01), NumericError);
  try {
    make_params(UnitSystem::Hartree, 1, 1, 1, -2);
  } catch (const NumericError& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
    CHECK(std::string(e.what()).find("lambda") != std::string::npos);
  }
  CHECK_THROWS_AS(validate({-1, 0}), NumericError);
  CHECK_THROWS_AS(validate({0, 0, 2}), NumericError);
}

TEST_CASE("derived parameters") {
  const auto p = make_params(UnitSystem::Hartree, 1, 1, 0, 0.01);
  const auto d = derived_params(p);
  CHECK(d.eta == doctest::Approx(1.0 - 0.01));
  CHECK(d.omega_tilde == 0.0);
  CHECK(d.mu_value() == doctest::Approx(0.5 + std::sqrt(0.25 + 0.99 / 1e-4)));

  // lambda (mu - 1/2) = (m / hbar) W
  for (double b : {0.0, 1.0, 40.0}) {
    for (double lambda : {1e-3, 0.1, 0.7}) {
      const auto q = make_params(UnitSystem::Hartree, 1.3, 0.8, b, lambda);
      const double mu = derived_params(q).mu_value();
      CHECK(lambda * (mu - 0.5) == doctest::Approx(q.mass / q.hbar * effective_frequency(q)));
    }
  }

  const auto flat = make_params(UnitSystem::Hartree, 1, 1, 1, 0);
  CHECK_FALSE(derived_params(flat).mu.has_value());
  try {
    derived_params(flat).mu_value();
    FAIL("expected LambdaZero");
  } catch (const NumericError& e) {
    CHECK(e.code() == ErrorCode::LambdaZero);
  }
  CHECK(omega_tilde(flat) == doctest::Approx(1.0 / (2.0 * constants::c_hartree)));
}

TEST_CASE("reduced eigenvalue round trip") {
  const auto p = make_params(UnitSystem::Hartree, 1, 1, 1, 0.01);
  for (int l : {0, 2}) {
    for (double e : {p.rest_energy() * 1.0001, p.rest_energy() * 3.0}) {
      const double eps = eps_reduced(p, l, e);
      CHECK(energy_from_eps_reduced(p, l, eps) == doctest::Approx(e).epsilon(1e-14));
      CHECK(energy_from_eps_reduced(p, l, eps, Branch::Minus) == doctest::Approx(-e).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(energy_from_eps_reduced(p, 0, -1e12), NumericError);
}

TEST_CASE("coordinate maps") {
  const double lambda = 0.04;
  for (double r : {0.0, 0.5, 3.0, 4.99}) {
    const double big_x = ads_position_map(r, lambda);
    CHECK(ads_position_map_inverse(big_x, lambda) == doctest::Approx(r));
    const double x = arclength_coordinate(r, lambda);
    CHECK(radius_from_arclength(x, lambda) == doctest::Approx(r));
    CHECK(x >= r);
  }
  CHECK_THROWS_AS(ads_position_map(5.0, lambda), NumericError);
  CHECK_THROWS_AS(arclength_coordinate(5.1, lambda), NumericError);
  CHECK(arclength_extent(lambda) == doctest::Approx(std::numbers::pi / 0.4));
  CHECK(arclength_coordinate(5.0, lambda) == doctest::Approx(arclength_extent(lambda)));
  CHECK(std::isinf(arclength_extent(0.0)));
  CHECK(arclength_coordinate(2.0, 0.0) == 2.0);
}

TEST_CASE("minimal momentum uncertainty and domain") {
  const auto p = make_params(UnitSystem::Hartree, 1, 1, 1, 0.25);
  CHECK(min_momentum_uncertainty(p) == doctest::Approx(0.5));
  CHECK(p.domain_radius() == doctest::Approx(2.0));
  CHECK(std::isinf(make_params(UnitSystem::Hartree, 1, 1, 1, 0).domain_radius()));
  const auto f = figure_params(0.02);
  CHECK(f.units == UnitSystem::Natural);
  CHECK(f.mass == 1.0);
  CHECK(f.c == 1.0);
}
