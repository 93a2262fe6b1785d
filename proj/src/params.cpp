#include "adsosc/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "adsosc/error.hpp"

namespace adsosc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::LambdaZero: return "LambdaZero";
    case ErrorCode::ImaginaryEnergy: return "ImaginaryEnergy";
    case ErrorCode::ImaginaryFrequency: return "ImaginaryFrequency";
    case ErrorCode::SeriesDivergence: return "SeriesDivergence";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::TailDivergence: return "TailDivergence";
    case ErrorCode::BeyondCritical: return "BeyondCritical";
    case ErrorCode::CriticalSingularity: return "CriticalSingularity";
    case ErrorCode::NoCriticalPoint: return "NoCriticalPoint";
  }
  return "Unknown";
}

std::string_view to_string(UnitSystem u) noexcept {
  switch (u) {
    case UnitSystem::Hartree: return "hartree";
    case UnitSystem::Natural: return "natural";
    case UnitSystem::SI: return "si";
  }
  return "unknown";
}

std::optional<UnitSystem> parse_unit_system(std::string_view s) noexcept {
  if (s == "hartree") return UnitSystem::Hartree;
  if (s == "natural") return UnitSystem::Natural;
  if (s == "si") return UnitSystem::SI;
  return std::nullopt;
}

FundamentalConstants fundamental_constants(UnitSystem u) noexcept {
  switch (u) {
    case UnitSystem::Hartree:
      return {1.0, constants::c_hartree, 1.0, 1.0, 1.0};
    case UnitSystem::Natural:
      return {1.0, 1.0, std::sqrt(constants::fine_structure), 1.0, 1.0};
    case UnitSystem::SI:
      return {constants::hbar_si, constants::c_si, constants::e_si, constants::k_b_si,
              constants::electron_mass_si};
  }
  return {1.0, 1.0, 1.0, 1.0, 1.0};
}

double PhysicalParams::domain_radius() const noexcept {
  return lambda > 0.0 ? 1.0 / std::sqrt(lambda) : std::numeric_limits<double>::infinity();
}

namespace {

void require(bool ok, const char* field, double value, const char* constraint) {
  if (ok) return;
  std::ostringstream os;
  os << field << " = " << value << " violates " << constraint;
  throw NumericError(ErrorCode::InvalidArgument, os.str());
}

}  // namespace

PhysicalParams make_params(UnitSystem units, double mass, double omega, double b_field,
                           double lambda) {
  require(std::isfinite(mass) && mass > 0.0, "mass", mass, "mass > 0");
  require(std::isfinite(omega) && omega >= 0.0, "omega", omega, "omega >= 0");
  require(std::isfinite(b_field) && b_field >= 0.0, "B", b_field, "B >= 0");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda", lambda, "lambda >= 0");
  const auto k = fundamental_constants(units);
  return PhysicalParams{mass, omega, b_field, lambda, k.hbar, k.c, k.e, k.k_b, units};
}

PhysicalParams figure_params(double lambda, UnitSystem units) {
  const auto k = fundamental_constants(units);
  return make_params(units, k.electron_mass, 1.0, 1.0, lambda);
}

void validate(const QuantumNumbers& qn) {
  require(qn.n >= 0, "n", qn.n, "n >= 0");
  require(qn.l >= 0, "l", qn.l, "l >= 0");
  require(qn.m_s >= -1 && qn.m_s <= 1, "m_s", qn.m_s, "m_s in {-1, 0, 1}");
}

double eta(const PhysicalParams& p) noexcept {
  const double mw = p.mass * p.omega;
  const double eb = p.e * p.b_field / (2.0 * p.c);
  return mw * mw + eb * eb - p.lambda * p.hbar * mw;
}

double omega_tilde(const PhysicalParams& p) noexcept {
  return p.e * p.b_field / (2.0 * p.mass * p.c);
}

double effective_frequency(const PhysicalParams& p) noexcept {
  return std::hypot(p.omega - p.lambda * p.hbar / (2.0 * p.mass), omega_tilde(p));
}

double DerivedParams::mu_value() const {
  if (!mu) throw NumericError(ErrorCode::LambdaZero, "mu is undefined for lambda = 0");
  return *mu;
}

DerivedParams derived_params(const PhysicalParams& p) {
  DerivedParams d{eta(p), omega_tilde(p), std::nullopt};
  if (p.lambda > 0.0) {
    const double hl = p.hbar * p.lambda;
    const double disc = 0.25 + d.eta / (hl * hl);
    if (disc < 0.0) {
      std::ostringstream os;
      os << "1/4 + eta/(hbar lambda)^2 = " << disc << " (eta = " << d.eta
         << ", lambda = " << p.lambda << ")";
      throw NumericError(ErrorCode::NegativeDiscriminant, os.str());
    }
    d.mu = 0.5 + std::sqrt(disc);
  }
  return d;
}

double eps_shift(const PhysicalParams& p, double energy) noexcept {
  const double rest = p.rest_energy();
  const double e_abs = std::abs(energy);
  return (e_abs - rest) * (e_abs + rest) / (p.c * p.c) + 2.0 * p.mass * p.omega * p.hbar;
}

double eps_reduced(const PhysicalParams& p, int l, double energy) noexcept {
  return eps_shift(p, energy) / (p.hbar * p.hbar) + p.e * p.b_field * l / (p.c * p.hbar);
}

double energy_from_eps_reduced(const PhysicalParams& p, int l, double eps, Branch branch) {
  const double shift = p.hbar * p.hbar * (eps - p.e * p.b_field * l / (p.c * p.hbar));
  const double e2 = p.c * p.c * (shift - 2.0 * p.mass * p.omega * p.hbar) +
                    p.rest_energy() * p.rest_energy();
  if (e2 < 0.0) {
    std::ostringstream os;
    os << "E^2 = " << e2 << " for reduced eigenvalue " << eps;
    throw NumericError(ErrorCode::ImaginaryEnergy, os.str());
  }
  const double e = std::sqrt(e2);
  return branch == Branch::Plus ? e : -e;
}

double ads_position_map(double r, double lambda) {
  const double q = 1.0 - lambda * r * r;
  if (q <= 0.0) {
    std::ostringstream os;
    os << "|r| = " << std::abs(r) << " outside the disc of radius 1/sqrt(lambda) = "
       << 1.0 / std::sqrt(lambda);
    throw NumericError(ErrorCode::DomainViolation, os.str());
  }
  return r / std::sqrt(q);
}

double ads_position_map_inverse(double big_x, double lambda) noexcept {
  return big_x / std::sqrt(1.0 + lambda * big_x * big_x);
}

double arclength_coordinate(double r, double lambda) {
  if (lambda == 0.0) return r;
  const double s = std::sqrt(lambda);
  if (std::abs(s * r) > 1.0) {
    std::ostringstream os;
    os << "|r| = " << std::abs(r) << " beyond 1/sqrt(lambda) = " << 1.0 / s;
    throw NumericError(ErrorCode::DomainViolation, os.str());
  }
  return std::asin(s * r) / s;
}

double radius_from_arclength(double x, double lambda) noexcept {
  if (lambda == 0.0) return x;
  const double s = std::sqrt(lambda);
  return std::sin(s * x) / s;
}

double arclength_extent(double lambda) noexcept {
  if (lambda == 0.0) return std::numeric_limits<double>::infinity();
  return std::numbers::pi / (2.0 * std::sqrt(lambda));
}

double min_momentum_uncertainty(const PhysicalParams& p) noexcept {
  return p.hbar * std::sqrt(p.lambda);
}

}  // namespace adsosc
