#pragma once

#include <optional>
#include <string_view>

namespace adsosc {

/// Unit conventions. Hartree: hbar = m_e = e = k_B = 1, c = 1/alpha.
/// Natural: hbar = c = m_e = k_B = 1 with e^2 = alpha (Gaussian), the
/// convention behind the thermodynamic figures. SI: CODATA 2018.
enum class UnitSystem { Hartree, Natural, SI };

std::string_view to_string(UnitSystem u) noexcept;
std::optional<UnitSystem> parse_unit_system(std::string_view s) noexcept;

namespace constants {
inline constexpr double fine_structure = 7.2973525693e-3;
inline constexpr double c_hartree = 137.035999084;

inline constexpr double hbar_si = 1.054571817e-34;      // J s
inline constexpr double c_si = 299792458.0;             // m / s
inline constexpr double e_si = 1.602176634e-19;         // C
inline constexpr double k_b_si = 1.380649e-23;          // J / K
inline constexpr double electron_mass_si = 9.1093837015e-31;  // kg
}  // namespace constants

struct FundamentalConstants {
  double hbar;
  double c;
  double e;
  double k_b;
  double electron_mass;
};

FundamentalConstants fundamental_constants(UnitSystem u) noexcept;

/// Physical and model parameters of the deformed oscillator. Immutable once
/// built; construct through make_params() which validates every field.
struct PhysicalParams {
  double mass;
  double omega;
  double b_field;
  double lambda;
  double hbar;
  double c;
  double e;
  double k_b;
  UnitSystem units;

  bool deformed() const noexcept { return lambda > 0.0; }
  /// Radius of the accessible disc, 1/sqrt(lambda); +inf when lambda == 0.
  double domain_radius() const noexcept;
  double rest_energy() const noexcept { return mass * c * c; }
};

/// Builds parameters in the given unit system. `mass` is in units of the
/// electron mass for Hartree/Natural and in kg for SI.
PhysicalParams make_params(UnitSystem units, double mass, double omega, double b_field,
                           double lambda);

/// Figure setup of the thermodynamics section: m = omega = B = 1.
PhysicalParams figure_params(double lambda, UnitSystem units = UnitSystem::Natural);

enum class Branch { Plus, Minus };

struct QuantumNumbers {
  int n = 0;
  int l = 0;
  int m_s = 0;  // spin projection; only read by the vector-DKP spectrum
  Branch branch = Branch::Plus;
};

void validate(const QuantumNumbers& qn);

/// Intermediate quantities of the radial problem at fixed l.
struct DerivedParams {
  double eta;          // m^2 w^2 + e^2 B^2 / 4c^2 - lambda hbar m w
  double omega_tilde;  // e B / 2 m c
  std::optional<double> mu;  // 1/2 + sqrt(1/4 + eta / hbar^2 lambda^2); empty at lambda == 0

  /// Throws LambdaZero when the parameters are undeformed.
  double mu_value() const;
};

DerivedParams derived_params(const PhysicalParams& p);

double eta(const PhysicalParams& p) noexcept;
double omega_tilde(const PhysicalParams& p) noexcept;

/// sqrt((w - lambda hbar / 2m)^2 + w~^2), the effective oscillator frequency.
double effective_frequency(const PhysicalParams& p) noexcept;

/// Shift variable of the radial equation: (E^2 - m^2 c^4)/c^2 + 2 m w hbar.
double eps_shift(const PhysicalParams& p, double energy) noexcept;

/// Reduced eigenvalue entering the radial operator: eps_shift/hbar^2 + e B l/(c hbar).
double eps_reduced(const PhysicalParams& p, int l, double energy) noexcept;

/// Inverse of eps_reduced for the positive (or negative) energy branch.
double energy_from_eps_reduced(const PhysicalParams& p, int l, double eps,
                               Branch branch = Branch::Plus);

/// X = r / sqrt(1 - lambda r^2).
double ads_position_map(double r, double lambda);
double ads_position_map_inverse(double big_x, double lambda) noexcept;

/// Arclength coordinate x = asin(sqrt(lambda) r)/sqrt(lambda) in which the
/// deformed kinetic term becomes d^2/dx^2.
double arclength_coordinate(double r, double lambda);
double radius_from_arclength(double x, double lambda) noexcept;

/// Upper end of the arclength coordinate, pi / (2 sqrt(lambda)).
double arclength_extent(double lambda) noexcept;

/// hbar sqrt(lambda).
double min_momentum_uncertainty(const PhysicalParams& p) noexcept;

}  // namespace adsosc
