#pragma once

#include <string_view>

#include "adsosc/params.hpp"

namespace adsosc::spectrum {

enum class Scheme {
  KgRelativistic,
  DkpScalar,
  KgNonrel,
  DkpVectorNonrel,
  FlatFirstOrder,
};

std::string_view to_string(Scheme s) noexcept;

struct EnergyLevel {
  QuantumNumbers qn;
  double value;
  Scheme scheme;
};

/// Bracket under the square root of the relativistic energy, E = +-m c^2 sqrt(radicand).
double kg_radicand(const PhysicalParams& p, int n, int l);

/// Relativistic Klein-Gordon oscillator energy in the deformed space.
/// Throws ImaginaryEnergy if the radicand is negative.
EnergyLevel kg_energy(const PhysicalParams& p, const QuantumNumbers& qn);

/// Scalar DKP energy; the same expression as kg_energy, tagged DkpScalar.
EnergyLevel dkp_scalar_energy(const PhysicalParams& p, const QuantumNumbers& qn);

/// E(lambda) - E(lambda = 0) for the positive branch, evaluated without the
/// cancellation of subtracting two rest-energy sized numbers.
double deformation_shift(const PhysicalParams& p, int n, int l);

/// Non-relativistic limit of the KG oscillator (rest energy removed).
EnergyLevel kg_nonrel_energy(const PhysicalParams& p, const QuantumNumbers& qn);

enum class VectorDkpForm {
  /// S_z = m_s hbar, hbar restored on the w~ l term: m_s = 0 reproduces kg_nonrel_energy.
  Consistent,
  /// Final printed expression for m_s = +-1 (and the general form with S_z = 0 for m_s = 0).
  Verbatim,
};

/// Non-relativistic spin-1 DKP oscillator energy. Throws ImaginaryFrequency when
/// the spin-dependent frequency under the square root turns negative.
EnergyLevel dkp_vector_nonrel_energy(const PhysicalParams& p, const QuantumNumbers& qn,
                                     VectorDkpForm form = VectorDkpForm::Consistent);

/// E_{n+1,l} - E_{n,l} on the positive branch.
double level_spacing(const PhysicalParams& p, int n, int l);

/// Large-n limit of the level spacing, 2 hbar c sqrt(lambda).
double asymptotic_spacing(const PhysicalParams& p) noexcept;

struct FirstOrderExpansion {
  double e0;              // undeformed s-state energy
  double delta_e_over_hw; // first-order deformation shift in units of hbar w
  double delta_e() const noexcept;
  double hbar_omega;
};

/// First-order expansion in lambda of the s-state (l = 0) energies.
FirstOrderExpansion first_order_expansion(const PhysicalParams& p, int n);

struct PenningBound {
  double b_tesla;
  double n_level;
  double omega_c;           // cyclotron frequency e B / m_e, rad/s
  double e0;                // undeformed level energy, J
  double lambda_max;        // m^-2
  double delta_p_min;       // hbar sqrt(lambda_max), kg m / s
};

/// Largest lambda for which the first-order shift of level n stays below
/// hbar w_c for an electron in a Penning trap of field B (SI units).
PenningBound lambda_upper_bound(double b_tesla, double n_level);

}  // namespace adsosc::spectrum
