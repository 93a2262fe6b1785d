#include "adsosc/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "adsosc/error.hpp"

namespace adsosc::spectrum {

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::KgRelativistic: return "kg";
    case Scheme::DkpScalar: return "dkp_scalar";
    case Scheme::KgNonrel: return "kg_nonrel";
    case Scheme::DkpVectorNonrel: return "dkp_vector_nonrel";
    case Scheme::FlatFirstOrder: return "flat_first_order";
  }
  return "unknown";
}

namespace {

// 4 n (n + l + 1) + 2 l + 1
double confinement_factor(int n, int l) noexcept {
  const double nd = n;
  return 4.0 * nd * (nd + l + 1.0) + 2.0 * l + 1.0;
}

// Curly bracket of the relativistic spectrum minus w:
// (2n+l+1) W + (lambda hbar/2m) K - w~ l - w.
double oscillator_bracket(const PhysicalParams& p, int n, int l) noexcept {
  const double w_eff = effective_frequency(p);
  const double half = p.lambda * p.hbar / (2.0 * p.mass);
  return (2.0 * n + l + 1.0) * w_eff + half * confinement_factor(n, l) -
         omega_tilde(p) * l - p.omega;
}

double signed_value(double magnitude, Branch b) noexcept {
  return b == Branch::Plus ? magnitude : -magnitude;
}

}  // namespace

double kg_radicand(const PhysicalParams& p, int n, int l) {
  validate(QuantumNumbers{n, l, 0, Branch::Plus});
  return 1.0 + 2.0 * p.hbar / p.rest_energy() * oscillator_bracket(p, n, l);
}

EnergyLevel kg_energy(const PhysicalParams& p, const QuantumNumbers& qn) {
  validate(qn);
  const double radicand = kg_radicand(p, qn.n, qn.l);
  if (radicand < 0.0) {
    std::ostringstream os;
    os << "radicand = " << radicand << " at n = " << qn.n << ", l = " << qn.l
       << " (m = " << p.mass << ", omega = " << p.omega << ", B = " << p.b_field
       << ", lambda = " << p.lambda << ")";
    throw NumericError(ErrorCode::ImaginaryEnergy, os.str());
  }
  return {qn, signed_value(p.rest_energy() * std::sqrt(radicand), qn.branch),
          Scheme::KgRelativistic};
}

EnergyLevel dkp_scalar_energy(const PhysicalParams& p, const QuantumNumbers& qn) {
  EnergyLevel level = kg_energy(p, qn);
  level.scheme = Scheme::DkpScalar;
  return level;
}

double deformation_shift(const PhysicalParams& p, int n, int l) {
  PhysicalParams flat = p;
  flat.lambda = 0.0;
  const double e_lambda = kg_energy(p, {n, l, 0, Branch::Plus}).value;
  const double e_flat = kg_energy(flat, {n, l, 0, Branch::Plus}).value;

  // W(lambda) - W(0) = [(w - lambda hbar/2m)^2 - w^2] / (W(lambda) + W(0))
  const double half = p.lambda * p.hbar / (2.0 * p.mass);
  const double dw = half * (half - 2.0 * p.omega) /
                    (effective_frequency(p) + effective_frequency(flat));
  const double d_bracket = (2.0 * n + l + 1.0) * dw + half * confinement_factor(n, l);
  const double d_radicand = 2.0 * p.hbar / p.rest_energy() * d_bracket;
  const double rest = p.rest_energy();
  return rest * rest * d_radicand / (e_lambda + e_flat);
}

EnergyLevel kg_nonrel_energy(const PhysicalParams& p, const QuantumNumbers& qn) {
  validate(qn);
  const double half = p.lambda * p.hbar / (2.0 * p.mass);
  const double value = (2.0 * qn.n + qn.l + 1.0) * p.hbar * effective_frequency(p) +
                       p.hbar * half * confinement_factor(qn.n, qn.l) -
                       p.hbar * omega_tilde(p) * qn.l - p.hbar * p.omega;
  return {qn, value, Scheme::KgNonrel};
}

EnergyLevel dkp_vector_nonrel_energy(const PhysicalParams& p, const QuantumNumbers& qn,
                                     VectorDkpForm form) {
  validate(qn);
  const double half = p.lambda * p.hbar / (2.0 * p.mass);
  const double shifted = p.omega - half;
  const double wt = omega_tilde(p);
  const double ms = qn.m_s;
  const double nl = 2.0 * qn.n + qn.l + 1.0;
  const double l = qn.l;

  const double freq2 = shifted * shifted + wt * wt - 4.0 * wt * shifted * ms;
  if (freq2 < 0.0) {
    std::ostringstream os;
    os << "spin-dependent frequency squared = " << freq2 << " for m_s = " << qn.m_s
       << " (w~ = " << wt << ", w - lambda hbar/2m = " << shifted << ")";
    throw NumericError(ErrorCode::ImaginaryFrequency, os.str());
  }
  const double confinement = p.hbar * half * confinement_factor(qn.n, qn.l);

  // m_s = 0 has no spin coupling and the same operation order as kg_nonrel_energy
  const double freq = qn.m_s == 0 ? effective_frequency(p) : std::sqrt(freq2);

  double value = 0.0;
  if (form == VectorDkpForm::Consistent || qn.m_s == 0) {
    const double hb = form == VectorDkpForm::Consistent ? p.hbar : 1.0;
    value = nl * p.hbar * freq + confinement - hb * wt * l - p.hbar * p.omega -
            ms * (p.hbar * wt + 2.0 * p.hbar * (p.omega + half) * l);
  } else {
    value = nl * p.hbar * freq - p.hbar * (p.omega + 2.0 * ms * wt) + confinement -
            (wt + 2.0 * ms * (p.omega + half)) * l;
  }
  return {qn, value, Scheme::DkpVectorNonrel};
}

double level_spacing(const PhysicalParams& p, int n, int l) {
  const double e0 = kg_energy(p, {n, l, 0, Branch::Plus}).value;
  const double e1 = kg_energy(p, {n + 1, l, 0, Branch::Plus}).value;
  // E1^2 - E0^2 = (m c^2)^2 (2 hbar / m c^2) [2 W + (lambda hbar/2m) 4 (2n + l + 2)]
  const double half = p.lambda * p.hbar / (2.0 * p.mass);
  const double d_bracket =
      2.0 * effective_frequency(p) + half * 4.0 * (2.0 * n + l + 2.0);
  return 2.0 * p.hbar * p.rest_energy() * d_bracket / (e0 + e1);
}

double asymptotic_spacing(const PhysicalParams& p) noexcept {
  return 2.0 * p.hbar * p.c * std::sqrt(p.lambda);
}

double FirstOrderExpansion::delta_e() const noexcept { return delta_e_over_hw * hbar_omega; }

FirstOrderExpansion first_order_expansion(const PhysicalParams& p, int n) {
  validate(QuantumNumbers{n, 0, 0, Branch::Plus});
  if (!(p.omega > 0.0)) {
    throw NumericError(ErrorCode::InvalidArgument,
                       "first-order expansion is expressed in units of hbar w; needs w > 0");
  }
  const double wt = omega_tilde(p);
  const double w_flat = std::hypot(p.omega, wt);
  const double rest = p.rest_energy();
  const double e0_sq =
      rest * rest - 2.0 * p.omega * p.hbar * rest + 2.0 * (2.0 * n + 1.0) * p.hbar * rest * w_flat;
  const double e0 = std::sqrt(e0_sq);
  const double k = 2.0 * n + 1.0;
  const double bracket = k * k - k * p.omega / w_flat;
  const double hw = p.hbar * p.omega;
  const double delta = p.hbar * p.c * p.c / (2.0 * p.omega * e0) * bracket * p.lambda;
  return {e0, delta, hw};
}

PenningBound lambda_upper_bound(double b_tesla, double n_level) {
  if (!(b_tesla > 0.0) || !(n_level >= 1.0)) {
    std::ostringstream os;
    os << "Penning bound needs B > 0 and n >= 1, got B = " << b_tesla << ", n = " << n_level;
    throw NumericError(ErrorCode::InvalidArgument, os.str());
  }
  using namespace constants;
  const double omega_c = e_si * b_tesla / electron_mass_si;
  // The trap frequency plays the oscillator role; the field enters only through w_c.
  const double rest = electron_mass_si * c_si * c_si;
  const double k = 2.0 * n_level + 1.0;
  const double e0 = std::sqrt(rest * rest - 2.0 * omega_c * hbar_si * rest +
                              2.0 * k * hbar_si * rest * omega_c);
  const double bracket = k * k - k;
  // hbar c^2 / (2 w E0) * bracket * lambda < 1
  const double lambda_max = 2.0 * omega_c * e0 / (hbar_si * c_si * c_si * bracket);
  return {b_tesla, n_level, omega_c, e0, lambda_max, hbar_si * std::sqrt(lambda_max)};
}

}  // namespace adsosc::spectrum
