#include "adsosc/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "adsosc/error.hpp"
#include "adsosc/specfun.hpp"
#include "adsosc/spectrum.hpp"

namespace adsosc::wavefn {

namespace {

constexpr double kPi = std::numbers::pi;
// rounding slack on lambda r^2 at the rim of the disc
constexpr double kEdgeSlack = 1e-12;

// Gamma(x + l) / Gamma(x) for integer l >= 0.
double rising(double x, int l) {
  double r = 1.0;
  for (int k = 0; k < l; ++k) r *= x + k;
  return r;
}

double outside_disc(double r, double lambda) {
  std::ostringstream os;
  os << "r = " << r << " outside the disc of radius " << 1.0 / std::sqrt(lambda);
  throw NumericError(ErrorCode::DomainViolation, os.str());
}

// (1 - lambda r^2)^{mu/2} (lambda r^2)^{l/2} P_n^{(l, mu - 1/2)}(1 - 2 lambda r^2), no constants.
double deformed_shape(double r, double lambda, double mu, int n, int l) {
  const double u = lambda * r * r;
  if (u > 1.0 + kEdgeSlack) return outside_disc(r, lambda);
  if (u >= 1.0) return 0.0;
  const double damping = std::exp(0.5 * mu * std::log1p(-u));
  const double centrifugal = l == 0 ? 1.0 : std::pow(u, 0.5 * l);
  return damping * centrifugal * specfun::jacobi(n, l, mu - 0.5, 1.0 - 2.0 * u);
}

std::vector<double> uniform_interior(double extent, std::size_t points) {
  std::vector<double> r(points);
  if (points == 0) return r;
  const double inset = 1e-6 * extent;
  if (points == 1) {
    r[0] = 0.5 * extent;
    return r;
  }
  const double step = (extent - 2.0 * inset) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) r[i] = inset + step * static_cast<double>(i);
  return r;
}

}  // namespace

RadialFunction::RadialFunction(QuantumNumbers qn, std::optional<double> mu, double norm_const,
                               double lambda, double sampling_extent, Evaluator f)
    : qn_(qn),
      mu_(mu),
      norm_const_(norm_const),
      lambda_(lambda),
      extent_(sampling_extent),
      f_(std::move(f)) {}

double RadialFunction::domain_max() const noexcept {
  return lambda_ > 0.0 ? 1.0 / std::sqrt(lambda_) : std::numeric_limits<double>::infinity();
}

std::vector<GridPoint> RadialFunction::sample(std::size_t points) const {
  std::vector<GridPoint> out;
  out.reserve(points);
  for (double r : uniform_interior(extent_, points)) out.push_back({r, f_(r)});
  return out;
}

double kg_norm_const(const PhysicalParams& p, const QuantumNumbers& qn) {
  validate(qn);
  const double mu = derived_params(p).mu_value();
  const int n = qn.n;
  const int l = qn.l;
  const double gamma_ratio = rising(n + mu + 0.5, l);     // Gamma(n+mu+l+1/2)/Gamma(n+mu+1/2)
  const double factorial_ratio = 1.0 / rising(n + 1.0, l); // n!/(n+l)!
  const double c2 = p.lambda / (std::ldexp(1.0, l) * kPi) * factorial_ratio *
                    (2.0 * n + mu + l + 0.5) * gamma_ratio;
  return std::sqrt(c2);
}

RadialFunction kg_wavefunction(const PhysicalParams& p, const QuantumNumbers& qn) {
  const double mu = derived_params(p).mu_value();
  const double c = kg_norm_const(p, qn);
  const double prefactor = c * std::pow(2.0, 0.5 * qn.l);
  const double lambda = p.lambda;
  const int n = qn.n;
  const int l = qn.l;
  return RadialFunction(qn, mu, c, lambda, 1.0 / std::sqrt(lambda),
                        [=](double r) { return prefactor * deformed_shape(r, lambda, mu, n, l); });
}

RadialFunction kg_flat_wavefunction(const PhysicalParams& p, const QuantumNumbers& qn) {
  validate(qn);
  const double omega_big = p.mass / p.hbar * std::hypot(p.omega, omega_tilde(p));
  if (!(omega_big > 0.0)) {
    throw NumericError(ErrorCode::InvalidArgument,
                       "flat oscillator state needs w > 0 or B > 0 (Omega = 0)");
  }
  const int n = qn.n;
  const int l = qn.l;
  const double c = std::sqrt(std::pow(omega_big, l + 1.0) / (kPi * rising(n + 1.0, l)));
  // e^{-Omega r^2 / 2} below 1e-17 relative to the turning region
  const double extent = std::sqrt((80.0 + 4.0 * n + 2.0 * l) / omega_big);
  return RadialFunction(qn, std::nullopt, c, 0.0, extent, [=](double r) {
    const double x = omega_big * r * r;
    return c * std::exp(-0.5 * x) * std::pow(r, l) * specfun::laguerre(n, l, x);
  });
}

RadialFunction kg_state(const PhysicalParams& p, const QuantumNumbers& qn) {
  return p.lambda > 0.0 ? kg_wavefunction(p, qn) : kg_flat_wavefunction(p, qn);
}

double dkp_norm_const(const PhysicalParams& p, const QuantumNumbers& qn, double energy) {
  return kg_norm_const(p, qn) * std::sqrt(p.rest_energy() / (2.0 * energy));
}

DkpSpinor::DkpSpinor(const PhysicalParams& p, const QuantumNumbers& qn, double energy)
    : p_(p),
      qn_(qn),
      energy_(energy),
      mu_(derived_params(p).mu_value()),
      norm_const_(dkp_norm_const(p, qn, energy)) {
  if (!(energy > 0.0)) {
    throw NumericError(ErrorCode::InvalidArgument,
                       "scalar DKP spinor is built on the positive-energy branch");
  }
}

double DkpSpinor::domain_max() const noexcept { return 1.0 / std::sqrt(p_.lambda); }

double DkpSpinor::envelope() const {
  return norm_const_ * std::pow(2.0, 0.5 * qn_.l);
}

double DkpSpinor::phi(double r) const {
  return envelope() * deformed_shape(r, p_.lambda, mu_, qn_.n, qn_.l);
}

double DkpSpinor::coefficient_m(double r) const {
  const double root = std::sqrt(1.0 - p_.lambda * r * r);
  const double mc = p_.mass * p_.c;
  return p_.hbar * qn_.l / mc * root / r +
         (p_.omega - p_.lambda * p_.hbar * mu_ / p_.mass) * r / (p_.c * root);
}

double DkpSpinor::coefficient_n_imag(double r) const {
  const double root = std::sqrt(1.0 - p_.lambda * r * r);
  const double mc = p_.mass * p_.c;
  return (p_.hbar * qn_.l * root / r - p_.e * p_.b_field * r / (2.0 * p_.c * root)) / mc;
}

double DkpSpinor::coefficient_lambda(double r) const {
  const double root = std::sqrt(1.0 - p_.lambda * r * r);
  return 2.0 * p_.lambda * p_.hbar / (p_.mass * p_.c) * (qn_.n + qn_.l + mu_ + 0.5) * r * root;
}

DkpSpinor::Components DkpSpinor::operator()(double r) const {
  const double lambda = p_.lambda;
  const int n = qn_.n;
  const int l = qn_.l;
  const double u = lambda * r * r;
  if (u > 1.0 + kEdgeSlack) outside_disc(r, lambda);
  if (u >= 1.0 || r <= 0.0) {
    Components zero{};
    if (r <= 0.0 && l == 0) {
      // Only phi and chi survive at the origin for s-states.
      const double at0 = envelope() * specfun::jacobi(n, 0.0, mu_ - 0.5, 1.0);
      zero[0] = at0;
      zero[1] = energy_ / p_.rest_energy() * at0;
    }
    return zero;
  }
  const double shape_no_poly = std::exp(0.5 * mu_ * std::log1p(-u)) *
                               (l == 0 ? 1.0 : std::pow(u, 0.5 * l)) * envelope();
  const double y = 1.0 - 2.0 * u;
  const double pn = specfun::jacobi(n, l, mu_ - 0.5, y);
  const double pn1 = n > 0 ? specfun::jacobi(n - 1, l + 1.0, mu_ + 0.5, y) : 0.0;
  const double phi_v = shape_no_poly * pn;
  Components c;
  c[0] = phi_v;
  c[1] = energy_ / p_.rest_energy() * phi_v;
  c[2] = shape_no_poly * (coefficient_m(r) * pn - coefficient_lambda(r) * pn1);
  c[3] = std::complex<double>(0.0, shape_no_poly * coefficient_n_imag(r) * pn);
  c[4] = 0.0;
  return c;
}

std::vector<DkpSpinor::Row> DkpSpinor::sample(std::size_t points) const {
  std::vector<Row> out;
  out.reserve(points);
  for (double r : uniform_interior(domain_max(), points)) out.push_back({r, (*this)(r)});
  return out;
}

DkpSpinor dkp_scalar_spinor(const PhysicalParams& p, const QuantumNumbers& qn) {
  QuantumNumbers plus = qn;
  plus.branch = Branch::Plus;
  const double e = spectrum::dkp_scalar_energy(p, plus).value;
  return DkpSpinor(p, plus, e);
}

double ode_residual(const PhysicalParams& p, const QuantumNumbers& qn, const RadialFunction& f,
                    const OdeResidualOptions& opt) {
  validate(qn);
  const double lambda = p.lambda;
  const double l2 = static_cast<double>(qn.l) * qn.l;
  const double eta_h2 = eta(p) / (p.hbar * p.hbar);
  const double eps = opt.eps ? *opt.eps
                             : eps_reduced(p, qn.l, spectrum::kg_energy(p, qn).value);

  const double extent = f.sampling_extent();
  const double h = opt.step_fraction * extent;
  const double lo = 0.01 * extent;
  const double hi = 0.99 * extent;

  auto derivatives = [&](double r) {
    auto d1 = [&](double step) { return (f(r + step) - f(r - step)) / (2.0 * step); };
    auto d2 = [&](double step) { return (f(r + step) - 2.0 * f(r) + f(r - step)) / (step * step); };
    const double first = (4.0 * d1(0.5 * h) - d1(h)) / 3.0;
    const double second = (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
    return std::pair{first, second};
  };

  double max_residual = 0.0;
  double max_scale = 0.0;
  const int samples = std::max(opt.samples, 2);
  for (int i = 0; i < samples; ++i) {
    const double r = lo + (hi - lo) * i / (samples - 1.0);
    const double rho2 = 1.0 - lambda * r * r;
    const double value = f(r);
    const auto [d1, d2] = derivatives(r);
    const std::array<double, 6> terms = {
        rho2 * d2,
        -lambda * r * d1,
        rho2 / r * d1,
        -l2 * rho2 / (r * r) * value,
        -eta_h2 * r * r / rho2 * value,
        eps * value,
    };
    double sum = 0.0;
    for (double t : terms) {
      sum += t;
      max_scale = std::max(max_scale, std::abs(t));
    }
    max_residual = std::max(max_residual, std::abs(sum));
  }
  return max_scale > 0.0 ? max_residual / max_scale : 0.0;
}

}  // namespace adsosc::wavefn
