#include "adsosc/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "adsosc/error.hpp"
#include "adsosc/quadrature.hpp"
#include "adsosc/specfun.hpp"

namespace adsosc::thermo {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void check_temperature(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    std::ostringstream os;
    os << "temperature must be positive and finite, got " << T;
    throw NumericError(ErrorCode::InvalidArgument, os.str());
  }
}

double omega_sq_sum(const PhysicalParams& p) {
  const double wt = omega_tilde(p);
  return wt * wt + p.omega * p.omega;
}

// 1 / (2 hbar m c^2 sqrt(w~^2 + w^2))
double leading_prefactor(const PhysicalParams& p) {
  return 1.0 / (2.0 * p.hbar * p.rest_energy() * std::sqrt(omega_sq_sum(p)));
}

// Boltzmann sums of (E - E0)^j, j = 0, 1, 2, in units of m c^2, relative to exp(-E0 / k_B T).
struct Moments {
  double s0;
  double s1;
  double s2;
  long terms;
  double tail;
};

Moments boltzmann_moments(const PartitionCoeffs& c, double K, double tail_tol, long max_terms) {
  const double root1 = std::sqrt(c.a1);
  if (c.a3 == 0.0 && c.a2 <= 0.0) {
    throw NumericError(ErrorCode::TailDivergence, "level energies do not grow with n");
  }
  CompensatedSum s0, s1, s2;
  auto tail_bound = [&](double n, double gap) {
    const double q = c.a1 + n * (c.a2 + c.a3 * n);
    const double root = std::sqrt(q);
    if (c.a3 == 0.0) {
      // exact integral of exp(-K sqrt(a1 + a2 x)) over (n, inf), shifted by exp(K sqrt(a1))
      return 2.0 / (c.a2 * K * K) * std::exp(-K * gap) * (K * root + 1.0);
    }
    // the exponent grows at least linearly beyond n
    const double slope = K * std::min(std::sqrt(c.a3), (c.a2 + 2.0 * c.a3 * n) / (2.0 * root));
    return std::exp(-K * gap) / slope;
  };
  for (long n = 0; n < max_terms; ++n) {
    const double nd = static_cast<double>(n);
    const double lin = nd * (c.a2 + c.a3 * nd);
    const double gap = lin / (std::sqrt(c.a1 + lin) + root1);  // sqrt(q(n)) - sqrt(a1)
    const double w = std::exp(-K * gap);
    s0.add(w);
    s1.add(gap * w);
    s2.add(gap * gap * w);
    if ((n & 255) == 255 || w == 0.0) {
      const double tail = tail_bound(nd, gap);
      if (tail <= tail_tol * s0.value()) {
        return {s0.value(), s1.value(), s2.value(), n + 1, tail / s0.value()};
      }
    }
  }
  std::ostringstream os;
  os << "tail bound above " << tail_tol << " of the partial sum after " << max_terms
     << " terms (K = " << K << ")";
  throw NumericError(ErrorCode::TailDivergence, os.str());
}

// Gamma(s, chi) / chi^s for integer s >= 1, times exp(log_scale).
double incomplete_gamma_bracket(int s, double chi, double log_scale) {
  const double sd = s;
  if (chi < 0.5 * sd) {
    // Gamma(s)/chi^s - e^{-chi} Phi(1, s+1, chi)/s; the second term is a small fraction here
    const double lower_fraction =
        std::exp(-chi + sd * std::log(chi) - specfun::log_gamma(sd + 1.0)) *
        specfun::kummer_phi(1.0, sd + 1.0, chi);
    return std::exp(log_scale + specfun::log_gamma(sd) - sd * std::log(chi)) *
           (1.0 - lower_fraction);
  }
  // Gamma(s, chi) = (s-1)! e^{-chi} sum_{k<s} chi^k / k!
  double total = 0.0;
  for (int k = 0; k < s; ++k) {
    total += std::exp(log_scale + specfun::log_gamma(sd) - specfun::log_gamma(k + 1.0) +
                      (k - sd) * std::log(chi) - chi);
  }
  return total;
}

double need_positive_discriminant(const PartitionCoeffs& c) {
  const double d = c.discriminant();
  if (!(d > 0.0)) {
    std::ostringstream os;
    os << "a2^2 - 4 a1 a3 = " << d << " (a1 = " << c.a1 << ", a2 = " << c.a2 << ", a3 = " << c.a3
       << ")";
    throw NumericError(ErrorCode::NegativeDiscriminant, os.str());
  }
  return d;
}

double integrate_half_line(const std::function<double(double)>& f, double scale) {
  const quad::QuadResult q =
      quad::adaptive([&](double u) { return f(scale * u); }, 0.0,
                     std::numeric_limits<double>::infinity(), 0.0, 1e-13);
  return scale * q.value;
}

ThermoPoint nan_point(double T, Scheme scheme) {
  return {T, kNaN, kNaN, kNaN, kNaN, kNaN, scheme, false};
}

}  // namespace

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::Direct: return "direct";
    case Scheme::EulerMaclaurin: return "euler_maclaurin";
    case Scheme::ClosedForm: return "closed_form";
  }
  return "unknown";
}

std::string_view to_string(IntegralRoute r) noexcept {
  switch (r) {
    case IntegralRoute::QuadX: return "quad_x";
    case IntegralRoute::QuadY: return "quad_y";
    case IntegralRoute::Series: return "series";
  }
  return "unknown";
}

PartitionCoeffs partition_coeffs(const PhysicalParams& p, int l) {
  if (l < 0) throw NumericError(ErrorCode::InvalidArgument, "l must be >= 0");
  const double w_eff = effective_frequency(p);
  const double half = p.lambda * p.hbar / (2.0 * p.mass);
  const double mc2 = p.rest_energy();
  PartitionCoeffs c{};
  c.a1 = 1.0 + 2.0 * p.hbar / mc2 *
                   ((l + 1.0) * w_eff + half * (2.0 * l + 1.0) - omega_tilde(p) * l - p.omega);
  c.a2 = 4.0 * p.hbar / mc2 * (w_eff + p.lambda * p.hbar / p.mass * (l + 1.0));
  c.a3 = 4.0 * p.lambda * p.hbar * p.hbar / (p.mass * p.mass * p.c * p.c);
  c.theta = 3.0 * p.lambda / (p.mass * p.mass * p.c * p.c * omega_sq_sum(p));
  c.a1_regular = c.a1 >= 1.0;
  return c;
}

double chi(const PhysicalParams& p, const PartitionCoeffs& c, double T) {
  return p.rest_energy() * std::sqrt(c.a1) / (p.k_b * T);
}

double sigma(const PhysicalParams& p, const PartitionCoeffs& c, double T) {
  const double t = p.k_b * T / p.rest_energy();
  return t * t * 4.0 * c.a3 / c.discriminant();
}

DirectSum partition_direct(const PhysicalParams& p, int l, double T, double tail_tol,
                           long max_terms) {
  check_temperature(T);
  const PartitionCoeffs c = partition_coeffs(p, l);
  if (c.a1 < 0.0) throw NumericError(ErrorCode::ImaginaryEnergy, "ground-state radicand a1 < 0");
  const double K = p.rest_energy() / (p.k_b * T);
  const Moments m = boltzmann_moments(c, K, tail_tol, max_terms);
  const double log_z = -K * std::sqrt(c.a1) + std::log(m.s0);
  return {std::exp(log_z), log_z, m.terms, m.tail};
}

ThermoPoint thermo_direct(const PhysicalParams& p, int l, double T, double tail_tol) {
  check_temperature(T);
  const PartitionCoeffs c = partition_coeffs(p, l);
  const double mc2 = p.rest_energy();
  const double kT = p.k_b * T;
  const double K = mc2 / kT;
  const Moments m = boltzmann_moments(c, K, tail_tol, 100'000'000);
  const double e0 = mc2 * std::sqrt(c.a1);
  const double log_z = -e0 / kT + std::log(m.s0);
  const double mean_gap = m.s1 / m.s0;
  const double var_gap = std::max(0.0, m.s2 / m.s0 - mean_gap * mean_gap);
  ThermoPoint pt{};
  pt.T = T;
  pt.scheme = Scheme::Direct;
  pt.Z = std::exp(log_z);
  pt.F = -kT * log_z;
  pt.U = e0 + mc2 * mean_gap;
  pt.C = mc2 * mc2 * var_gap / (p.k_b * T * T);
  pt.S = (pt.U - pt.F) / T;
  return pt;
}

double euler_maclaurin(std::span<const double> taylor, double integral, int p_max) {
  if (p_max < 0 || p_max > specfun::kMaxBernoulliIndex) {
    throw NumericError(ErrorCode::InvalidArgument, "p_max must be in 0..15");
  }
  if (taylor.size() < static_cast<std::size_t>(2 * p_max)) {
    throw NumericError(ErrorCode::InvalidArgument, "need Taylor coefficients up to 2 p_max - 1");
  }
  double total = 0.5 * taylor[0] + integral;
  double previous = std::numeric_limits<double>::infinity();
  for (int q = 1; q <= p_max; ++q) {
    // f^{(2q-1)}(0) / (2q)! = taylor[2q-1] / (2q)
    const double term = specfun::bernoulli_even(q) / (2.0 * q) * taylor[2 * q - 1];
    if (std::abs(term) > std::abs(previous)) break;  // asymptotic: stop at the smallest term
    total -= term;
    previous = term;
  }
  return total;
}

std::vector<double> boltzmann_taylor(const PartitionCoeffs& c, double K, int order) {
  const int n = order + 1;
  std::vector<double> q(n, 0.0), s(n, 0.0), h(n, 0.0), f(n, 0.0);
  q[0] = c.a1;
  if (n > 1) q[1] = c.a2;
  if (n > 2) q[2] = c.a3;
  s[0] = std::sqrt(c.a1);
  for (int k = 1; k < n; ++k) {
    double acc = q[k];
    for (int j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc / (2.0 * s[0]);
  }
  for (int k = 0; k < n; ++k) h[k] = -K * s[k];
  f[0] = std::exp(h[0]);
  for (int k = 1; k < n; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * h[j] * f[k - j];
    f[k] = acc / k;
  }
  return f;
}

double em_integral(const PhysicalParams& p, int l, double T, IntegralRoute route,
                   double series_tol) {
  check_temperature(T);
  const PartitionCoeffs c = partition_coeffs(p, l);
  const double K = p.rest_energy() / (p.k_b * T);
  const double root1 = std::sqrt(c.a1);
  const double x_chi = K * root1;

  switch (route) {
    case IntegralRoute::QuadX: {
      // decay length: where K (sqrt(q) - sqrt(a1)) reaches 1
      const double target = (root1 + 1.0 / K) * (root1 + 1.0 / K) - c.a1;
      const double scale = c.a3 > 0.0 ? 2.0 * target / (c.a2 + std::sqrt(c.a2 * c.a2 + 4.0 * c.a3 * target))
                                      : target / c.a2;
      const double shifted = integrate_half_line(
          [&](double x) {
            const double lin = x * (c.a2 + c.a3 * x);
            return std::exp(-K * lin / (std::sqrt(c.a1 + lin) + root1));
          },
          scale);
      return std::exp(-x_chi) * shifted;
    }
    case IntegralRoute::QuadY: {
      const double d = need_positive_discriminant(c);
      const double q = 4.0 * c.a1 * c.a3 / d;
      const double shifted = integrate_half_line(
          [&](double t) {
            const double y = 1.0 + t;
            return std::exp(-x_chi * t) * y / std::sqrt(1.0 + q * y * y);
          },
          1.0 / x_chi);
      return 2.0 * c.a1 / std::sqrt(d) * std::exp(-x_chi) * shifted;
    }
    case IntegralRoute::Series: {
      const double d = need_positive_discriminant(c);
      const double q = 4.0 * c.a1 * c.a3 / d;
      const double prefactor = 2.0 * c.a1 / std::sqrt(d);
      if (q == 0.0) return prefactor * incomplete_gamma_bracket(2, x_chi, 0.0);
      double sum = 0.0;
      double previous = std::numeric_limits<double>::infinity();
      for (int n = 0; n < 500; ++n) {
        const double log_coeff = std::log(specfun::double_factorial_ratio(n)) + n * std::log(q);
        const double term = (n % 2 == 0 ? 1.0 : -1.0) *
                            incomplete_gamma_bracket(2 * n + 2, x_chi, log_coeff);
        if (std::abs(term) > std::abs(previous)) {
          std::ostringstream os;
          os << "terms grow from n = " << n << " (|term| = " << std::abs(term)
             << ", partial sum " << sum << ", sigma = " << sigma(p, c, T) << ")";
          throw NumericError(ErrorCode::SeriesDivergence, os.str());
        }
        sum += term;
        previous = term;
        if (std::abs(term) <= series_tol * std::abs(sum)) return prefactor * sum;
      }
      throw NumericError(ErrorCode::SeriesDivergence, "no convergence within 500 terms");
    }
  }
  throw NumericError(ErrorCode::InvalidArgument, "unknown integral route");
}

double partition_euler_maclaurin(const PhysicalParams& p, int l, double T, const EmOptions& opt) {
  check_temperature(T);
  const PartitionCoeffs c = partition_coeffs(p, l);
  const double K = p.rest_energy() / (p.k_b * T);
  const std::vector<double> taylor = boltzmann_taylor(c, K, std::max(2 * opt.p_max - 1, 0));
  return euler_maclaurin(taylor, em_integral(p, l, T, opt.route), opt.p_max);
}

ThermoPoint thermo_euler_maclaurin(const PhysicalParams& p, int l, double T, const EmOptions& opt) {
  check_temperature(T);
  const double h = 1e-3 * T;
  auto log_z = [&](double t) { return std::log(partition_euler_maclaurin(p, l, t, opt)); };
  const double fm2 = log_z(T - 2.0 * h);
  const double fm1 = log_z(T - h);
  const double f0 = log_z(T);
  const double fp1 = log_z(T + h);
  const double fp2 = log_z(T + 2.0 * h);
  const double d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  const double d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  ThermoPoint pt{};
  pt.T = T;
  pt.scheme = Scheme::EulerMaclaurin;
  pt.Z = std::exp(f0);
  pt.F = -p.k_b * T * f0;
  pt.U = p.k_b * T * T * d1;
  pt.C = p.k_b * (2.0 * T * d1 + T * T * d2);
  pt.S = (pt.U - pt.F) / T;
  return pt;
}

double partition_high_T(const PhysicalParams& p, double T, HighTForm form, int l) {
  check_temperature(T);
  const PartitionCoeffs c = partition_coeffs(p, l);
  const double kT = p.k_b * T;
  const double leading = leading_prefactor(p) * kT * kT;
  double z = 0.0;
  if (form == HighTForm::Leading) {
    z = leading * (1.0 - c.theta * kT * kT);
  } else {
    const double w2 = omega_sq_sum(p);
    const double mc2 = p.rest_energy();
    const double correction =
        3.0 * std::pow(kT, 4) * p.lambda /
        (2.0 * p.hbar * std::pow(p.mass, 3) * std::pow(p.c, 4) * std::pow(w2, 1.5)) *
        (1.0 - mc2 * (2.0 * p.hbar * omega_tilde(p) * l + mc2 + p.hbar * p.omega) / (6.0 * kT * kT));
    z = leading - correction;
  }
  if (!(z > 0.0)) {
    std::ostringstream os;
    os << "theta (k_B T)^2 = " << c.theta * kT * kT << " at T = " << T << " (Z = " << z << ")";
    throw NumericError(ErrorCode::BeyondCritical, os.str());
  }
  return z;
}

ThermoPoint thermo_closed_form(const PhysicalParams& p, double T) {
  check_temperature(T);
  const PartitionCoeffs c = partition_coeffs(p, 0);
  const double kT = p.k_b * T;
  const double x = c.theta * kT * kT;
  const double gap = 1.0 - x;
  if (std::abs(gap) < 1e-12) {
    std::ostringstream os;
    os << "|1 - theta (k_B T)^2| = " << std::abs(gap) << " at T = " << T;
    throw NumericError(ErrorCode::CriticalSingularity, os.str());
  }
  ThermoPoint pt{};
  pt.T = T;
  pt.scheme = Scheme::ClosedForm;
  pt.Z = leading_prefactor(p) * kT * kT * gap;
  pt.U = 2.0 * kT * (1.0 - 2.0 * x) / gap;
  pt.C = 2.0 * p.k_b * (1.0 - 5.0 * x + 2.0 * x * x) / (gap * gap);
  if (pt.Z > 0.0) {
    const double log_z = std::log(pt.Z);
    pt.F = -kT * log_z;
    pt.S = p.k_b * ((2.0 - 4.0 * x) / gap + log_z);
  } else {
    pt.F = kNaN;
    pt.S = kNaN;
    pt.beyond_critical = true;
  }
  return pt;
}

CriticalTemperature critical_temperature(const PhysicalParams& p) {
  if (!(p.lambda > 0.0)) {
    throw NumericError(ErrorCode::NoCriticalPoint, "no critical temperature at lambda = 0");
  }
  const double kt = p.mass * p.c * std::sqrt(omega_sq_sum(p) / (3.0 * p.lambda));
  return {kt / p.k_b, 1.0 / std::sqrt(3.0 * p.lambda)};
}

namespace {

SweepRow sweep_point(const PhysicalParams& base, double lambda, double T) {
  PhysicalParams p = base;
  p.lambda = lambda;
  try {
    ThermoPoint pt = thermo_closed_form(p, T);
    return {lambda, pt, pt.beyond_critical ? "beyond_critical" : ""};
  } catch (const NumericError& e) {
    return {lambda, nan_point(T, Scheme::ClosedForm), std::string(to_string(e.code()))};
  }
}

double grid_temperature(double t_min, double t_max, int steps, int i) {
  return steps == 1 ? t_min : t_min + (t_max - t_min) * i / (steps - 1.0);
}

std::vector<SweepRow> assemble(const PhysicalParams& base, std::span<const double> lambdas,
                               int steps, std::vector<SweepRow>&& points) {
  std::vector<SweepRow> rows;
  rows.reserve(points.size() + lambdas.size());
  for (std::size_t li = 0; li < lambdas.size(); ++li) {
    const auto first = points.begin() + static_cast<long>(li) * steps;
    std::vector<SweepRow> block(std::make_move_iterator(first),
                                std::make_move_iterator(first + steps));
    if (lambdas[li] > 0.0) {
      PhysicalParams p = base;
      p.lambda = lambdas[li];
      const double t_c = critical_temperature(p).t_c;
      SweepRow marker{lambdas[li], nan_point(t_c, Scheme::ClosedForm), "t_c"};
      auto pos = std::upper_bound(block.begin(), block.end(), t_c,
                                  [](double t, const SweepRow& r) { return t < r.point.T; });
      block.insert(pos, marker);
    }
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

void check_sweep(std::span<const double> lambdas, double t_min, double t_max, int steps) {
  if (steps < 1) throw NumericError(ErrorCode::InvalidArgument, "steps must be >= 1");
  if (!(t_min > 0.0) || !(t_max >= t_min)) {
    throw NumericError(ErrorCode::InvalidArgument, "need 0 < t_min <= t_max");
  }
  for (double l : lambdas) {
    if (!(l >= 0.0)) throw NumericError(ErrorCode::InvalidArgument, "lambda must be >= 0");
  }
}

}  // namespace

std::vector<SweepRow> figure_sweep(const PhysicalParams& base, std::span<const double> lambdas,
                                   double t_min, double t_max, int steps) {
  check_sweep(lambdas, t_min, t_max, steps);
  const long total = static_cast<long>(lambdas.size()) * steps;
  std::vector<SweepRow> points(total);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < total; ++k) {
    const int i = static_cast<int>(k % steps);
    points[k] = sweep_point(base, lambdas[k / steps], grid_temperature(t_min, t_max, steps, i));
  }
  return assemble(base, lambdas, steps, std::move(points));
}

std::vector<SweepRow> figure_sweep_serial(const PhysicalParams& base,
                                          std::span<const double> lambdas, double t_min,
                                          double t_max, int steps) {
  check_sweep(lambdas, t_min, t_max, steps);
  std::vector<SweepRow> points;
  points.reserve(lambdas.size() * steps);
  for (double lambda : lambdas) {
    for (int i = 0; i < steps; ++i) {
      points.push_back(sweep_point(base, lambda, grid_temperature(t_min, t_max, steps, i)));
    }
  }
  return assemble(base, lambdas, steps, std::move(points));
}

}  // namespace adsosc::thermo
