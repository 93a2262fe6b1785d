#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adsosc/params.hpp"

namespace adsosc::thermo {

/// Z = sum_n exp(-(m c^2 / k_B T) sqrt(a1 + a2 n + a3 n^2)) at fixed l.
struct PartitionCoeffs {
  double a1;
  double a2;
  double a3;
  double theta;      // 3 lambda / (m^2 c^2 (w~^2 + w^2))
  bool a1_regular;   // a1 >= 1; reported, not enforced
  double discriminant() const noexcept { return a2 * a2 - 4.0 * a1 * a3; }
};

PartitionCoeffs partition_coeffs(const PhysicalParams& p, int l = 0);

/// chi = m c^2 sqrt(a1) / k_B T.
double chi(const PhysicalParams& p, const PartitionCoeffs& c, double T);
/// sigma = (k_B T / m c^2)^2 4 a3 / (a2^2 - 4 a1 a3).
double sigma(const PhysicalParams& p, const PartitionCoeffs& c, double T);

enum class Scheme { Direct, EulerMaclaurin, ClosedForm };
std::string_view to_string(Scheme s) noexcept;

struct DirectSum {
  double z;
  double log_z;
  long terms;
  double tail_bound;  // bound on the omitted tail relative to the partial sum
};

/// Direct Boltzmann sum over n on the positive branch, stopped once the
/// analytic tail bound falls below tail_tol times the partial sum.
/// Throws TailDivergence when max_terms is reached first.
DirectSum partition_direct(const PhysicalParams& p, int l, double T, double tail_tol = 1e-12,
                           long max_terms = 100'000'000);

struct ThermoPoint {
  double T;
  double Z;
  double F;
  double U;
  double C;
  double S;
  Scheme scheme;
  bool beyond_critical = false;
};

/// Thermodynamics of the direct sum: U and C from energy moments, S = (U - F)/T.
ThermoPoint thermo_direct(const PhysicalParams& p, int l, double T, double tail_tol = 1e-12);

/// sum_n f(n) ~ f(0)/2 + integral - sum_{p=1}^{p_max} B_{2p}/(2p)! f^{(2p-1)}(0),
/// with f given by its Taylor coefficients at 0 (taylor[k] = f^{(k)}(0)/k!).
/// The correction sum is asymptotic and stops before the first term that grows.
double euler_maclaurin(std::span<const double> taylor, double integral, int p_max);

/// Taylor coefficients at n = 0 of exp(-K sqrt(a1 + a2 n + a3 n^2)), orders 0..order.
std::vector<double> boltzmann_taylor(const PartitionCoeffs& c, double K, int order);

enum class IntegralRoute {
  QuadX,   // quadrature of the summand over n in (0, inf)
  QuadY,   // quadrature in y = sqrt(1 + (a2/a1) n + (a3/a1) n^2)
  Series,  // binomial series in 4 a1 a3 / (a2^2 - 4 a1 a3) with incomplete-gamma brackets
};
std::string_view to_string(IntegralRoute r) noexcept;

/// The integral term of the Euler-Maclaurin formula.
/// QuadY and Series need a2^2 > 4 a1 a3 (NegativeDiscriminant otherwise).
/// Series is asymptotic: it is cut at its smallest term and throws
/// SeriesDivergence (with the index) if terms grow before reaching series_tol.
double em_integral(const PhysicalParams& p, int l, double T, IntegralRoute route,
                   double series_tol = 1e-10);

struct EmOptions {
  int p_max = 5;
  IntegralRoute route = IntegralRoute::QuadX;
};

double partition_euler_maclaurin(const PhysicalParams& p, int l, double T,
                                 const EmOptions& opt = {});

/// Thermodynamics from the Euler-Maclaurin Z, derivatives of ln Z by 5-point stencils.
ThermoPoint thermo_euler_maclaurin(const PhysicalParams& p, int l, double T,
                                   const EmOptions& opt = {});

enum class HighTForm {
  Leading,         // (k_B T)^2 / (2 hbar m c^2 sqrt(w~^2 + w^2)) (1 - theta (k_B T)^2)
  WithCorrection,  // first order in lambda keeping the (k_B T)^{-2} parenthetical
};

/// High-temperature partition function. Throws BeyondCritical when the
/// deformation factor is not positive.
double partition_high_T(const PhysicalParams& p, double T, HighTForm form = HighTForm::Leading,
                        int l = 0);

/// F, U, C, S of the leading high-temperature Z. Past T_c the point is
/// flagged beyond_critical, Z is the (non-positive) formula value and F, S are NaN.
/// Throws CriticalSingularity within 1e-12 of T_c.
ThermoPoint thermo_closed_form(const PhysicalParams& p, double T);

struct CriticalTemperature {
  double t_c;             // theta (k_B T_c)^2 = 1 with all constants kept
  double t_c_simplified;  // 1 / sqrt(3 lambda)
};

/// Throws NoCriticalPoint when lambda == 0.
CriticalTemperature critical_temperature(const PhysicalParams& p);

struct SweepRow {
  double lambda;
  ThermoPoint point;
  std::string flag;  // "", "beyond_critical", "t_c" (marker row) or the error code name
};

/// Closed-form thermodynamics on a uniform T grid for each lambda, with one
/// T_c marker row (NaN values) per deformed lambda. Rows are sorted by lambda
/// order then T. Points run in parallel.
std::vector<SweepRow> figure_sweep(const PhysicalParams& base, std::span<const double> lambdas,
                                   double t_min, double t_max, int steps);
/// Serial reference of figure_sweep.
std::vector<SweepRow> figure_sweep_serial(const PhysicalParams& base,
                                          std::span<const double> lambdas, double t_min,
                                          double t_max, int steps);

}  // namespace adsosc::thermo
