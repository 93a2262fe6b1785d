#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "adsosc/params.hpp"

namespace adsosc {

/// Radial integration measures. AdS: 2 pi r dr / sqrt(1 - lambda r^2) on
/// (0, 1/sqrt(lambda)); Flat: 2 pi r dr on (0, inf).
enum class Measure { AdS, Flat };

}  // namespace adsosc

namespace adsosc::wavefn {

struct GridPoint {
  double r;
  double value;
};

/// Radial part of a stationary state (the e^{i l phi} phase is carried
/// separately). Evaluation is pure; copies share the same evaluator.
class RadialFunction {
 public:
  using Evaluator = std::function<double(double)>;

  RadialFunction(QuantumNumbers qn, std::optional<double> mu, double norm_const,
                 double lambda, double sampling_extent, Evaluator f);

  double operator()(double r) const { return f_(r); }

  const QuantumNumbers& qn() const noexcept { return qn_; }
  std::optional<double> mu() const noexcept { return mu_; }
  double norm_const() const noexcept { return norm_const_; }
  double lambda() const noexcept { return lambda_; }
  /// 1/sqrt(lambda), or +inf for the flat-space state.
  double domain_max() const noexcept;
  /// Radius beyond which the state is negligible; equals domain_max() when deformed.
  double sampling_extent() const noexcept { return extent_; }
  Measure measure() const noexcept { return lambda_ > 0.0 ? Measure::AdS : Measure::Flat; }

  /// Uniform samples on (0, sampling_extent) with both endpoints inset by
  /// 1e-6 of the extent.
  std::vector<GridPoint> sample(std::size_t points = 1024) const;

 private:
  QuantumNumbers qn_;
  std::optional<double> mu_;
  double norm_const_;
  double lambda_;
  double extent_;
  Evaluator f_;
};

/// Normalization constant C_n of the deformed KG state.
double kg_norm_const(const PhysicalParams& p, const QuantumNumbers& qn);

/// Deformed KG radial state
///   C_n 2^{l/2} (1 - lambda r^2)^{mu/2} (lambda r^2)^{l/2} P_n^{(l, mu-1/2)}(1 - 2 lambda r^2).
/// Normalized under the AdS measure. Requires lambda > 0.
RadialFunction kg_wavefunction(const PhysicalParams& p, const QuantumNumbers& qn);

/// Flat-space (lambda = 0) KG oscillator state with Omega = (m/hbar) sqrt(w^2 + w~^2):
///   sqrt(n! Omega^{l+1} / (pi (n+l)!)) e^{-Omega r^2/2} r^l L_n^l(Omega r^2).
RadialFunction kg_flat_wavefunction(const PhysicalParams& p, const QuantumNumbers& qn);

/// Deformed state when lambda > 0, flat state otherwise.
RadialFunction kg_state(const PhysicalParams& p, const QuantumNumbers& qn);

/// Five-component scalar DKP state (phi, chi, psi_1, psi_2, psi_3) built on
/// the KG radial solution. psi_2 is purely imaginary; psi_3 vanishes.
class DkpSpinor {
 public:
  using Components = std::array<std::complex<double>, 5>;

  DkpSpinor(const PhysicalParams& p, const QuantumNumbers& qn, double energy);

  Components operator()(double r) const;

  double phi(double r) const;
  double coefficient_m(double r) const;
  /// N(r) is i times this real function.
  double coefficient_n_imag(double r) const;
  double coefficient_lambda(double r) const;

  double energy() const noexcept { return energy_; }
  double norm_const() const noexcept { return norm_const_; }
  double mu() const noexcept { return mu_; }
  double domain_max() const noexcept;
  const QuantumNumbers& qn() const noexcept { return qn_; }

  struct Row {
    double r;
    Components values;
  };
  std::vector<Row> sample(std::size_t points = 1024) const;

 private:
  double envelope() const;

  PhysicalParams p_;
  QuantumNumbers qn_;
  double energy_;
  double mu_;
  double norm_const_;
};

/// Scalar DKP state for the positive-branch energy of (n, l).
DkpSpinor dkp_scalar_spinor(const PhysicalParams& p, const QuantumNumbers& qn);

/// Normalization constant C' of the scalar DKP spinor at energy E.
double dkp_norm_const(const PhysicalParams& p, const QuantumNumbers& qn, double energy);

struct OdeResidualOptions {
  double step_fraction = 1e-4;  // finite-difference step as a fraction of the sampled extent
  int samples = 400;
  std::optional<double> eps;    // reduced eigenvalue; defaults to the closed-form one
};

/// max_r |L[R](r)| / max_r (largest term of L[R]) for the deformed radial
/// operator (flat operator when lambda = 0), derivatives by Richardson-refined
/// central differences.
double ode_residual(const PhysicalParams& p, const QuantumNumbers& qn, const RadialFunction& f,
                    const OdeResidualOptions& opt = {});

}  // namespace adsosc::wavefn
