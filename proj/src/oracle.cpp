#include "adsosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "adsosc/error.hpp"
#include "adsosc/spectrum.hpp"

namespace adsosc::oracle {

namespace {

void check_inputs(const PhysicalParams& p, int l, int k, int N) {
  if (!(p.lambda > 0.0)) throw NumericError(ErrorCode::LambdaZero, "oracle needs lambda > 0");
  if (l < 0) throw NumericError(ErrorCode::InvalidArgument, "l must be >= 0");
  if (k < 1 || k > 10) throw NumericError(ErrorCode::InvalidArgument, "k must be in 1..10");
  if (N < 200) throw NumericError(ErrorCode::InvalidArgument, "N must be >= 200");
}

double weight(double s, double x) { return std::sin(s * x) / s; }

GridRow make_row(const PhysicalParams& p, const GridCase& c, int n, double eps_oracle) {
  const double eps_formula = formula_eps(p, n, c.l);
  return {n, c.l, c.lambda, c.b_field, eps_oracle, eps_formula,
          std::abs(eps_oracle - eps_formula) / std::abs(eps_formula)};
}

std::vector<GridRow> solve_case(const GridCase& c, int n_max, int N) {
  const PhysicalParams p = make_params(UnitSystem::Hartree, 1.0, 1.0, c.b_field, c.lambda);
  const EigenResult res = solve_radial(p, c.l, n_max + 1, N);
  std::vector<GridRow> rows;
  for (int n = 0; n <= n_max; ++n) rows.push_back(make_row(p, c, n, res.eigen_eps[n]));
  return rows;
}

}  // namespace

double arclength_potential(const PhysicalParams& p, int l, double x) {
  const double s = std::sqrt(p.lambda);
  const double t = std::tan(s * x);
  const double centrifugal = l == 0 ? 0.0 : static_cast<double>(l) * l * p.lambda / (t * t);
  return centrifugal + eta(p) / (p.hbar * p.hbar * p.lambda) * t * t;
}

tridiag::SymTridiag discretize_radial(const PhysicalParams& p, int l, int N, double x_cut) {
  const double s = std::sqrt(p.lambda);
  // nodes at (i - 1/2) h, i = 1..N; node N + 1 sits on the Dirichlet wall x_cut
  const double h = x_cut / (N + 0.5);
  const double h2 = h * h;
  tridiag::SymTridiag t;
  t.diag.resize(N);
  t.offdiag.resize(N - 1);
  std::vector<double> w(N);
  for (int i = 0; i < N; ++i) w[i] = weight(s, (i + 0.5) * h);
  for (int i = 0; i < N; ++i) {
    const double face_lo = i == 0 ? 0.0 : weight(s, i * h);
    const double face_hi = weight(s, (i + 1) * h);
    t.diag[i] = (face_lo + face_hi) / (h2 * w[i]) + arclength_potential(p, l, (i + 0.5) * h);
    if (i + 1 < N) t.offdiag[i] = -face_hi / (h2 * std::sqrt(w[i] * w[i + 1]));
  }
  return t;
}

std::vector<double> raw_eigenvalues(const PhysicalParams& p, int l, int k, int N, double x_cut) {
  return tridiag::lowest_eigenvalues(discretize_radial(p, l, N, x_cut), k, 1e-15);
}

double choose_cut(const PhysicalParams& p, int l, int k, int N, const SolveOptions& opt) {
  const double x_max = arclength_extent(p.lambda);
  const double stiffness = eta(p) / (p.hbar * p.hbar);
  if (!(stiffness > 0.0)) return x_max;
  // start a few oscillator lengths out
  double cut = std::min(x_max, (6.0 + std::sqrt(4.0 * k + 2.0 * l)) / std::pow(stiffness, 0.25));
  while (cut < x_max) {
    const double top = raw_eigenvalues(p, l, k, N, cut).back();
    // action of the classically forbidden stretch between the outer turning point and the cut
    const int samples = 4000;
    const double dx = cut / samples;
    double action = 0.0;
    for (int i = samples; i-- > 0;) {
      const double v = arclength_potential(p, l, (i + 0.5) * dx) - top;
      if (v <= 0.0) break;
      action += std::sqrt(v) * dx;
    }
    if (action >= opt.wkb_action) return cut;
    cut = 1.5 * cut >= x_max ? x_max : 1.5 * cut;
  }
  return x_max;
}

EigenResult solve_radial(const PhysicalParams& p, int l, int k, int N, const SolveOptions& opt) {
  check_inputs(p, l, k, N);
  EigenResult res;
  res.l = l;
  res.x_cut = choose_cut(p, l, k, N, opt);

  auto extrapolate = [](const std::vector<double>& coarse, const std::vector<double>& fine) {
    std::vector<double> out(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return out;
  };

  int n = N;
  std::vector<double> e1 = raw_eigenvalues(p, l, k, n, res.x_cut);
  std::vector<double> e2 = raw_eigenvalues(p, l, k, 2 * n, res.x_cut);
  std::vector<double> x1 = extrapolate(e1, e2);
  double worst = 0.0;
  while (4 * n <= opt.max_grid) {
    const std::vector<double> e4 = raw_eigenvalues(p, l, k, 4 * n, res.x_cut);
    const std::vector<double> x2 = extrapolate(e2, e4);
    worst = 0.0;
    res.error_estimate.assign(k, 0.0);
    for (int i = 0; i < k; ++i) {
      res.error_estimate[i] = std::abs(x2[i] - x1[i]);
      worst = std::max(worst, res.error_estimate[i] / std::abs(x2[i]));
    }
    res.eigen_eps = x2;
    res.grid_size = 4 * n;
    res.extrapolated = true;
    if (worst <= opt.rel_tol) return res;
    n *= 2;
    e2 = e4;
    x1 = x2;
  }
  std::ostringstream os;
  os << "relative extrapolation change " << worst << " > " << opt.rel_tol << " at N = "
     << res.grid_size << " (l = " << l << ", lambda = " << p.lambda << ")";
  throw NumericError(ErrorCode::ConvergenceFailure, os.str());
}

double formula_eps(const PhysicalParams& p, int n, int l) {
  const double e = spectrum::kg_energy(p, {n, l, 0, Branch::Plus}).value;
  return eps_reduced(p, l, e);
}

std::vector<GridCase> standard_cases(int l_max) {
  std::vector<GridCase> cases;
  for (double lambda : {1e-3, 1e-2, 1e-1}) {
    for (double b : {0.0, 1.0}) {
      for (int l = 0; l <= l_max; ++l) cases.push_back({lambda, b, l});
    }
  }
  return cases;
}

std::vector<GridRow> verify_grid(const std::vector<GridCase>& cases, int n_max, int N) {
  std::vector<std::vector<GridRow>> per_case(cases.size());
  std::vector<std::exception_ptr> failures(cases.size());
  const long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      per_case[i] = solve_case(cases[i], n_max, N);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  std::vector<GridRow> rows;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    rows.insert(rows.end(), per_case[i].begin(), per_case[i].end());
  }
  return rows;
}

std::vector<GridRow> verify_grid_serial(const std::vector<GridCase>& cases, int n_max, int N) {
  std::vector<GridRow> rows;
  for (const GridCase& c : cases) {
    const std::vector<GridRow> part = solve_case(c, n_max, N);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

}  // namespace adsosc::oracle
