#pragma once

#include <vector>

#include "adsosc/params.hpp"
#include "adsosc/tridiag.hpp"

namespace adsosc::oracle {

/// Lowest eigenvalues of the deformed radial operator at fixed l, in the
/// reduced form eps of the radial equation.
struct EigenResult {
  int l = 0;
  std::vector<double> eigen_eps;       // extrapolated, ascending
  std::vector<double> error_estimate;  // |difference of the last two extrapolants|
  int grid_size = 0;                   // finest grid used
  double x_cut = 0.0;                  // arclength extent of the grid
  bool extrapolated = false;
};

struct SolveOptions {
  double rel_tol = 1e-7;   // accepted extrapolation change, relative
  int max_grid = 256000;
  double wkb_action = 40.0;  // decay action required beyond the outer turning point
};

/// Cell-centred discretization of the radial operator in the arclength
/// coordinate on (0, x_cut) with N cells, symmetrized by the measure weight.
tridiag::SymTridiag discretize_radial(const PhysicalParams& p, int l, int N, double x_cut);

/// Radial potential in the arclength coordinate:
/// l^2 lambda cot^2(sqrt(lambda) x) + eta/(hbar^2 lambda) tan^2(sqrt(lambda) x).
double arclength_potential(const PhysicalParams& p, int l, double x);

/// Un-extrapolated lowest k eigenvalues on a fixed grid.
std::vector<double> raw_eigenvalues(const PhysicalParams& p, int l, int k, int N, double x_cut);

/// Domain cut chosen so every requested level has decayed (WKB action) before
/// the Dirichlet wall; pi/(2 sqrt(lambda)) when that is reached first.
double choose_cut(const PhysicalParams& p, int l, int k, int N, const SolveOptions& opt = {});

/// Lowest k eigenvalues, Richardson-extrapolated over N, 2N, 4N; N doubles
/// until the two last extrapolants agree to opt.rel_tol.
/// Throws ConvergenceFailure past opt.max_grid.
EigenResult solve_radial(const PhysicalParams& p, int l, int k, int N = 2000,
                         const SolveOptions& opt = {});

/// Closed-form reduced eigenvalue of level (n, l), via the relativistic energy.
double formula_eps(const PhysicalParams& p, int n, int l);

struct GridCase {
  double lambda;
  double b_field;
  int l;
};

struct GridRow {
  int n;
  int l;
  double lambda;
  double b_field;
  double eps_oracle;
  double eps_formula;
  double rel_error;
};

/// Oracle vs closed form over the cases, levels n = 0..n_max, Hartree units
/// with m = omega = 1. Cases run in parallel; rows are ordered by case then n.
std::vector<GridRow> verify_grid(const std::vector<GridCase>& cases, int n_max, int N = 2000);
/// Serial reference of verify_grid.
std::vector<GridRow> verify_grid_serial(const std::vector<GridCase>& cases, int n_max,
                                        int N = 2000);

/// The acceptance grid: lambda in {1e-3, 1e-2, 1e-1}, B in {0, 1}, l = 0..l_max.
std::vector<GridCase> standard_cases(int l_max = 3);

}  // namespace adsosc::oracle
