#pragma once

#include <functional>

#include "adsosc/wavefn.hpp"

namespace adsosc::quad {

struct QuadResult {
  double value;
  double error;  // estimated absolute error
  double l1 = 0.0;  // integral of |f|, the scale for relative tolerances
};

inline constexpr double kDefaultTolerance = 1e-10;

/// Globally adaptive Gauss-Kronrod (61 points, error |K61 - G30| per
/// interval) on [a, b]; b may be +inf. Bisects the worst interval until the
/// summed error is at most max(abs_tol, rel_tol * L1).
/// Throws QuadratureFailure if max_intervals is reached first.
QuadResult adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                    double rel_tol = 1e-14, int max_intervals = 4000);

/// int 2 pi r F(r) dr / sqrt(1 - lambda r^2) over (0, 1/sqrt(lambda)) for AdS,
/// int 2 pi r F(r) dr over (0, inf) for Flat. The AdS integral runs in
/// u = lambda r^2, where it reads (pi / lambda) int_0^1 F du / sqrt(1 - u),
/// and then in rho = sqrt(1 - u), which removes the endpoint singularity.
QuadResult integrate(const std::function<double(double)>& F, Measure measure, double lambda,
                     double abs_tol = kDefaultTolerance);

/// <f|g> under the chosen measure (both real radial functions).
QuadResult quad_inner(const std::function<double(double)>& f,
                      const std::function<double(double)>& g, Measure measure, double lambda,
                      double abs_tol = kDefaultTolerance);

/// <f|f>.
QuadResult quad_norm(const std::function<double(double)>& f, Measure measure, double lambda,
                     double abs_tol = kDefaultTolerance);

}  // namespace adsosc::quad
