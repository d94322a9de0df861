#pragma once

#include <functional>

namespace hwext {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (G7/K15) integration; bisects the worst
/// subinterval until the summed |K15 - G7| estimate drops below the target.
/// The target is max(abs_tol, 50 * eps * integral of |f|) so round-off cannot stall it.
/// Throws Error(Quadrature) with the achieved estimate when max_intervals is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-12, int max_intervals = 4000);

/// Composite Gauss-Legendre rule: `panels` equal panels with `order` nodes each.
/// Non-adaptive and independent of the Kronrod tables; used as a cross-check oracle.
double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int panels, int order = 20);

}  // namespace hwext
