#pragma once

#include <functional>

namespace hypack {

/// Adaptive Gauss-Kronrod (7/15) integral of f over [a, b].
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-10);

/// Same, after the substitution t = a + (b - a)(1 - cos phi) / 2 which turns
/// square-root zeros of the integrand at either endpoint into smooth behaviour.
double integrate_sqrt_endpoints(const std::function<double(double)>& f, double a, double b,
                                double rel_tol = 1e-10);

}  // namespace hypack
