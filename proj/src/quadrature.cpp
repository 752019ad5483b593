#include "hypack/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

namespace hypack {

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 20, rel_tol, &error);
}

double integrate_sqrt_endpoints(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    const double half = 0.5 * (b - a);
    auto g = [&](double phi) {
        const double t = a + half * (1.0 - std::cos(phi));
        return f(t) * half * std::sin(phi);
    };
    return integrate_adaptive(g, 0.0, std::numbers::pi, rel_tol);
}

}  // namespace hypack
