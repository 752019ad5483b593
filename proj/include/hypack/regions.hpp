#pragma once

// Measurable regions of the half-plane, deterministic Monte Carlo area
// fractions inside hyperbolic balls, and quadrature for the horocyclic
// stripe integrals.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypack/hgeom.hpp"
#include "hypack/sampling.hpp"

namespace hypack {

/// Largest ball radius the area machinery accepts (cosh R stays below 1e260).
inline constexpr double kMaxBallRadius = 600.0;

struct Region {
    std::function<bool(const HPoint&)> contains;
    /// Optional exact (quadrature) area of region n ball; empty when unknown.
    std::function<double(const BallSpec&)> exact_area_in_ball;
    std::string label;

    /// The image g(S): contains(z) = S.contains(g^-1 z).
    Region transformed(const Isometry& g) const;
};

Region whole_plane();
Region empty_region();

struct AreaEstimate {
    double fraction = 0.0;
    double std_error = 0.0;
    std::size_t samples_used = 0;
};

/// Sample `index` of the plan: hyperbolic-area-uniform in the ball. Rejection
/// loops draw again with attempt = 1, 2, ...
HPoint sample_ball_point(const BallSpec& ball, const SamplePlan& plan, std::size_t index,
                         std::uint32_t attempt = 0);
std::vector<HPoint> sample_ball_uniform(const BallSpec& ball, const SamplePlan& plan);

AreaEstimate mc_area_fraction(const Region& region, const BallSpec& ball, const SamplePlan& plan);

/// Generic estimator over the plan's ball samples for any predicate.
AreaEstimate mc_fraction(const std::function<bool(const HPoint&)>& predicate, const BallSpec& ball,
                         const SamplePlan& plan);

/// Hyperbolic area of the ball of radius R about (0, 1) between the horocycles
/// y = e^{log_lo} and y = e^{log_hi}.
double log_band_area(double log_lo, double log_hi, double radius);

/// Area A_j of stripe j, between y_j = e^{(j+1/2)W} and y_{j+1}, inside the
/// ball of radius R about (0, 1).
double quad_stripe_area(long j, double radius, double width);

/// Area of the black stripes (even j) inside an arbitrary ball.
double stripe_black_area(const BallSpec& ball, double width);

/// Black area fraction of the ball of radius R about (0, 1).
double quad_black_fraction(double radius, double width);

/// Fraction of the Euclidean disk of radius 2^K covered by the even annuli
/// P_j = {2^{j-1} < |z| <= 2^j}, j even, j >= 2.
double annulus_fraction_euclid(int k);
/// Same covered fraction for an arbitrary Euclidean radius.
double annulus_covered_fraction(double radius);
bool annulus_contains(const EPoint& p);

}  // namespace hypack
