#include "hypack/regions.hpp"

#include <cmath>
#include <numbers>

#include "hypack/errors.hpp"
#include "hypack/quadrature.hpp"

namespace hypack {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadRelTol = 1e-10;

void check_radius(double radius) {
    if (radius > kMaxBallRadius) throw RangeError("ball radius exceeds the supported range (R <= 600)");
}

AreaEstimate estimate_from_counts(const std::vector<std::uint64_t>& hits, std::size_t samples) {
    const std::size_t strata = hits.size();
    AreaEstimate est;
    est.samples_used = samples;
    if (strata == 1) {
        const double n = static_cast<double>(samples);
        est.fraction = static_cast<double>(hits[0]) / n;
        est.std_error = std::sqrt(est.fraction * (1.0 - est.fraction) / n);
        return est;
    }
    double var = 0.0;
    for (std::size_t b = 0; b < strata; ++b) {
        const double n_b = static_cast<double>(samples / strata + (b < samples % strata ? 1 : 0));
        const double p_b = static_cast<double>(hits[b]) / n_b;
        est.fraction += p_b / static_cast<double>(strata);
        var += p_b * (1.0 - p_b) / n_b;
    }
    est.std_error = std::sqrt(var) / static_cast<double>(strata);
    return est;
}

}  // namespace

Region Region::transformed(const Isometry& g) const {
    const Isometry g_inv = inverse(g);
    Region out;
    out.label = label;
    out.contains = [inner = contains, g_inv](const HPoint& z) { return inner(apply(g_inv, z)); };
    if (exact_area_in_ball) {
        out.exact_area_in_ball = [inner = exact_area_in_ball, g_inv](const BallSpec& b) {
            return inner(BallSpec(apply(g_inv, b.center), b.radius));
        };
    }
    return out;
}

Region whole_plane() {
    return {[](const HPoint&) { return true; }, [](const BallSpec& b) { return ball_area(b.radius); }, "plane"};
}

Region empty_region() {
    return {[](const HPoint&) { return false; }, [](const BallSpec&) { return 0.0; }, "empty"};
}

HPoint sample_ball_point(const BallSpec& ball, const SamplePlan& plan, std::size_t index,
                         std::uint32_t attempt) {
    check_radius(ball.radius);
    double u = counter_uniform(plan.seed, index, 0, attempt);
    const double v = counter_uniform(plan.seed, index, 1, attempt);
    if (plan.radial_bands > 1) {
        const auto band = static_cast<double>(index % plan.radial_bands);
        u = (band + u) / static_cast<double>(plan.radial_bands);
    }
    // Inverse CDF of the radial density sinh(rho) on [0, R]:
    // cosh rho - 1 = u (cosh R - 1)  <=>  sinh(rho/2) = sqrt(u) sinh(R/2).
    const double rho = 2.0 * std::asinh(std::sqrt(u) * std::sinh(0.5 * ball.radius));
    return point_at_polar(ball.center, rho, 2.0 * kPi * v);
}

std::vector<HPoint> sample_ball_uniform(const BallSpec& ball, const SamplePlan& plan) {
    std::vector<HPoint> pts;
    pts.reserve(plan.samples);
    for (std::size_t i = 0; i < plan.samples; ++i) pts.push_back(sample_ball_point(ball, plan, i));
    return pts;
}

AreaEstimate mc_fraction(const std::function<bool(const HPoint&)>& predicate, const BallSpec& ball,
                         const SamplePlan& plan) {
    if (plan.samples == 0) throw DomainError("sample plan needs at least one sample");
    check_radius(ball.radius);
    const std::size_t strata = plan.radial_bands > 1 ? plan.radial_bands : 1;
    if (plan.samples < strata) throw DomainError("fewer samples than radial bands");
    const auto hits = count_by_stratum(plan.samples, strata, plan.workers, [&](std::size_t i) {
        return predicate(sample_ball_point(ball, plan, i));
    });
    return estimate_from_counts(hits, plan.samples);
}

AreaEstimate mc_area_fraction(const Region& region, const BallSpec& ball, const SamplePlan& plan) {
    return mc_fraction(region.contains, ball, plan);
}

double log_band_area(double log_lo, double log_hi, double radius) {
    check_radius(radius);
    // The radicand 2y cosh R - 1 - y^2 factors as (y - e^{-R})(e^{R} - y); its
    // roots bound the ball vertically, so clip to them in log y.
    const double lo = std::max(log_lo, -radius);
    const double hi = std::min(log_hi, radius);
    if (!(lo < hi)) return 0.0;
    // With y = e^s the integrand 2 sqrt(radicand) / y^2 dy becomes
    // 2 e^{(R - s)/2} sqrt((1 - e^{-(s+R)}) (1 - e^{-(R-s)})) ds.
    auto integrand = [radius](double s) {
        const double below = -std::expm1(-(s + radius));
        const double above = -std::expm1(-(radius - s));
        const double prod = below * above;
        if (!(prod > 0.0)) return 0.0;
        return 2.0 * std::exp(0.5 * (radius - s)) * std::sqrt(prod);
    };
    return integrate_sqrt_endpoints(integrand, lo, hi, kQuadRelTol);
}

double quad_stripe_area(long j, double radius, double width) {
    if (!(width > 0.0)) throw DomainError("stripe width must be positive");
    const double lo = (static_cast<double>(j) + 0.5) * width;
    return log_band_area(lo, lo + width, radius);
}

double stripe_black_area(const BallSpec& ball, double width) {
    if (!(width > 0.0)) throw DomainError("stripe width must be positive");
    check_radius(ball.radius);
    // Horizontal translation and the dilation z -> z / K move the ball to (0, 1)
    // and shift every horocycle by -log K in log y.
    const double shift = -ball.center.log_y();
    const double r = ball.radius;
    const long j_lo = static_cast<long>(std::floor((-r - shift) / width - 0.5)) - 1;
    const long j_hi = static_cast<long>(std::ceil((r - shift) / width - 0.5)) + 1;
    double area = 0.0;
    for (long j = j_lo; j <= j_hi; ++j) {
        if (j % 2 != 0) continue;
        const double lo = (static_cast<double>(j) + 0.5) * width + shift;
        area += log_band_area(lo, lo + width, r);
    }
    return area;
}

double quad_black_fraction(double radius, double width) {
    if (!(radius > 0.0)) throw DomainError("quad_black_fraction requires R > 0");
    return stripe_black_area(BallSpec(HPoint(0.0, 1.0), radius), width) / ball_area(radius);
}

double annulus_fraction_euclid(int k) {
    if (k < 2) throw DomainError("annulus_fraction_euclid requires K >= 2");
    // (sum over even 2 <= j <= K of 3 * 4^{j-1}) / 4^K, summed smallest term first.
    double sum = 0.0;
    const int top = (k % 2 == 0) ? k : k - 1;
    for (int j = 2; j <= top; j += 2) sum += 3.0 * std::ldexp(1.0, 2 * (j - 1 - k));
    return sum;
}

double annulus_covered_fraction(double radius) {
    if (!(radius > 0.0)) throw DomainError("annulus_covered_fraction requires a positive radius");
    double covered = 0.0;
    for (int j = 2;; j += 2) {
        const double inner = std::ldexp(1.0, j - 1);
        if (inner >= radius) break;
        const double outer = std::min(radius, std::ldexp(1.0, j));
        covered += (outer - inner) * (outer + inner);
    }
    return covered / (radius * radius);
}

bool annulus_contains(const EPoint& p) {
    const double rho = std::hypot(p.x, p.y);
    if (!(rho > 2.0)) return false;
    int exp2 = 0;
    const double mant = std::frexp(rho, &exp2);  // rho = mant * 2^exp2, mant in [1/2, 1)
    const int j = (mant == 0.5) ? exp2 - 1 : exp2;
    return j % 2 == 0;
}

}  // namespace hypack
