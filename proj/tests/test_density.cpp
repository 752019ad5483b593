#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "hypack/density.hpp"
#include "hypack/errors.hpp"
#include "hypack/packings.hpp"

using namespace hypack;
using std::numbers::pi;

namespace {

SamplePlan plan_of(std::size_t n, std::uint64_t seed = 17) {
    SamplePlan p;
    p.samples = n;
    p.seed = seed;
    return p;
}

bool within_sigmas(const AreaEstimate& e, double truth, double k = 4.0) {
    return std::abs(e.fraction - truth) <= k * std::max(e.std_error, 1.0 / e.samples_used);
}

DensityCurve curve_of(const std::vector<double>& values) {
    DensityCurve c;
    for (std::size_t i = 0; i < values.size(); ++i) c.points.push_back({1.0 + i, values[i], 0.0, 0});
    return c;
}

}  // namespace

TEST_SUITE("density") {

TEST_CASE("method names") {
    CHECK(to_string(CurveMethod::mc) == "mc");
    CHECK(to_string(CurveMethod::quadrature) == "quadrature");
    CHECK(to_string(CurveMethod::closed_form) == "closed-form");
}

TEST_CASE("density curves use quadrature when available") {
    const std::vector<double> radii{2.0, 4.0, 6.0};
    const auto c = density_curve(stripe_packing(2.0), HPoint(0, 1), radii, plan_of(1000));
    CHECK(c.method == CurveMethod::quadrature);
    for (const auto& p : c.points) CHECK(p.fraction == doctest::Approx(quad_black_fraction(p.radius, 2.0)).epsilon(1e-12));
    const auto mc = density_curve(stripe_packing(2.0), HPoint(0, 1), radii, plan_of(100000), false);
    CHECK(mc.method == CurveMethod::mc);
    for (const auto& p : mc.points) CHECK(within_sigmas({p.fraction, p.std_error, p.samples}, quad_black_fraction(p.radius, 2.0)));
    const std::vector<double> bad{2.0, 2.0};
    CHECK_THROWS_AS(density_curve(stripe_packing(2.0), HPoint(0, 1), bad, plan_of(10)), DomainError);
}

TEST_CASE("tight packing ball averages approach the packing density") {
    const auto e = f_R_estimate(TightPacking(7).packing(), 6.0, plan_of(200000));
    CHECK(std::abs(e.fraction - tight_density_formula(7)) < 0.01);
}

TEST_CASE("half-space limits") {
    CHECK(halfspace_density_limit(1.0, HalfspaceSide::near) == doctest::Approx(0.775583).epsilon(1e-6));
    CHECK(halfspace_density_limit(0.0, HalfspaceSide::near) == doctest::Approx(0.5).epsilon(1e-15));
    for (double t : {0.3, 1.0, 2.0})
        CHECK(halfspace_density_limit(t, HalfspaceSide::near) + halfspace_density_limit(t, HalfspaceSide::far) == doctest::Approx(1.0));
    // Centre at distance 1 inside the covered side, large ball.
    const HPoint c(std::sinh(1.0), 1.0);
    const auto e = mc_area_fraction(halfspace_packing().as_region(), BallSpec(c, 12.0), plan_of(200000));
    CHECK(std::abs(e.fraction - halfspace_density_limit(1.0, HalfspaceSide::near)) < 0.005);
}

TEST_CASE("oscillation report") {
    const auto flat = oscillation_report(curve_of({0.3, 0.4, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5}), 0.5);
    CHECK(flat.converged);
    CHECK(flat.liminf_est == 0.5);
    const auto swing = oscillation_report(curve_of({0.5, 0.5, 0.1, 0.9, 0.1, 0.9, 0.1, 0.9}), 0.5);
    CHECK_FALSE(swing.converged);
    CHECK(swing.liminf_est == 0.1);
    CHECK(swing.limsup_est == 0.9);
    CHECK(swing.window_hi == 8.0);
    CHECK_THROWS_AS(oscillation_report(curve_of({0.1, 0.2, 0.3, 0.4, 0.5}), 0.5), DomainError);
}

TEST_CASE("fundamental domains only where defined") {
    CHECK_THROWS_AS(fundamental_domain_density(stripe_packing(1.0)), UnsupportedError);
}

TEST_CASE("tile densities") {
    const TightPacking t(7);
    const auto face = tile_density(t.packing(), polygon_tile(t.face()), plan_of(200000));
    CHECK(within_sigmas(face, tight_density_formula(7)));
    const BrickTile b = brick_at(HPoint(0, 1), 0.0, std::exp(0.5));
    const auto brick = tile_density(stripe_packing(1.0), brick_tile(b), plan_of(100000));
    // Black stripes with W = 1 cut the brick [y0, e^2 y0] into known horizontal bands.
    double covered = 0.0;
    for (long j = -4; j <= 4; j += 2) {
        const double lo = std::max(std::exp(j + 0.5), b.y_lo()), hi = std::min(std::exp(j + 1.5), b.y_hi());
        if (hi > lo) covered += b.width * b.scale() * (1 / lo - 1 / hi);
    }
    CHECK(within_sigmas(brick, covered / b.area()));
}

TEST_CASE("Euclidean windows") {
    const auto lattice = euclid_window_density(lattice_disk_packing(1.0, 0.5), 20.0, plan_of(200000));
    CHECK(within_sigmas(lattice, pi / 4));
    const auto small = euclid_window_density(lattice_disk_packing(1.0, 0.25), 20.0, plan_of(200000));
    CHECK(within_sigmas(small, pi / 16));
    CHECK(euclid_window_density(empty_euclidean_packing(), 5.0, plan_of(1000)).fraction == 0.0);
    const auto ann = euclid_window_density(annulus_packing(), 2.0 * 8.0, plan_of(100000));
    CHECK(ann.fraction > 0.0);
    const std::vector<int> ks{2, 3, 4};
    const auto c = annulus_curve(ks);
    CHECK(c.method == CurveMethod::closed_form);
    CHECK(c.points[0].fraction == 0.75);
    CHECK(c.points[1].radius == 8.0);
}

TEST_CASE("mass transport average is the packing density") {
    const auto src = voronoi_source(TightPacking(7));
    const auto e = mass_transport_check(src, BallSpec(HPoint(0, 1), 3.0), plan_of(2000));
    CHECK(e.fraction == doctest::Approx(tight_density_formula(7)).epsilon(1e-8));
    const auto moved = mass_transport_check(src.transformed(Isometry::rotation(HPoint(0.3, 1.2), 0.4)),
                                            BallSpec(HPoint(0, 1), 3.0), plan_of(2000));
    CHECK(moved.fraction == doctest::Approx(tight_density_formula(7)).epsilon(1e-8));
}

}
