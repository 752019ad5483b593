#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "hypack/density.hpp"
#include "hypack/errors.hpp"
#include "hypack/packings.hpp"

using namespace hypack;
using std::numbers::pi;

namespace {

// Side of the equilateral triangle with angles 2 pi / m, by the hyperbolic law of cosines.
double triangle_side(int m) {
    const double A = 2 * pi / m;
    return std::acosh((std::cos(A) + std::cos(A) * std::cos(A)) / (std::sin(A) * std::sin(A)));
}

}  // namespace

TEST_SUITE("packings") {

TEST_CASE("tight radius is half the triangle side") {
    for (int m : {7, 8, 9, 12}) CHECK(2 * tight_radius(m) == doctest::Approx(triangle_side(m)).epsilon(1e-12));
    CHECK_THROWS_AS(TightPacking(6), DomainError);
}

TEST_CASE("tight density formula values") {
    CHECK(tight_density_formula(7) == doctest::Approx(0.91429461).epsilon(1e-8));
    CHECK(tight_density_formula(8) == doctest::Approx(0.91968889).epsilon(1e-8));
}

TEST_CASE("fundamental domain density matches the formula") {
    for (int m : {7, 8, 9, 10}) {
        const TightPacking t(m);
        CHECK(fundamental_domain_density(t.packing()) == doctest::Approx(tight_density_formula(m)).epsilon(1e-10));
        // The domain is the face: three sectors of angle 2 pi / m.
        const auto fd = t.fundamental_domain();
        CHECK(fd.sectors.size() == 3);
        CHECK(polygon_area(fd.polygon) == doctest::Approx(pi - 6 * pi / m).epsilon(1e-10));
    }
}

TEST_CASE("first ring of the {3,7} packing") {
    const TightPacking t(7);
    const auto centers = t.centers_in_ball(BallSpec(HPoint(0, 1), 1.2));
    CHECK(centers.size() == 8);
    int ring = 0;
    for (const auto& c : centers) {
        const double d = distance(c, HPoint(0, 1));
        if (d > 1e-9) {
            CHECK(d == doctest::Approx(2 * t.radius()).epsilon(1e-10));
            ++ring;
        }
    }
    CHECK(ring == 7);
}

TEST_CASE("property: breadth-first centres agree with folding") {
    for (int m : {7, 8}) {
        const TightPacking t(m);
        const BallSpec window(HPoint(0.3, 1.4), 4.0);
        const auto centers = t.centers_in_ball(BallSpec(window.center, window.radius + 2.0));
        std::mt19937_64 rng(m);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 300; ++i) {
            const HPoint p = point_at_polar(window.center, window.radius * u(rng), 2 * pi * u(rng));
            const auto nearest = *std::min_element(centers.begin(), centers.end(), [&](const HPoint& a, const HPoint& b) {
                return distance(a, p) < distance(b, p);
            });
            CHECK(distance(t.nearest_center(p), nearest) < 1e-8);
        }
    }
}

TEST_CASE("property: packings have no overlaps") {
    const BallSpec window(HPoint(0, 1), 5.0);
    const TightPacking t(7);
    std::vector<HDisk> disks;
    for (const auto& c : t.centers_in_ball(window)) disks.push_back({c, t.radius()});
    CHECK(min_pairwise_gap(disks) > -1e-9);
    CHECK(min_pairwise_gap(disks) < 1e-9);  // tangent disks
    CHECK(min_pairwise_gap(boroczky_disks_in_ball(window, boroczky_max_radius())) > -1e-9);
    CHECK(min_pairwise_gap({}) == INFINITY);
}

TEST_CASE("oversized Boroczky disks are refused") {
    CHECK(boroczky_max_radius() == doctest::Approx(std::acosh(1.5) / 2).epsilon(1e-15));
    CHECK_THROWS_AS(boroczky_packing(0.49), SaturationError);
    CHECK(distance(boroczky_center(0, 0), boroczky_center(0, 1)) == doctest::Approx(2 * boroczky_max_radius()).epsilon(1e-12));
}

TEST_CASE("coverage predicates match the bodies") {
    const Packing p = boroczky_packing(0.4);
    const BallSpec window(HPoint(0.5, 2.0), 3.0);
    const auto disks = p.disks_in_ball(window);
    CHECK(!disks.empty());
    for (const auto& d : disks) {
        CHECK(p.covers(d.center));
        CHECK(p.covers(point_at_polar(d.center, 0.399, 1.0)));
    }
    const Packing tight = TightPacking(8).packing();
    CHECK(tight.covers(HPoint(0, 1)));
    CHECK_FALSE(tight.covers(point_at_polar(HPoint(0, 1), 1.001 * tight_radius(8), pi / 8)));
}

TEST_CASE("stripe parity") {
    const StripeModel s{5.0};
    CHECK(s.horocycle(0) == doctest::Approx(std::exp(2.5)));
    CHECK(s.stripe_index(HPoint(0, 1)) == -1);
    CHECK_FALSE(stripe_contains(HPoint(0, 1), 5.0));
    CHECK(stripe_contains(HPoint(7, std::exp(3.0)), 5.0));
    CHECK(stripe_contains(HPoint(0, s.horocycle(0)), 5.0));   // half-open at the bottom
    CHECK_FALSE(stripe_contains(HPoint(0, s.horocycle(1)), 5.0));
    CHECK(halfspace_contains(HPoint(0, 2.0)));
    CHECK_FALSE(halfspace_contains(HPoint(-1e-9, 2.0)));
}

TEST_CASE("bricks") {
    const double w = std::exp(0.5);
    const BrickTile b = brick_at(HPoint(0.3, 1.2), 0.0, w);
    CHECK(b.contains(HPoint(0.3, 1.2)));
    CHECK(b.area() == doctest::Approx(1.425591).epsilon(1e-6));
    // dx dy / y^2 over the brick, evaluated directly.
    CHECK(b.area() == doctest::Approx(w * b.scale() * (1 / b.y_lo() - 1 / b.y_hi())).epsilon(1e-12));
    const BallSpec huge(HPoint((b.x_lo() + b.x_hi()) / 2, std::sqrt(b.y_lo() * b.y_hi())), 12.0);
    CHECK(brick_area_in_ball(b, huge) == doctest::Approx(b.area()).epsilon(1e-8));
    CHECK(brick_area_in_ball(b, BallSpec(HPoint(100, 1), 1.0)) == 0.0);
}

TEST_CASE("property: transformed packings move their bodies") {
    const Packing p = TightPacking(7).packing();
    const Isometry g = Isometry::rotation(HPoint(0.2, 1.1), 0.7);
    const Packing gp = p.transformed(g);
    const BallSpec w(HPoint(0, 1), 2.0);
    for (const auto& d : p.disks_in_ball(BallSpec(HPoint(0, 1), 1.0))) {
        const HPoint c = apply(g, d.center);
        CHECK(gp.covers(c));
        bool found = false;
        for (const auto& e : gp.disks_in_ball(BallSpec(c, 0.1))) found = found || distance(e.center, c) < 1e-9;
        CHECK(found);
    }
    (void)w;
}

}
