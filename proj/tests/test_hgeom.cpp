#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "hypack/errors.hpp"
#include "hypack/hgeom.hpp"

using namespace hypack;
using std::numbers::pi;

namespace {

// Direct arccosh evaluation, independent of the library's stable form.
double acosh_distance(const HPoint& p, const HPoint& q) {
    const double dx = p.x() - q.x(), dy = p.y() - q.y();
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y() * q.y()));
}

HPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uly(-2.0, 2.0);
    return HPoint(ux(rng), std::exp(uly(rng)));
}

Isometry random_isometry(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0), ua(0.3, 2.0);
    const double a = ua(rng), b = u(rng), c = u(rng);
    return Isometry(a, b, c, (1.0 + b * c) / a);
}

}  // namespace

TEST_SUITE("hgeom") {

TEST_CASE("distance on the imaginary axis is log of the ratio") {
    CHECK(distance(HPoint(0, 1), HPoint(0, std::exp(1.0))) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(distance(HPoint(2, 3), HPoint(2, 3)) == 0.0);
}

TEST_CASE("distance agrees with the arccosh formula") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        const HPoint p = random_point(rng), q = random_point(rng);
        const double d = distance(p, q);
        if (d > 1e-3) CHECK(d == doctest::Approx(acosh_distance(p, q)).epsilon(1e-10));
    }
}

TEST_CASE("far points keep exact distances through log y") {
    const HPoint p = HPoint::from_log(0.0, -800.0);
    const HPoint q = HPoint::from_log(0.0, -790.0);
    CHECK_FALSE(p.y_in_range());
    CHECK(distance(p, q) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("property: metric axioms") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
        const HPoint p = random_point(rng), q = random_point(rng), r = random_point(rng);
        CHECK(distance(p, q) == doctest::Approx(distance(q, p)).epsilon(1e-13));
        CHECK(distance(p, r) <= distance(p, q) + distance(q, r) + 1e-12);
    }
}

TEST_CASE("property: Mobius maps preserve distance") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const Isometry g = random_isometry(rng);
        CHECK(g.determinant() == doctest::Approx(1.0).epsilon(1e-12));
        const HPoint p = random_point(rng), q = random_point(rng);
        CHECK(distance(apply(g, p), apply(g, q)) == doctest::Approx(distance(p, q)).epsilon(1e-9));
        const HPoint back = apply(inverse(g), apply(g, p));
        CHECK(distance(back, p) < 1e-9);
        const Isometry h = random_isometry(rng);
        CHECK(distance(apply(compose(g, h), p), apply(g, apply(h, p))) < 1e-9);
    }
}

TEST_CASE("non-positive determinant is rejected") {
    CHECK_THROWS(Isometry(0, 1, 1, 0));
    CHECK_THROWS(Isometry(1, 0, 0, 0));
}

TEST_CASE("rotation fixes its centre and turns polar angles") {
    const HPoint c(0.4, 1.7);
    const Isometry g = Isometry::rotation(c, 0.9);
    CHECK(distance(apply(g, c), c) < 1e-12);
    const HPoint q = point_at_polar(c, 1.3, 0.2);
    CHECK(distance(c, q) == doctest::Approx(1.3).epsilon(1e-12));
    CHECK(polar_angle(c, q) == doctest::Approx(0.2).epsilon(1e-10));
    CHECK(polar_angle(c, apply(g, q)) == doctest::Approx(1.1).epsilon(1e-10));
    // theta = 0 points up, pi/2 points left.
    CHECK(point_at_polar(c, 1.0, 0.0).y() > c.y());
    CHECK(point_at_polar(c, 1.0, pi / 2).x() < c.x());
}

TEST_CASE("midpoint is equidistant and on the segment") {
    const HPoint p(-1, 0.5), q(2, 3);
    const HPoint m = midpoint(p, q);
    CHECK(distance(p, m) == doctest::Approx(distance(p, q) / 2).epsilon(1e-12));
    CHECK(distance(q, m) == doctest::Approx(distance(p, q) / 2).epsilon(1e-12));
}

TEST_CASE("bisector points are equidistant; reflection swaps the sites") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const HPoint p = random_point(rng), q = random_point(rng);
        const Geodesic b = perpendicular_bisector(p, q);
        for (double s : {-2.0, -0.3, 0.0, 0.7, 1.5}) {
            const HPoint z = b.point_at(s);
            CHECK(distance(z, p) == doctest::Approx(distance(z, q)).epsilon(1e-8));
            CHECK(std::abs(signed_distance(b, z)) < 1e-9);
        }
        CHECK(distance(reflect(b, p), q) < 1e-8);
        CHECK(signed_distance(b, p) == doctest::Approx(-signed_distance(b, q)).epsilon(1e-8));
    }
}

TEST_CASE("geodesic intersections lie on both geodesics") {
    const Geodesic g = geodesic_through(HPoint(-1, 1), HPoint(1, 1));
    const Geodesic h = geodesic_through(HPoint(0, 0.2), HPoint(0.1, 5));
    const auto z = intersect(g, h);
    REQUIRE(z.has_value());
    CHECK(std::abs(signed_distance(g, *z)) < 1e-12);
    CHECK(std::abs(signed_distance(h, *z)) < 1e-12);
    CHECK_FALSE(intersect(geodesic_through(HPoint(0, 1), HPoint(0, 2)), geodesic_through(HPoint(1, 1), HPoint(1, 2))));
}

TEST_CASE("disk Euclidean form round-trips") {
    const HDisk d{HPoint(0.3, 2.0), 1.25};
    const EuclideanCircle c = disk_euclidean_form(d);
    CHECK(c.y_hi * c.y_lo == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(std::log(c.y_hi / c.y_lo) == doctest::Approx(2.5).epsilon(1e-12));
    const HDisk back = hdisk_from_euclidean(c);
    CHECK(distance(back.center, d.center) < 1e-12);
    CHECK(back.radius == doctest::Approx(1.25).epsilon(1e-12));
    CHECK_THROWS_AS(hdisk_from_euclidean(0.0, 1.0, 2.0), DomainError);
}

TEST_CASE("ball area and angle of parallelism") {
    CHECK(ball_area(1.0) == doctest::Approx(3.412276).epsilon(1e-6));
    CHECK(ball_area(0.0) == 0.0);
    // 2 atan(e^-t) is the same angle by a different route.
    for (double t : {0.1, 1.0, 3.0}) CHECK(angle_of_parallelism(t) == doctest::Approx(2 * std::atan(std::exp(-t))).epsilon(1e-13));
    CHECK(angle_of_parallelism(1.0) == doctest::Approx(0.705027).epsilon(1e-6));
}

TEST_CASE("polygon area: Gauss-Bonnet against the boundary integral") {
    for (int n : {3, 5, 7, 12}) {
        for (double r : {0.3, 1.0, 2.5}) {
            const GeodesicPolygon poly = regular_polygon(HPoint(0.5, 2.0), r, n, 0.3);
            CHECK(poly.is_simple());
            CHECK(poly.orientation() == 1);
            CHECK(polygon_area(poly) == doctest::Approx(poly.boundary_integral_area()).epsilon(1e-9));
            CHECK(polygon_area(poly) < ball_area(r));
        }
    }
}

TEST_CASE("regular triangle of the {3,7} tiling has area pi/7") {
    // Side a with cosh a = (cos A + cos^2 A) / sin^2 A, A = 2 pi / 7; circumradius from the right triangle.
    const double A = 2 * pi / 7;
    const double side = std::acosh((std::cos(A) + std::cos(A) * std::cos(A)) / (std::sin(A) * std::sin(A)));
    const double circ = std::asinh(std::sinh(side / 2) / std::sin(pi / 3));
    const GeodesicPolygon tri = regular_polygon(HPoint(0, 1), circ, 3);
    CHECK(polygon_area(tri) == doctest::Approx(pi / 7).epsilon(1e-9));
    for (double a : tri.interior_angles()) CHECK(a == doctest::Approx(A).epsilon(1e-9));
}

TEST_CASE("polygon containment") {
    const GeodesicPolygon poly = regular_polygon(HPoint(0, 1), 1.0, 6);
    CHECK(poly.contains(HPoint(0, 1)));
    CHECK_FALSE(poly.contains(point_at_polar(HPoint(0, 1), 1.01, 0.0)));
    CHECK(poly.contains(poly.vertices()[2], 1e-12));
}

TEST_CASE("isometry catalogue") {
    CHECK(apply(make_isometry({IsometryKind::translation, 2.0}), HPoint(1, 1)).x() == doctest::Approx(3.0));
    CHECK(apply(make_isometry({IsometryKind::dilation, 3.0}), HPoint(1, 1)).y() == doctest::Approx(3.0));
    const HPoint p = apply(Isometry::taking_origin_to(HPoint(2, 5)), HPoint(0, 1));
    CHECK(p.x() == doctest::Approx(2.0));
    CHECK(p.y() == doctest::Approx(5.0));
}

}
