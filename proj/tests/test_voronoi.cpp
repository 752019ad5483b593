#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "hypack/errors.hpp"
#include "hypack/packings.hpp"
#include "hypack/point_index.hpp"
#include "hypack/voronoi.hpp"

using namespace hypack;
using std::numbers::pi;

namespace {

PointIndex tight_sites(int m, const BallSpec& ball) {
    PointIndex index(0.5);
    for (const auto& c : TightPacking(m).centers_in_ball(ball)) index.insert(c);
    return index;
}

std::size_t index_of(const PointIndex& idx, const HPoint& p) {
    return idx.nearest(p)->first;
}

}  // namespace

TEST_SUITE("voronoi") {

TEST_CASE("point index queries match brute force") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ux(-2, 2), uly(-2, 2);
    PointIndex idx(0.3);
    std::vector<HPoint> pts;
    for (int i = 0; i < 400; ++i) pts.push_back(HPoint(ux(rng), std::exp(uly(rng)))), idx.insert(pts.back());
    for (int i = 0; i < 50; ++i) {
        const HPoint z(ux(rng), std::exp(uly(rng)));
        std::size_t best = 0, count = 0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (distance(z, pts[j]) < distance(z, pts[best])) best = j;
            if (distance(z, pts[j]) <= 0.8) ++count;
        }
        CHECK(idx.nearest(z)->first == best);
        CHECK(idx.within(z, 0.8).size() == count);
    }
    CHECK_FALSE(PointIndex().nearest(HPoint(0, 1)).has_value());
}

TEST_CASE("{3,7} cell is a regular heptagon of area pi/3") {
    const PointIndex idx = tight_sites(7, BallSpec(HPoint(0, 1), 4.0));
    const auto cell = dirichlet_cell(idx, index_of(idx, HPoint(0, 1)), 6 * tight_radius(7));
    CHECK(cell.polygon.size() == 7);
    CHECK(cell.neighbor_sites.size() == 7);
    CHECK(polygon_area(cell.polygon) == doctest::Approx(pi / 3).epsilon(1e-9));
    CHECK(cell.polygon.boundary_integral_area() == doctest::Approx(pi / 3).epsilon(1e-9));
    for (double a : cell.polygon.interior_angles()) CHECK(a == doctest::Approx(2 * pi / 3).epsilon(1e-9));
    CHECK(cell_relative_density(cell, tight_radius(7)) == doctest::Approx(tight_density_formula(7)).epsilon(1e-9));
}

TEST_CASE("cell closure: relative density of every cell is the packing density") {
    for (int m : {7, 8, 9}) {
        const double r = tight_radius(m);
        const BallSpec inner(HPoint(0, 1), 2.5);
        const PointIndex idx = tight_sites(m, BallSpec(HPoint(0, 1), 2.5 + 6 * r));
        int checked = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (!inner.contains(idx[i])) continue;
            const auto cell = dirichlet_cell(idx, i, 6 * r);
            CHECK(polygon_area(cell.polygon) == doctest::Approx(ball_area(r) / tight_density_formula(m)).epsilon(1e-9));
            ++checked;
        }
        CHECK(checked > 5);
    }
}

TEST_CASE("property: cell vertices are equidistant from their defining sites") {
    const PointIndex idx = tight_sites(8, BallSpec(HPoint(0, 1), 5.0));
    const HPoint site = idx[index_of(idx, point_at_polar(HPoint(0, 1), 1.0, 0.4))];
    const auto cell = dirichlet_cell(idx, index_of(idx, site), 6 * tight_radius(8));
    for (const auto& v : cell.polygon.vertices()) {
        const double d0 = distance(v, site);
        int ties = 0;
        for (const auto& n : cell.neighbor_sites) ties += std::abs(distance(v, n) - d0) < 1e-8;
        CHECK(ties >= 2);
        for (std::size_t j = 0; j < idx.size(); ++j) CHECK(distance(v, idx[j]) >= d0 - 1e-8);
    }
}

TEST_CASE("property: cells rotate with their sites") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::vector<HPoint> sites;
    for (int i = 0; i < 40; ++i) sites.push_back(point_at_polar(HPoint(0, 1), std::abs(u(rng)) * 2, u(rng) * pi));
    sites.push_back(HPoint(0, 1));
    const Isometry g = Isometry::rotation(HPoint(0.1, 0.9), 1.1);
    std::vector<HPoint> moved;
    for (const auto& s : sites) moved.push_back(apply(g, s));
    const auto a = dirichlet_cell(std::span<const HPoint>(sites), sites.size() - 1, 10.0);
    const auto b = dirichlet_cell(std::span<const HPoint>(moved), moved.size() - 1, 10.0);
    REQUIRE(a.polygon.size() == b.polygon.size());
    CHECK(polygon_area(a.polygon) == doctest::Approx(polygon_area(b.polygon)).epsilon(1e-9));
    for (const auto& v : a.polygon.vertices()) {
        double best = INFINITY;
        for (const auto& w : b.polygon.vertices()) best = std::min(best, distance(apply(g, v), w));
        CHECK(best < 1e-8);
    }
}

TEST_CASE("open cells and bad input are reported") {
    const std::vector<HPoint> two{HPoint(0, 1), HPoint(0, 3)};
    CHECK_THROWS_AS(dirichlet_cell(std::span<const HPoint>(two), 0, 5.0), UnboundedCellError);
    CHECK_THROWS_AS(dirichlet_cell(std::span<const HPoint>(two), 2, 5.0), DomainError);
    CHECK_THROWS_AS(dirichlet_cell(std::span<const HPoint>(two), 0, 0.0), DomainError);
    const std::vector<HPoint> dup{HPoint(0, 1), HPoint(0, 1)};
    CHECK_THROWS_AS(dirichlet_cell(std::span<const HPoint>(dup), 0, 5.0), DomainError);
}

TEST_CASE("disk must fit in its cell") {
    const PointIndex idx = tight_sites(7, BallSpec(HPoint(0, 1), 4.0));
    const auto cell = dirichlet_cell(idx, index_of(idx, HPoint(0, 1)), 6 * tight_radius(7));
    CHECK_THROWS_AS(cell_relative_density(cell, 1.1 * tight_radius(7)), DomainError);
}

TEST_CASE("cells tile the window") {
    const double r = tight_radius(7);
    const BallSpec window(HPoint(0, 1), 2.0);
    const PointIndex idx = tight_sites(7, BallSpec(HPoint(0, 1), 2.0 + 8 * r));
    std::vector<VoronoiCell> cells;
    std::size_t central = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (distance(idx[i], window.center) > 2.0 + 2 * r) continue;
        if (distance(idx[i], window.center) < 1e-9) central = cells.size();
        cells.push_back(dirichlet_cell(idx, i, 6 * r));
    }
    SamplePlan plan;
    plan.samples = 20000;
    CHECK(partition_audit(cells, window, plan) >= 0.999);
    cells.erase(cells.begin() + static_cast<long>(central));
    CHECK(partition_audit(cells, window, plan) < 0.99);
}

}
