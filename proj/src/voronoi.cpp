#include "hypack/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypack/errors.hpp"
#include "hypack/regions.hpp"

namespace hypack {

namespace {

constexpr int kBoundingSides = 64;
constexpr double kMergeDistance = 1e-10;
constexpr long kBoundary = -1;

// cosh d(z, p) - cosh d(z, q); negative on p's side of the bisector. Stays
// accurate where the bisector's Euclidean circle is nearly a vertical line.
double side(const HPoint& z, const HPoint& p, const HPoint& q) {
    const double dp = (z.x() - p.x()) * (z.x() - p.x()) + (z.y() - p.y()) * (z.y() - p.y());
    const double dq = (z.x() - q.x()) * (z.x() - q.x()) + (z.y() - q.y()) * (z.y() - q.y());
    return (dp / p.y() - dq / q.y()) / (2.0 * z.y());
}

// Point where the segment [a, b] crosses the bisector of p and q, by
// bisection on the arclength from a.
HPoint crossing(const HPoint& a, const HPoint& b, const HPoint& p, const HPoint& q) {
    const double ab = distance(a, b);
    const double theta = polar_angle(a, b);
    const bool a_inside = side(a, p, q) <= 0.0;
    double lo = 0.0, hi = ab;
    for (int it = 0; it < 80 && hi - lo > 1e-16 * ab; ++it) {
        const double mid = 0.5 * (lo + hi);
        const bool inside = side(point_at_polar(a, mid, theta), p, q) <= 0.0;
        (inside == a_inside ? lo : hi) = mid;
    }
    return point_at_polar(a, 0.5 * (lo + hi), theta);
}

void merge_close(std::vector<HPoint>& pts, std::vector<long>& owners) {
    bool changed = true;
    while (changed && pts.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::size_t j = (i + 1) % pts.size();
            if (distance(pts[i], pts[j]) < kMergeDistance) {
                pts.erase(pts.begin() + static_cast<long>(i));
                owners.erase(owners.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
}

// z -> (z - H) / K, taking the site (H, K) to (0, 1).
HPoint to_local(const HPoint& site, const HPoint& z) {
    return HPoint::from_log((z.x() - site.x()) / site.y(), z.log_y() - site.log_y());
}

HPoint from_local(const HPoint& site, const HPoint& z) {
    return HPoint::from_log(site.x() + site.y() * z.x(), z.log_y() + site.log_y());
}

// Clipping runs in the site's local frame, where bisectors of sites at nearly
// equal height stay well conditioned.
VoronoiCell build_cell(const HPoint& site, std::vector<std::pair<double, HPoint>> nearby, double search_radius) {
    std::sort(nearby.begin(), nearby.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const HPoint p(0.0, 1.0);

    const GeodesicPolygon bound = regular_polygon(p, search_radius, kBoundingSides);
    std::vector<HPoint> pts(bound.vertices().begin(), bound.vertices().end());
    std::vector<long> owners(pts.size(), kBoundary);  // site index owning edge i, or kBoundary

    for (std::size_t s = 0; s < nearby.size(); ++s) {
        const HPoint q = to_local(site, nearby[s].second);
        std::vector<HPoint> out_pts;
        std::vector<long> out_owners;
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const HPoint& a = pts[i];
            const HPoint& b = pts[(i + 1) % n];
            const bool ina = side(a, p, q) <= 0.0;
            const bool inb = side(b, p, q) <= 0.0;
            if (ina) {
                out_pts.push_back(a);
                out_owners.push_back(owners[i]);
            }
            if (ina != inb) {
                out_pts.push_back(crossing(a, b, p, q));
                out_owners.push_back(ina ? static_cast<long>(s) : owners[i]);
            }
        }
        pts = std::move(out_pts);
        owners = std::move(out_owners);
        merge_close(pts, owners);
        if (pts.size() < 3) throw DomainError("Voronoi cell degenerated; are the sites distinct?");
    }

    std::vector<HPoint> neighbours;
    for (long owner : owners) {
        if (owner == kBoundary)
            throw UnboundedCellError("Voronoi cell is not closed by the sites within search radius " +
                                     std::to_string(search_radius));
        neighbours.push_back(nearby[static_cast<std::size_t>(owner)].second);
    }
    for (auto& v : pts) v = from_local(site, v);
    return {site, GeodesicPolygon(std::move(pts)), std::move(neighbours)};
}

}  // namespace

VoronoiCell dirichlet_cell(std::span<const HPoint> sites, std::size_t i, double search_radius) {
    if (i >= sites.size()) throw DomainError("dirichlet_cell: site index out of range");
    if (!(search_radius > 0.0)) throw DomainError("dirichlet_cell: search radius must be positive");
    std::vector<std::pair<double, HPoint>> nearby;
    for (std::size_t j = 0; j < sites.size(); ++j) {
        if (j == i) continue;
        const double d = distance(sites[i], sites[j]);
        if (d == 0.0) throw DomainError("dirichlet_cell: sites must be pairwise distinct");
        if (d <= search_radius) nearby.emplace_back(d, sites[j]);
    }
    return build_cell(sites[i], std::move(nearby), search_radius);
}

VoronoiCell dirichlet_cell(const PointIndex& sites, std::size_t i, double search_radius) {
    if (i >= sites.size()) throw DomainError("dirichlet_cell: site index out of range");
    if (!(search_radius > 0.0)) throw DomainError("dirichlet_cell: search radius must be positive");
    std::vector<std::pair<double, HPoint>> nearby;
    for (auto j : sites.within(sites[i], search_radius)) {
        if (j == i) continue;
        const double d = distance(sites[i], sites[j]);
        if (d == 0.0) throw DomainError("dirichlet_cell: sites must be pairwise distinct");
        nearby.emplace_back(d, sites[j]);
    }
    return build_cell(sites[i], std::move(nearby), search_radius);
}

double cell_relative_density(const VoronoiCell& cell, double rho) {
    if (!(rho >= 0.0)) throw DomainError("cell_relative_density: radius must be non-negative");
    const auto verts = cell.polygon.vertices();
    const HPoint o(0.0, 1.0);
    for (std::size_t e = 0; e < verts.size(); ++e) {
        const Geodesic g = geodesic_through(to_local(cell.site, verts[e]), to_local(cell.site, verts[(e + 1) % verts.size()]));
        if (std::fabs(signed_distance(g, o)) < rho - 1e-9)
            throw DomainError("cell_relative_density: disk is not contained in the cell");
    }
    return ball_area(rho) / polygon_area(cell.polygon);
}

double partition_audit(std::span<const VoronoiCell> cells, const BallSpec& window, const SamplePlan& plan) {
    if (plan.samples == 0) throw DomainError("partition_audit: plan needs at least one sample");
    std::vector<double> reach;
    reach.reserve(cells.size());
    for (const auto& c : cells) {
        double r = 0.0;
        for (const auto& v : c.polygon.vertices()) r = std::max(r, distance(c.site, v));
        reach.push_back(r);
    }
    const auto counts = count_by_stratum(plan.samples, 1, plan.workers, [&](std::size_t idx) {
        const HPoint z = sample_ball_point(window, plan, idx);
        int hits = 0;
        for (std::size_t c = 0; c < cells.size() && hits < 2; ++c) {
            if (distance(cells[c].site, z) > reach[c] + 1e-12) continue;
            if (cells[c].polygon.contains(z)) ++hits;
        }
        return hits == 1;
    });
    return static_cast<double>(counts[0]) / static_cast<double>(plan.samples);
}

}  // namespace hypack
