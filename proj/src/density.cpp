#include "hypack/density.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "hypack/errors.hpp"

namespace hypack {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint32_t kMaxAttempts = 100000;
constexpr double kBoundarySlack = 1e-9;

}  // namespace

std::string to_string(CurveMethod m) {
    switch (m) {
        case CurveMethod::mc: return "mc";
        case CurveMethod::quadrature: return "quadrature";
        case CurveMethod::closed_form: return "closed-form";
    }
    return "mc";
}

DensityCurve density_curve(const Region& target, const HPoint& center, std::span<const double> radii,
                           const SamplePlan& plan, bool prefer_exact) {
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1])) throw DomainError("density_curve: radii must be strictly increasing");
    DensityCurve curve;
    curve.center = center;
    const bool exact = prefer_exact && static_cast<bool>(target.exact_area_in_ball);
    curve.method = exact ? CurveMethod::quadrature : CurveMethod::mc;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const BallSpec ball(center, radii[i]);
        if (exact) {
            const double frac = std::clamp(target.exact_area_in_ball(ball) / ball_area(radii[i]), 0.0, 1.0);
            curve.points.push_back({radii[i], frac, 0.0, 0});
            continue;
        }
        SamplePlan p = plan;
        p.seed = mix64(plan.seed + i);
        const AreaEstimate est = mc_area_fraction(target, ball, p);
        curve.points.push_back({radii[i], est.fraction, est.std_error, est.samples_used});
    }
    return curve;
}

DensityCurve density_curve(const Packing& target, const HPoint& center, std::span<const double> radii,
                           const SamplePlan& plan, bool prefer_exact) {
    return density_curve(target.as_region(), center, radii, plan, prefer_exact);
}

AreaEstimate f_R_estimate(const Packing& p, double radius, const SamplePlan& plan) {
    if (!(radius > 0.0)) throw DomainError("f_R: radius must be positive");
    const double radii[] = {radius};
    const auto curve = density_curve(p, kOrigin, radii, plan, false);
    const auto& pt = curve.points.front();
    return {pt.fraction, pt.std_error, pt.samples};
}

double f_R_average(const Packing& p, double radius, const SamplePlan& plan) {
    return f_R_estimate(p, radius, plan).fraction;
}

OscillationReport oscillation_report(const DensityCurve& curve, double window_fraction, double tolerance) {
    if (!(window_fraction > 0.0 && window_fraction <= 1.0))
        throw DomainError("oscillation_report: window fraction must lie in (0, 1]");
    const std::size_t n = curve.points.size();
    const auto take = static_cast<std::size_t>(std::ceil(window_fraction * static_cast<double>(n)));
    if (take < 4) throw DomainError("oscillation_report: need at least four points in the trailing window");
    OscillationReport r;
    r.tolerance = tolerance;
    r.liminf_est = 1.0;
    r.limsup_est = 0.0;
    for (std::size_t i = n - take; i < n; ++i) {
        r.liminf_est = std::min(r.liminf_est, curve.points[i].fraction);
        r.limsup_est = std::max(r.limsup_est, curve.points[i].fraction);
    }
    r.window_lo = curve.points[n - take].radius;
    r.window_hi = curve.points.back().radius;
    r.converged = r.limsup_est - r.liminf_est <= tolerance;
    return r;
}

double halfspace_density_limit(double t, HalfspaceSide side) {
    if (!(t >= 0.0)) throw DomainError("halfspace_density_limit: t must be non-negative");
    const double far = angle_of_parallelism(t) / kPi;
    return side == HalfspaceSide::far ? far : 1.0 - far;
}

double fundamental_domain_density(const Packing& p) {
    if (!p.fundamental_domain) throw UnsupportedError("packing '" + p.label + "' has no fundamental domain");
    const auto& fd = *p.fundamental_domain;
    double covered = 0.0;
    for (const auto& s : fd.sectors) covered += s.angle / (2.0 * kPi) * ball_area(s.disk.radius);
    return covered / polygon_area(fd.polygon);
}

Tile polygon_tile(const GeodesicPolygon& polygon) {
    const HPoint c = polygon.vertices().front();
    double reach = 0.0;
    for (const auto& v : polygon.vertices()) reach = std::max(reach, distance(c, v));
    Tile t;
    t.contains = [polygon](const HPoint& z) { return polygon.contains(z); };
    t.area = polygon_area(polygon);
    t.enclosing = BallSpec(c, std::max(reach, 1e-12) * (1.0 + 1e-12));
    t.label = "polygon";
    return t;
}

Tile brick_tile(const BrickTile& brick) {
    const HPoint c(0.5 * (brick.x_lo() + brick.x_hi()), std::sqrt(brick.y_lo() * brick.y_hi()));
    double reach = 0.0;
    for (double x : {brick.x_lo(), brick.x_hi()})
        for (double y : {brick.y_lo(), brick.y_hi()}) reach = std::max(reach, distance(c, HPoint(x, y)));
    Tile t;
    t.contains = [brick](const HPoint& z) { return brick.contains(z); };
    t.area = brick.area();
    t.enclosing = BallSpec(c, reach * (1.0 + 1e-12));
    t.label = "brick";
    return t;
}

AreaEstimate tile_density(const Packing& p, const Tile& tile, const SamplePlan& plan) {
    if (!(tile.area > 0.0)) throw DomainError("tile_density: tile has zero area");
    if (plan.samples == 0) throw DomainError("tile_density: plan needs at least one sample");
    const auto hits = count_by_stratum(plan.samples, 1, plan.workers, [&](std::size_t i) {
        for (std::uint32_t a = 0; a < kMaxAttempts; ++a) {
            const HPoint z = sample_ball_point(tile.enclosing, plan, i, a);
            if (tile.contains(z)) return p.covers(z);
        }
        throw DomainError("tile_density: tile is too small inside its enclosing ball");
    });
    AreaEstimate est;
    est.samples_used = plan.samples;
    est.fraction = static_cast<double>(hits[0]) / static_cast<double>(plan.samples);
    est.std_error = std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(plan.samples));
    return est;
}

EuclideanPacking lattice_disk_packing(double spacing, double radius) {
    if (!(spacing > 0.0) || !(radius >= 0.0) || 2.0 * radius > spacing)
        throw DomainError("lattice_disk_packing: need spacing > 0 and 0 <= 2 radius <= spacing");
    return {[spacing, radius](const EPoint& p) {
                const double dx = p.x - spacing * std::round(p.x / spacing);
                const double dy = p.y - spacing * std::round(p.y / spacing);
                return dx * dx + dy * dy <= radius * radius;
            },
            "lattice disks"};
}

EuclideanPacking empty_euclidean_packing() {
    return {[](const EPoint&) { return false; }, "empty"};
}

EuclideanPacking annulus_packing() {
    return {[](const EPoint& p) { return annulus_contains(p); }, "even annuli"};
}

AreaEstimate euclid_window_density(const EuclideanPacking& p, double side, const SamplePlan& plan) {
    if (!(side > 0.0)) throw DomainError("euclid_window_density: window side must be positive");
    if (plan.samples == 0) throw DomainError("euclid_window_density: plan needs at least one sample");
    const auto hits = count_by_stratum(plan.samples, 1, plan.workers, [&](std::size_t i) {
        const EPoint z{side * (counter_uniform(plan.seed, i, 0) - 0.5), side * (counter_uniform(plan.seed, i, 1) - 0.5)};
        return p.covers(z);
    });
    AreaEstimate est;
    est.samples_used = plan.samples;
    est.fraction = static_cast<double>(hits[0]) / static_cast<double>(plan.samples);
    est.std_error = std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(plan.samples));
    return est;
}

DensityCurve annulus_curve(std::span<const int> exponents) {
    DensityCurve curve;
    curve.center = EPoint{0.0, 0.0};
    curve.method = CurveMethod::closed_form;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i > 0 && exponents[i] <= exponents[i - 1])
            throw DomainError("annulus_curve: exponents must be strictly increasing");
        curve.points.push_back({std::ldexp(1.0, exponents[i]), annulus_fraction_euclid(exponents[i]), 0.0, 0});
    }
    return curve;
}

VoronoiSource VoronoiSource::transformed(const Isometry& g) const {
    const Isometry g_inv = inverse(g);
    VoronoiSource out = *this;
    out.nearest_site = [inner = nearest_site, g, g_inv](const HPoint& q) { return apply(g, inner(apply(g_inv, q))); };
    out.sites_near = [inner = sites_near, g, g_inv](const BallSpec& b) {
        auto sites = inner(BallSpec(apply(g_inv, b.center), b.radius));
        for (auto& s : sites) s = apply(g, s);
        return sites;
    };
    return out;
}

VoronoiSource voronoi_source(const TightPacking& p) {
    auto shared = std::make_shared<const TightPacking>(p);
    VoronoiSource src;
    src.nearest_site = [shared](const HPoint& q) { return shared->nearest_center(q); };
    src.sites_near = [shared](const BallSpec& b) { return shared->centers_in_ball(b); };
    src.body_radius = p.radius();
    src.search_radius = 4.0 * p.radius();
    return src;
}

AreaEstimate mass_transport_check(const VoronoiSource& source, const BallSpec& window, const SamplePlan& plan) {
    if (plan.samples == 0) throw DomainError("mass_transport_check: plan needs at least one sample");
    PointIndex seen;
    std::vector<double> cell_density;
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < plan.samples; ++i) {
        std::uint32_t attempt = 0;
        HPoint site(0.0, 1.0);
        for (;; ++attempt) {
            if (attempt == kMaxAttempts) throw DomainError("mass_transport_check: could not draw an interior point");
            const HPoint q = sample_ball_point(window, plan, i, attempt);
            site = source.nearest_site(q);
            const double d1 = distance(q, site);
            int ties = 0;
            for (const auto& s : source.sites_near(BallSpec(q, d1 + kBoundarySlack)))
                if (distance(q, s) <= d1 + kBoundarySlack) ++ties;
            if (ties <= 1) break;
        }
        std::size_t id = 0;
        const auto hit = seen.within(site, 1e-6);
        if (!hit.empty()) {
            id = hit.front();
        } else {
            std::vector<HPoint> sites{site};
            for (const auto& s : source.sites_near(BallSpec(site, source.search_radius))) {
                const double d = distance(site, s);
                if (d > 1e-6 && d <= source.search_radius) sites.push_back(s);
            }
            const VoronoiCell cell = dirichlet_cell(sites, 0, source.search_radius);
            id = seen.insert(site);
            cell_density.push_back(cell_relative_density(cell, source.body_radius));
        }
        sum += cell_density[id];
        sum_sq += cell_density[id] * cell_density[id];
    }
    const double n = static_cast<double>(plan.samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    return {mean, std::sqrt(var / n), plan.samples};
}

}  // namespace hypack
