#include "hypack/pspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypack/errors.hpp"
#include "hypack/point_index.hpp"

namespace hypack {

namespace {

constexpr double kPi = std::numbers::pi;
const HPoint kCenter(0.0, 1.0);

void check_options(const TruncationOptions& opts) {
    if (opts.k_max < 1) throw DomainError("truncation needs k_max >= 1");
    if (!(opts.spacing > 0.0)) throw DomainError("truncation grid spacing must be positive");
    if (opts.k_max > 12) throw DomainError("truncation radius k_max > 12 is too large to sample");
}

struct GridPoint {
    HPoint p;
    double rho;
};

std::vector<GridPoint> polar_grid_with_radii(double radius, double spacing) {
    std::vector<GridPoint> out{{kCenter, 0.0}};
    const auto rings = static_cast<long>(std::ceil(radius / spacing));
    for (long i = 1; i <= rings; ++i) {
        const double rho = std::min(radius, static_cast<double>(i) * spacing);
        const auto count = static_cast<long>(std::ceil(2.0 * kPi * std::sinh(rho) / spacing));
        // Stagger alternate rings by half a step.
        const double phase = (i % 2 == 0) ? 0.0 : kPi / static_cast<double>(count);
        for (long j = 0; j < count; ++j)
            out.push_back({point_at_polar(kCenter, rho, phase + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(count)), rho});
    }
    return out;
}

TruncatedPacking bucket(std::vector<GridPoint> pts, int k_max) {
    TruncatedPacking t;
    t.k_max = k_max;
    t.truncations.resize(static_cast<std::size_t>(k_max));
    for (const auto& g : pts)
        for (int k = std::max(1, static_cast<int>(std::ceil(g.rho))); k <= k_max; ++k)
            t.truncations[static_cast<std::size_t>(k - 1)].push_back(g.p);
    return t;
}

constexpr double kIndexBand = 0.05;
constexpr double kFirstProbe = 0.03;

double directed(const std::vector<HPoint>& from, const PointIndex& to) {
    double worst = 0.0;
    for (const auto& p : from) worst = std::max(worst, to.nearest(p, kFirstProbe)->second);
    return worst;
}

}  // namespace

std::vector<HPoint> polar_grid(double radius, double spacing) {
    std::vector<HPoint> out;
    for (const auto& g : polar_grid_with_radii(radius, spacing)) out.push_back(g.p);
    return out;
}

TruncatedPacking truncate(const std::function<bool(const HPoint&)>& covers, const TruncationOptions& opts) {
    check_options(opts);
    auto grid = polar_grid_with_radii(opts.k_max, opts.spacing);
    std::erase_if(grid, [&](const GridPoint& g) { return !covers(g.p); });
    return bucket(std::move(grid), opts.k_max);
}

TruncatedPacking truncate(const Packing& p, const TruncationOptions& opts) {
    check_options(opts);
    auto grid = polar_grid_with_radii(opts.k_max, opts.spacing);
    std::erase_if(grid, [&](const GridPoint& g) { return !p.covers(g.p); });
    if (opts.body_boundaries && p.has_bodies()) {
        for (const auto& disk : p.disks_in_ball(BallSpec(kCenter, opts.k_max))) {
            const auto count = std::max(8L, static_cast<long>(std::ceil(2.0 * kPi * std::sinh(disk.radius) / opts.spacing)));
            for (long j = 0; j < count; ++j) {
                const HPoint b = point_at_polar(disk.center, disk.radius, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(count));
                const double rho = distance(kCenter, b);
                if (rho <= opts.k_max) grid.push_back({b, rho});
            }
        }
    }
    return bucket(std::move(grid), opts.k_max);
}

double hausdorff_distance(std::span<const HPoint> a, std::span<const HPoint> c) {
    if (a.empty() || c.empty()) throw DomainError("hausdorff_distance: point sets must be nonempty");
    PointIndex ia(kIndexBand), ic(kIndexBand);
    std::vector<HPoint> va(a.begin(), a.end()), vc(c.begin(), c.end());
    for (const auto& p : va) ia.insert(p);
    for (const auto& p : vc) ic.insert(p);
    return std::max(directed(va, ic), directed(vc, ia));
}

PackingDistance packing_distance(const TruncatedPacking& p1, const TruncatedPacking& p2) {
    if (p1.k_max != p2.k_max) throw DomainError("packing_distance: truncations have different k_max");
    PackingDistance out;
    for (int k = 1; k <= p1.k_max; ++k) {
        const auto& a = p1.truncations[static_cast<std::size_t>(k - 1)];
        const auto& c = p2.truncations[static_cast<std::size_t>(k - 1)];
        double h = 0.0;
        if (a.empty() != c.empty())
            h = 2.0 * k;
        else if (!a.empty())
            h = hausdorff_distance(a, c);
        const double term = h / k;
        if (term > out.value) {
            out.value = term;
            out.argmax_k = k;
        }
    }
    return out;
}

}  // namespace hypack
