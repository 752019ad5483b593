#include "hypack/point_index.hpp"

#include <cmath>
#include <limits>

namespace hypack {

long PointIndex::band_of(double log_y) const { return static_cast<long>(std::floor(log_y / band_width_)); }

std::size_t PointIndex::insert(const HPoint& p) {
    const std::size_t id = points_.size();
    points_.push_back(p);
    bands_[band_of(p.log_y())].emplace(p.x(), id);
    return id;
}

std::vector<std::size_t> PointIndex::within(const HPoint& z, double radius) const {
    std::vector<std::size_t> out;
    if (points_.empty()) return out;
    // The ball is the Euclidean disk with y in [y e^{-r}, y e^{r}] and
    // half-width y sinh r.
    const double half_width = z.y() * std::sinh(radius);
    const double x_lo = z.x() - half_width;
    const double x_hi = z.x() + half_width;
    auto it = bands_.lower_bound(band_of(z.log_y() - radius));
    const auto end = bands_.upper_bound(band_of(z.log_y() + radius));
    for (; it != end; ++it) {
        const auto& row = it->second;
        for (auto p = row.lower_bound(x_lo); p != row.end() && p->first <= x_hi; ++p)
            if (distance(z, points_[p->second]) <= radius) out.push_back(p->second);
    }
    return out;
}

std::optional<std::pair<std::size_t, double>> PointIndex::nearest(const HPoint& z, double initial_radius) const {
    if (points_.empty()) return std::nullopt;
    for (double r = initial_radius; r < 64.0; r *= 2.0) {
        const auto hits = within(z, r);
        if (hits.empty()) continue;
        std::pair<std::size_t, double> best{hits.front(), std::numeric_limits<double>::infinity()};
        for (auto id : hits) {
            const double d = distance(z, points_[id]);
            if (d < best.second) best = {id, d};
        }
        return best;
    }
    std::pair<std::size_t, double> best{0, std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const double d = distance(z, points_[i]);
        if (d < best.second) best = {i, d};
    }
    return best;
}

}  // namespace hypack
