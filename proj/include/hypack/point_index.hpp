#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hypack/hgeom.hpp"

namespace hypack {

/// Spatial index for half-plane points under the hyperbolic metric. Points are
/// bucketed into horizontal bands of fixed width in log y and kept sorted by x
/// within a band, so a hyperbolic ball query touches only a few bands.
class PointIndex {
public:
    explicit PointIndex(double band_width = 0.5) : band_width_(band_width) {}

    std::size_t insert(const HPoint& p);
    std::size_t size() const { return points_.size(); }
    const HPoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<HPoint>& points() const { return points_; }

    /// Indices of points within hyperbolic distance `radius` of z.
    std::vector<std::size_t> within(const HPoint& z, double radius) const;
    /// Nearest stored point and its distance; nullopt when empty. The search
    /// starts at `initial_radius` and doubles until something is found.
    std::optional<std::pair<std::size_t, double>> nearest(const HPoint& z, double initial_radius = 0.25) const;

private:
    long band_of(double log_y) const;

    double band_width_;
    std::vector<HPoint> points_;
    std::map<long, std::multimap<double, std::size_t>> bands_;
};

}  // namespace hypack
