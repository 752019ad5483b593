#pragma once

// Packing-space metric: Hausdorff distance between sampled truncations
// P n B_k(O) and d(P1, P2) = max_k h(B_k n P1, B_k n P2) / k for k <= k_max.
// Truncating at k_max approximates the supremum over all k from below.

#include <functional>
#include <span>
#include <vector>

#include "hypack/hgeom.hpp"
#include "hypack/packings.hpp"

namespace hypack {

struct TruncationOptions {
    int k_max = 8;
    /// Grid step, both radially and along each ring. 0.06 keeps every covered
    /// point within about 0.042 of a sample.
    double spacing = 0.06;
    /// Add points on the boundary circles of disk bodies.
    bool body_boundaries = true;
};

struct TruncatedPacking {
    int k_max = 0;
    /// truncations[k - 1] samples P n B_k(O).
    std::vector<std::vector<HPoint>> truncations;
};

/// Geodesic-polar grid about the origin out to `radius`.
std::vector<HPoint> polar_grid(double radius, double spacing);

TruncatedPacking truncate(const std::function<bool(const HPoint&)>& covers, const TruncationOptions& opts);
TruncatedPacking truncate(const Packing& p, const TruncationOptions& opts);

/// Symmetric Hausdorff distance between finite, nonempty point sets.
double hausdorff_distance(std::span<const HPoint> a, std::span<const HPoint> c);

struct PackingDistance {
    double value = 0.0;
    int argmax_k = 0;  // 0 when every term vanishes
};

/// max over k of h_k / k, where an empty truncation on one side counts as 2k
/// and on both sides as 0.
PackingDistance packing_distance(const TruncatedPacking& p1, const TruncatedPacking& p2);

}  // namespace hypack
