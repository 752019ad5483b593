#pragma once

// Covered-area fractions of packings and regions: curves over expanding balls,
// ball averages about the origin, fundamental-domain and tile densities,
// finite-window Euclidean densities and the Voronoi mass-transport average.

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hypack/hgeom.hpp"
#include "hypack/packings.hpp"
#include "hypack/regions.hpp"
#include "hypack/voronoi.hpp"

namespace hypack {

/// Distinguished origin of the half-plane.
inline const HPoint kOrigin{0.0, 1.0};

enum class CurveMethod { mc, quadrature, closed_form };
std::string to_string(CurveMethod m);

struct DensityPoint {
    double radius = 0.0;
    double fraction = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

struct DensityCurve {
    std::variant<HPoint, EPoint> center = kOrigin;
    std::vector<DensityPoint> points;
    CurveMethod method = CurveMethod::mc;
};

/// Covered fraction of B_R(center) for each radius. Uses the region's exact
/// area when it has one and `prefer_exact` is set, otherwise Monte Carlo with
/// the plan's seed mixed with the radius position.
DensityCurve density_curve(const Region& target, const HPoint& center, std::span<const double> radii,
                           const SamplePlan& plan, bool prefer_exact = true);
DensityCurve density_curve(const Packing& target, const HPoint& center, std::span<const double> radii,
                           const SamplePlan& plan, bool prefer_exact = true);

/// Ball average f_R about the origin: the covered fraction of B_R(O).
AreaEstimate f_R_estimate(const Packing& p, double radius, const SamplePlan& plan);
double f_R_average(const Packing& p, double radius, const SamplePlan& plan);

struct OscillationReport {
    double liminf_est = 0.0;
    double limsup_est = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    bool converged = false;
    double tolerance = 0.0;
};

/// Min and max over the trailing `window_fraction` of the curve (at least four points).
OscillationReport oscillation_report(const DensityCurve& curve, double window_fraction, double tolerance = 0.01);

enum class HalfspaceSide { near, far };
/// Limit of the half-space fraction of B_R(c) as R grows, c at distance t from
/// the bounding geodesic: 1 - Pi(t)/pi on the near side, Pi(t)/pi on the far side.
double halfspace_density_limit(double t, HalfspaceSide side);

/// Covered area of the fundamental domain over its area.
double fundamental_domain_density(const Packing& p);

/// A finite-area region with a ball that encloses it, used for rejection sampling.
struct Tile {
    std::function<bool(const HPoint&)> contains;
    double area = 0.0;
    BallSpec enclosing{HPoint(0.0, 1.0), 1.0};
    std::string label;
};

Tile polygon_tile(const GeodesicPolygon& polygon);
Tile brick_tile(const BrickTile& brick);

/// Covered fraction of the tile, from area-uniform samples inside it.
AreaEstimate tile_density(const Packing& p, const Tile& tile, const SamplePlan& plan);

/// Euclidean packing given by its coverage predicate.
struct EuclideanPacking {
    std::function<bool(const EPoint&)> covers;
    std::string label;
};

/// Disks of the given radius centred on spacing * Z^2.
EuclideanPacking lattice_disk_packing(double spacing, double radius);
EuclideanPacking empty_euclidean_packing();
EuclideanPacking annulus_packing();

/// Covered fraction of the square [-side/2, side/2]^2.
AreaEstimate euclid_window_density(const EuclideanPacking& p, double side, const SamplePlan& plan);

/// Closed-form curve of the even-annulus packing at radii 2^K.
DensityCurve annulus_curve(std::span<const int> exponents);

/// Site access for Voronoi-based averages over a periodic disk packing.
struct VoronoiSource {
    std::function<HPoint(const HPoint&)> nearest_site;
    std::function<std::vector<HPoint>(const BallSpec&)> sites_near;
    double body_radius = 0.0;
    double search_radius = 0.0;

    VoronoiSource transformed(const Isometry& g) const;
};

/// Sites and disks of a tight packing. Cells are closed off by the sites within
/// 2 (2 r_m), more than twice the covering radius of the vertex set.
VoronoiSource voronoi_source(const TightPacking& p);

/// Mean over area-uniform points q of the window of the relative density of
/// the body in the Voronoi cell containing q. Points within 1e-9 of a cell
/// boundary are redrawn.
AreaEstimate mass_transport_check(const VoronoiSource& source, const BallSpec& window, const SamplePlan& plan);

}  // namespace hypack
