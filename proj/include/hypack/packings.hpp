#pragma once

// Constructors for the packings and regions under study: the horocyclic
// stripe model, a half-space, Boroczky's disk packing, the tight-radius {3,m}
// disk packings and the horoball "brick" tiles.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypack/hgeom.hpp"
#include "hypack/point_index.hpp"
#include "hypack/regions.hpp"

namespace hypack {

/// Disk sector of a fundamental domain: the part of `disk` inside the domain,
/// subtending `angle` at the disk centre.
struct DiskSector {
    HDisk disk;
    double angle = 0.0;
};

struct FundamentalDomain {
    GeodesicPolygon polygon;
    std::vector<DiskSector> sectors;
};

/// A packing (or plain region) as seen through window queries.
struct Packing {
    std::string kind;
    std::string label;
    std::map<std::string, double> params;
    /// Disks meeting the ball. Empty function for region-type kinds.
    std::function<std::vector<HDisk>(const BallSpec&)> disks_in_ball;
    std::function<bool(const HPoint&)> covers;
    std::function<double(const BallSpec&)> exact_area_in_ball;
    std::optional<FundamentalDomain> fundamental_domain;

    bool has_bodies() const { return static_cast<bool>(disks_in_ball); }
    Region as_region() const { return {covers, exact_area_in_ball, label}; }
    Packing transformed(const Isometry& g) const;
};

/// Smallest (center distance - radius sum) over all pairs; +inf for < 2 disks.
double min_pairwise_gap(const std::vector<HDisk>& disks);

// --- Stripe model ----------------------------------------------------------

struct StripeModel {
    double width;

    /// y_j = e^{(j + 1/2) W}
    double horocycle(long j) const;
    /// Index j of the stripe [y_j, y_{j+1}) containing p.
    long stripe_index(const HPoint& p) const;
};

/// True on black stripes (between h_{2j} and h_{2j+1}); intervals are half-open.
bool stripe_contains(const HPoint& p, double width);
Packing stripe_packing(double width);

// --- Half-space ------------------------------------------------------------

bool halfspace_contains(const HPoint& p);
Packing halfspace_packing();

// --- Euclidean annuli (region only; Euclidean plane) ------------------------

// See annulus_contains / annulus_fraction_euclid in regions.hpp.

// --- Boroczky packing ------------------------------------------------------

/// arccosh(3/2) / 2: half the centre spacing along a row.
double boroczky_max_radius();
/// Centre of disk (j, k): (e^{2j+1/2} (k + 1/2), e^{2j+1/2}).
HPoint boroczky_center(long j, long k);
std::vector<HDisk> boroczky_disks_in_ball(const BallSpec& ball, double rho);
Packing boroczky_packing(double rho);

// --- Tight-radius {3,m} packing ---------------------------------------------

/// r_m = arccosh(cot(pi/m) cot(2 pi/m)) / 2
double tight_radius(int m);
/// (3 csc(pi/m) - 6) / (m - 6)
double tight_density_formula(int m);

/// Disks of radius r_m centred on the vertices of the regular {3,m}
/// triangulation that has (0, 1) as a vertex.
class TightPacking {
public:
    explicit TightPacking(int m);

    int m() const { return m_; }
    double radius() const { return radius_; }
    /// Circumradius of a face triangle.
    double face_circumradius() const { return face_circumradius_; }
    const GeodesicPolygon& face() const { return face_; }

    /// Nearest triangulation vertex to p, found by reflecting p into the base
    /// face through its edges (each edge lies on a mirror of the tiling).
    HPoint nearest_center(const HPoint& p) const;
    bool covers(const HPoint& p) const;

    /// Centres whose disk meets the ball, from a breadth-first walk over the
    /// vertex graph. Requires ball radius <= 20.
    std::vector<HPoint> centers_in_ball(const BallSpec& ball) const;

    FundamentalDomain fundamental_domain() const;
    Packing packing() const;

private:
    int m_;
    double radius_;
    double face_circumradius_;
    GeodesicPolygon face_;
    std::vector<Geodesic> edges_;
    std::vector<double> inward_;
};

std::vector<HPoint> tight_centers_in_ball(int m, const BallSpec& ball);

// --- Brick tiles -------------------------------------------------------------

/// Horoball brick {s <= y <= e^2 s, w s k <= x <= w s (k+1)}, s = e^{2j + offset}.
struct BrickTile {
    long j = 0;
    long k = 0;
    double offset = 0.0;
    double width = 1.0;

    double scale() const;
    double x_lo() const;
    double x_hi() const;
    double y_lo() const;
    double y_hi() const;
    bool contains(const HPoint& p) const;
    /// w (1 - e^{-2})
    double area() const;
};

/// Brick of the (offset, width) family containing p (half-open bounds).
BrickTile brick_at(const HPoint& p, double offset, double width);
/// Area of brick n ball by one-dimensional adaptive quadrature over y.
double brick_area_in_ball(const BrickTile& tile, const BallSpec& ball);
Region brick_region(const BrickTile& tile);

}  // namespace hypack
