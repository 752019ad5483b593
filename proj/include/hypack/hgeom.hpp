#pragma once

// Hyperbolic plane primitives in the upper half-plane model {(x, y) : y > 0}
// with metric ds^2 = (dx^2 + dy^2) / y^2.

#include <optional>
#include <span>
#include <vector>

namespace hypack {

/// Numerical tolerances shared by the geometry layer. All defaults can be
/// overridden by passing a modified copy where an operation accepts one.
struct Tolerances {
    double determinant = 1e-12;        // |ad - bc - 1| after renormalisation
    double vertical_geodesic = 1e-12;  // relative |dx| below which a geodesic is a vertical line
    double min_image_y = 1e-300;       // smaller image ordinates are a range error
    double angle = 1e-12;              // slack on polygon interior angles
};

inline constexpr Tolerances kDefaultTolerances{};

/// Point of the upper half-plane. Carries log(y) alongside y so that points
/// far out towards the ideal boundary keep a usable ordinate.
class HPoint {
public:
    HPoint(double x, double y);
    static HPoint from_log(double x, double log_y);

    double x() const { return x_; }
    double y() const { return y_; }
    double log_y() const { return log_y_; }

    /// True when y itself is a normal double in [1e-300, 1e300].
    bool y_in_range() const;

private:
    HPoint(double x, double y, double log_y) : x_(x), y_(y), log_y_(log_y) {}

    double x_;
    double y_;
    double log_y_;
};

struct EPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Hyperbolic distance. Stable for nearby points and falls back to a
/// log-domain evaluation when cosh d would overflow.
double distance(const HPoint& p, const HPoint& q);

/// Orientation-preserving isometry z -> (az + b) / (cz + d), ad - bc = 1.
class Isometry {
public:
    Isometry() = default;
    /// Normalises the matrix to unit determinant; rejects det <= 0.
    Isometry(double a, double b, double c, double d);

    static Isometry identity() { return {}; }
    /// (x, y) -> (x + t, y)
    static Isometry translation(double t);
    /// (x, y) -> (lambda x, lambda y), lambda > 0
    static Isometry dilation(double lambda);
    /// Counter-clockwise rotation by theta about p.
    static Isometry rotation(const HPoint& p, double theta);
    /// z -> K z + H, the affine map taking (0, 1) to p = (H, K).
    static Isometry taking_origin_to(const HPoint& p);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    double determinant() const { return a_ * d_ - b_ * c_; }

private:
    double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
};

HPoint apply(const Isometry& g, const HPoint& p);
/// g o h
Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);

/// Constructor catalogue used by the CLI and tests.
enum class IsometryKind { translation, dilation, rotation };
struct IsometrySpec {
    IsometryKind kind = IsometryKind::translation;
    double amount = 0.0;          // t, lambda or theta
    HPoint about = HPoint(0, 1);  // rotation centre
};
Isometry make_isometry(const IsometrySpec& spec);

/// Point at distance rho from `center` in direction theta, where theta = 0 points
/// straight up and angles increase counter-clockwise.
HPoint point_at_polar(const HPoint& center, double rho, double theta);
/// Direction of q as seen from center, same convention as point_at_polar.
double polar_angle(const HPoint& center, const HPoint& q);
HPoint midpoint(const HPoint& p, const HPoint& q);

/// Geodesic stored by its Euclidean trace: a vertical line x = position or a
/// semicircle centred at (position, 0) of the given radius.
struct Geodesic {
    bool vertical = true;
    double position = 0.0;
    double radius = 0.0;

    /// Point at signed arclength s from the apex (semicircle) or from y = 1 (line).
    HPoint point_at(double s) const;
};

Geodesic geodesic_through(const HPoint& p, const HPoint& q,
                          const Tolerances& tol = kDefaultTolerances);

/// Locus of points equidistant from p and q.
Geodesic perpendicular_bisector(const HPoint& p, const HPoint& q,
                                const Tolerances& tol = kDefaultTolerances);

/// Signed hyperbolic distance to the geodesic: positive to the right of a
/// vertical line, outside a semicircle.
double signed_distance(const Geodesic& g, const HPoint& z);

/// Intersection of two geodesics inside the half-plane, if any.
std::optional<HPoint> intersect(const Geodesic& g, const Geodesic& h);

/// Reflection (orientation reversing) in the geodesic.
HPoint reflect(const Geodesic& g, const HPoint& z);

/// Hyperbolic disk; see euclidean_form for the Euclidean circle it traces.
struct HDisk {
    HPoint center = HPoint(0, 1);
    double radius = 0.0;

    bool contains(const HPoint& p) const;
};

/// Euclidean circle of a hyperbolic disk. y_lo and y_hi are the bottom and top
/// of the circle, kept separately so the inverse map stays exact for large R.
struct EuclideanCircle {
    double h = 0.0;
    double k = 0.0;
    double r = 0.0;
    double y_lo = 0.0;
    double y_hi = 0.0;
};

EuclideanCircle disk_euclidean_form(const HDisk& disk);
HDisk hdisk_from_euclidean(const EuclideanCircle& circle);
/// Inversion from a bare (h, k, r) triple, requires k > r >= 0.
HDisk hdisk_from_euclidean(double h, double k, double r);

struct BallSpec {
    BallSpec(const HPoint& center, double radius);

    HPoint center;
    double radius;

    bool contains(const HPoint& p) const { return distance(center, p) <= radius; }
};

/// Area of a hyperbolic disk of radius R, 2 pi (cosh R - 1).
double ball_area(double radius);

/// arcsin(1 / cosh t)
double angle_of_parallelism(double t);

/// Polygon whose edges are geodesic segments between consecutive vertices.
class GeodesicPolygon {
public:
    explicit GeodesicPolygon(std::vector<HPoint> vertices);

    std::span<const HPoint> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    Geodesic edge(std::size_t i) const;

    /// Interior angles in vertex order, each in [0, pi] for convex input.
    std::vector<double> interior_angles() const;
    /// +1 for counter-clockwise vertex order, -1 for clockwise.
    int orientation() const;
    /// Area from Green's theorem (sum of arc angles), independent of the
    /// angle-sum route used by polygon_area.
    double boundary_integral_area() const;
    /// Point in polygon for convex polygons, boundary inclusive within slack.
    bool contains(const HPoint& p, double slack = 0.0) const;
    bool is_simple() const;

private:
    std::vector<HPoint> vertices_;
    std::vector<Geodesic> edges_;
    std::vector<double> inward_;  // sign of the polygon's side of each edge, 0 if degenerate
};

/// Gauss-Bonnet area (n - 2) pi - sum of interior angles.
double polygon_area(const GeodesicPolygon& polygon);

/// Regular n-gon with the given circumradius about center; vertex 0 sits in
/// direction `phase`.
GeodesicPolygon regular_polygon(const HPoint& center, double circumradius, int n,
                                double phase = 0.0);

}  // namespace hypack
