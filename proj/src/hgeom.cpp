#include "hypack/hgeom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypack/errors.hpp"

namespace hypack {

namespace {

constexpr double kPi = std::numbers::pi;

// log(e^a + e^b) without overflow.
double log_add_exp(double a, double b) {
    if (a == -INFINITY) return b;
    if (b == -INFINITY) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double wrap_two_pi(double angle) {
    double r = std::fmod(angle, 2.0 * kPi);
    if (r < 0.0) r += 2.0 * kPi;
    return r;
}

// 2 asinh(s) given log(s), accurate for both small and huge s.
double two_asinh_from_log(double log_s) {
    if (log_s > 20.0) return 2.0 * (log_s + std::numbers::ln2);
    return 2.0 * std::asinh(std::exp(log_s));
}

}  // namespace

HPoint::HPoint(double x, double y) : x_(x), y_(y), log_y_(0.0) {
    if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0))
        throw DomainError("HPoint requires finite x and y > 0");
    log_y_ = std::log(y);
}

HPoint HPoint::from_log(double x, double log_y) {
    if (!std::isfinite(x) || !std::isfinite(log_y))
        throw DomainError("HPoint::from_log requires finite x and log_y");
    return HPoint(x, std::exp(log_y), log_y);
}

bool HPoint::y_in_range() const { return y_ >= 1e-300 && y_ <= 1e300; }

double distance(const HPoint& p, const HPoint& q) {
    const double dx = q.x() - p.x();
    if (p.y_in_range() && q.y_in_range()) {
        const double dy = q.y() - p.y();
        const double num = std::hypot(dx, dy);
        const double s = num / (2.0 * std::sqrt(p.y()) * std::sqrt(q.y()));
        if (std::isfinite(s) && s < 1e150) return 2.0 * std::asinh(s);
        if (std::isfinite(num) && num > 0.0) {
            const double log_s = std::log(num) - std::numbers::ln2 - 0.5 * (p.log_y() + q.log_y());
            return two_asinh_from_log(log_s);
        }
    }
    // Log domain: |dy| = e^{hi} (1 - e^{lo - hi}).
    const double hi = std::max(p.log_y(), q.log_y());
    const double lo = std::min(p.log_y(), q.log_y());
    const double log_dy = (hi == lo) ? -INFINITY : hi + std::log(-std::expm1(lo - hi));
    const double log_dx = (dx == 0.0) ? -INFINITY : std::log(std::fabs(dx));
    const double log_num = 0.5 * log_add_exp(2.0 * log_dx, 2.0 * log_dy);
    if (log_num == -INFINITY) return 0.0;
    const double log_s = log_num - std::numbers::ln2 - 0.5 * (p.log_y() + q.log_y());
    return two_asinh_from_log(log_s);
}

// ---------------------------------------------------------------------------
// Isometries

Isometry::Isometry(double a, double b, double c, double d) {
    const double det = a * d - b * c;
    if (!std::isfinite(det) || !(det > 0.0))
        throw DomainError("isometry matrix must have positive determinant");
    const double s = std::sqrt(det);
    a_ = a / s;
    b_ = b / s;
    c_ = c / s;
    d_ = d / s;
}

Isometry Isometry::translation(double t) { return {1.0, t, 0.0, 1.0}; }

Isometry Isometry::dilation(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("dilation factor must be positive");
    const double s = std::sqrt(lambda);
    return {s, 0.0, 0.0, 1.0 / s};
}

Isometry Isometry::taking_origin_to(const HPoint& p) {
    const double s = std::sqrt(p.y());
    return {s, p.x() / s, 0.0, 1.0 / s};
}

Isometry Isometry::rotation(const HPoint& p, double theta) {
    const double phi = 0.5 * theta;
    const Isometry about_origin(std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi));
    const Isometry to_p = taking_origin_to(p);
    return compose(to_p, compose(about_origin, inverse(to_p)));
}

HPoint apply(const Isometry& g, const HPoint& p) {
    const double a = g.a(), b = g.b(), c = g.c(), d = g.d();
    double x_img = 0.0;
    double log_y_img = 0.0;
    if (c == 0.0) {
        x_img = (a * p.x() + b) / d;
        log_y_img = p.log_y() - 2.0 * std::log(std::fabs(d));
    } else {
        const double u = c * p.x() + d;
        const double v = c * p.y();
        const double den = u * u + v * v;
        if (p.y_in_range() && std::isfinite(den) && den > 0.0) {
            x_img = ((a * p.x() + b) * u + a * v * p.y()) / den;
            log_y_img = p.log_y() - std::log(den);
        } else {
            const double log_u = (u == 0.0) ? -INFINITY : 2.0 * std::log(std::fabs(u));
            const double log_v = 2.0 * (std::log(std::fabs(c)) + p.log_y());
            const double log_den = log_add_exp(log_u, log_v);
            // (az + b)/(cz + d) = a/c - 1/(c (cz + d)) for unit determinant.
            x_img = a / c - u * std::exp(-log_den) / c;
            log_y_img = p.log_y() - log_den;
        }
    }
    if (!std::isfinite(x_img) || !std::isfinite(log_y_img) || log_y_img < std::log(kDefaultTolerances.min_image_y))
        throw RangeError("isometry maps point too close to the ideal boundary");
    return HPoint::from_log(x_img, log_y_img);
}

Isometry compose(const Isometry& g, const Isometry& h) {
    return {g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
            g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d()};
}

Isometry inverse(const Isometry& g) { return {g.d(), -g.b(), -g.c(), g.a()}; }

Isometry make_isometry(const IsometrySpec& spec) {
    switch (spec.kind) {
        case IsometryKind::translation:
            return Isometry::translation(spec.amount);
        case IsometryKind::dilation:
            return Isometry::dilation(spec.amount);
        case IsometryKind::rotation:
            if (!(spec.amount > -kPi && spec.amount <= kPi))
                throw DomainError("rotation angle must lie in (-pi, pi]");
            return Isometry::rotation(spec.about, spec.amount);
    }
    throw DomainError("unknown isometry kind");
}

// ---------------------------------------------------------------------------
// Polar charts

HPoint point_at_polar(const HPoint& center, double rho, double theta) {
    const double half_sin = std::sin(0.5 * theta);
    const double sh = std::sinh(rho);
    const double den = std::exp(-rho) + 2.0 * sh * half_sin * half_sin;
    const double x_local = -sh * std::sin(theta) / den;
    return HPoint::from_log(center.x() + center.y() * x_local, center.log_y() - std::log(den));
}

double polar_angle(const HPoint& center, const HPoint& q) {
    const double x = (q.x() - center.x()) / center.y();
    const double y = std::exp(q.log_y() - center.log_y());
    return std::atan2(-2.0 * x, x * x + (y - 1.0) * (y + 1.0));
}

HPoint midpoint(const HPoint& p, const HPoint& q) {
    return point_at_polar(p, 0.5 * distance(p, q), polar_angle(p, q));
}

// ---------------------------------------------------------------------------
// Geodesics

HPoint Geodesic::point_at(double s) const {
    if (vertical) return HPoint::from_log(position, s);
    return HPoint::from_log(position + radius * std::tanh(s), std::log(radius) - std::log(std::cosh(s)));
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q, const Tolerances& tol) {
    const double dx = q.x() - p.x();
    if (std::fabs(dx) <= tol.vertical_geodesic * std::max(p.y(), q.y()))
        return {true, 0.5 * (p.x() + q.x()), 0.0};
    const double c = 0.5 * (p.x() + q.x()) + 0.5 * (q.y() - p.y()) * (q.y() + p.y()) / dx;
    return {false, c, std::hypot(p.x() - c, p.y())};
}

Geodesic perpendicular_bisector(const HPoint& p, const HPoint& q, const Tolerances& tol) {
    const double dx = q.x() - p.x();
    const double dy = q.y() - p.y();
    if (dx == 0.0 && dy == 0.0) throw DomainError("bisector of a point with itself");
    if (std::fabs(dy) <= tol.vertical_geodesic * std::max(p.y(), q.y()))
        return {true, 0.5 * (p.x() + q.x()), 0.0};
    // q_y |z - p|^2 = p_y |z - q|^2 rearranges to a circle on the real axis.
    const double c = (q.y() * p.x() - p.y() * q.x()) / dy;
    const double r = std::sqrt(p.y()) * std::sqrt(q.y()) * std::hypot(dx, dy) / std::fabs(dy);
    return {false, c, r};
}

double signed_distance(const Geodesic& g, const HPoint& z) {
    if (g.vertical) return std::asinh((z.x() - g.position) / z.y());
    const double rho = std::hypot(z.x() - g.position, z.y());
    return std::asinh((rho - g.radius) * (rho + g.radius) / (2.0 * g.radius * z.y()));
}

std::optional<HPoint> intersect(const Geodesic& g, const Geodesic& h) {
    if (g.vertical && h.vertical) return std::nullopt;
    if (g.vertical || h.vertical) {
        const Geodesic& line = g.vertical ? g : h;
        const Geodesic& circ = g.vertical ? h : g;
        const double off = line.position - circ.position;
        const double y2 = (circ.radius - off) * (circ.radius + off);
        if (!(y2 > 0.0)) return std::nullopt;
        return HPoint(line.position, std::sqrt(y2));
    }
    const double gap = h.position - g.position;
    if (gap == 0.0) return std::nullopt;
    const double x = 0.5 * (g.position + h.position) + 0.5 * (g.radius - h.radius) * (g.radius + h.radius) / gap;
    const double off = x - g.position;
    const double y2 = (g.radius - off) * (g.radius + off);
    if (!(y2 > 0.0)) return std::nullopt;
    return HPoint(x, std::sqrt(y2));
}

HPoint reflect(const Geodesic& g, const HPoint& z) {
    if (g.vertical) return HPoint::from_log(2.0 * g.position - z.x(), z.log_y());
    const double dx = z.x() - g.position;
    const double rho2 = dx * dx + z.y() * z.y();
    const double scale = g.radius * g.radius / rho2;
    return HPoint::from_log(g.position + scale * dx, z.log_y() + std::log(scale));
}

// ---------------------------------------------------------------------------
// Disks and balls

bool HDisk::contains(const HPoint& p) const { return distance(center, p) <= radius; }

EuclideanCircle disk_euclidean_form(const HDisk& disk) {
    const double big_k = disk.center.y();
    const double rr = disk.radius;
    return {disk.center.x(), big_k * std::cosh(rr), big_k * std::sinh(rr), big_k * std::exp(-rr),
            big_k * std::exp(rr)};
}

HDisk hdisk_from_euclidean(const EuclideanCircle& circle) {
    if (!(circle.y_lo > 0.0) || !(circle.y_hi >= circle.y_lo))
        throw DomainError("Euclidean circle must lie in the upper half-plane");
    const double big_k = std::sqrt(circle.y_lo) * std::sqrt(circle.y_hi);
    const double rr = 0.5 * std::log1p((circle.y_hi - circle.y_lo) / circle.y_lo);
    return {HPoint(circle.h, big_k), rr};
}

HDisk hdisk_from_euclidean(double h, double k, double r) {
    if (!(k > r) || !(r >= 0.0)) throw DomainError("Euclidean circle must satisfy k > r >= 0");
    return {HPoint(h, std::sqrt(k - r) * std::sqrt(k + r)), std::atanh(r / k)};
}

BallSpec::BallSpec(const HPoint& c, double r) : center(c), radius(r) {
    if (!std::isfinite(r) || !(r > 0.0)) throw DomainError("ball radius must be finite and positive");
}

double ball_area(double radius) {
    if (!(radius >= 0.0)) throw DomainError("ball_area requires R >= 0");
    const double s = std::sinh(0.5 * radius);
    const double area = 4.0 * kPi * s * s;
    if (!std::isfinite(area)) throw RangeError("ball_area overflows");
    return area;
}

double angle_of_parallelism(double t) {
    if (!(t >= 0.0)) throw DomainError("angle_of_parallelism requires t >= 0");
    // arcsin(1/cosh t) == 2 atan(e^{-t}), which keeps full precision for large t.
    return 2.0 * std::atan(std::exp(-t));
}

// ---------------------------------------------------------------------------
// Polygons

GeodesicPolygon::GeodesicPolygon(std::vector<HPoint> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw DomainError("polygon needs at least three vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const HPoint& a = vertices_[i];
        const HPoint& b = vertices_[(i + 1) % n];
        if (a.x() == b.x() && a.y() == b.y()) throw DomainError("polygon has repeated consecutive vertices");
        edges_.push_back(geodesic_through(a, b));
    }
    for (std::size_t i = 0; i < n; ++i) {
        double inward = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == (i + 1) % n) continue;
            const double s = signed_distance(edges_[i], vertices_[j]);
            if (std::fabs(s) > std::fabs(inward)) inward = s;
        }
        inward_.push_back(inward > 0.0 ? 1.0 : (inward < 0.0 ? -1.0 : 0.0));
    }
}

Geodesic GeodesicPolygon::edge(std::size_t i) const { return edges_[i]; }

namespace {

// Green's theorem: area = closed integral of dx / y. An arc of a circle centred
// on the real axis contributes minus its swept polar angle; vertical edges add 0.
double signed_green_area(std::span<const HPoint> vertices) {
    double sum = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const HPoint& a = vertices[i];
        const HPoint& b = vertices[(i + 1) % vertices.size()];
        const Geodesic g = geodesic_through(a, b);
        if (g.vertical) continue;
        sum += std::atan2(a.y(), a.x() - g.position) - std::atan2(b.y(), b.x() - g.position);
    }
    return sum;
}

}  // namespace

double GeodesicPolygon::boundary_integral_area() const { return std::fabs(signed_green_area(vertices_)); }

int GeodesicPolygon::orientation() const {
    const double sum = signed_green_area(vertices_);
    if (sum != 0.0) return sum > 0.0 ? 1 : -1;
    // Degenerate (zero area): fall back to the turning of edge directions.
    double turn = 0.0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const HPoint& here = vertices_[i];
        const double t = polar_angle(here, vertices_[(i + 1) % n]) - (polar_angle(here, vertices_[(i + n - 1) % n]) + kPi);
        turn += std::remainder(t, 2.0 * kPi);
    }
    return turn >= 0.0 ? 1 : -1;
}

std::vector<double> GeodesicPolygon::interior_angles() const {
    const std::size_t n = vertices_.size();
    const int orient = orientation();
    std::vector<double> angles(n);
    for (std::size_t i = 0; i < n; ++i) {
        const HPoint& here = vertices_[i];
        const double to_prev = polar_angle(here, vertices_[(i + n - 1) % n]);
        const double to_next = polar_angle(here, vertices_[(i + 1) % n]);
        double angle = orient > 0 ? wrap_two_pi(to_prev - to_next) : wrap_two_pi(to_next - to_prev);
        // A zero angle (spike) can wrap to 2 pi.
        if (angle > 2.0 * kPi - kDefaultTolerances.angle) angle = 0.0;
        angles[i] = angle;
    }
    return angles;
}

namespace {

bool on_segment(const HPoint& a, const HPoint& b, const HPoint& z) {
    const double ab = distance(a, b);
    return distance(a, z) + distance(z, b) <= ab * (1.0 + 1e-12) + 1e-12;
}

}  // namespace

bool GeodesicPolygon::is_simple() const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
            const HPoint& a = vertices_[i];
            const HPoint& b = vertices_[(i + 1) % n];
            const HPoint& c = vertices_[j];
            const HPoint& d = vertices_[(j + 1) % n];
            const auto z = intersect(geodesic_through(a, b), geodesic_through(c, d));
            if (z && on_segment(a, b, *z) && on_segment(c, d, *z)) return false;
        }
    }
    return true;
}

bool GeodesicPolygon::contains(const HPoint& p, double slack) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (inward_[i] == 0.0) return false;
        if (inward_[i] * signed_distance(edges_[i], p) < -slack) return false;
    }
    return true;
}

double polygon_area(const GeodesicPolygon& polygon) {
    if (!polygon.is_simple()) throw DomainError("polygon_area: polygon is self-intersecting");
    const auto angles = polygon.interior_angles();
    double sum = 0.0;
    for (double a : angles) sum += a;
    const double area = static_cast<double>(angles.size() - 2) * kPi - sum;
    if (area < 0.0) {
        if (area > -1e-9) return 0.0;
        throw DomainError("polygon_area: angle sum exceeds (n - 2) pi; polygon is not convex");
    }
    return area;
}

GeodesicPolygon regular_polygon(const HPoint& center, double circumradius, int n, double phase) {
    if (n < 3) throw DomainError("regular polygon needs n >= 3");
    std::vector<HPoint> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(point_at_polar(center, circumradius, phase + 2.0 * kPi * i / n));
    return GeodesicPolygon(std::move(v));
}

}  // namespace hypack
