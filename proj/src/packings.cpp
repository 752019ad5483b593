#include "hypack/packings.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <memory>
#include <numbers>

#include "hypack/errors.hpp"
#include "hypack/quadrature.hpp"

namespace hypack {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDedupDistance = 1e-6;
constexpr double kDedupAmbiguous = 1e-4;
constexpr double kMaxTightWindow = 20.0;
constexpr std::size_t kMaxWindowBodies = 5'000'000;

}  // namespace

Packing Packing::transformed(const Isometry& g) const {
    const Isometry g_inv = inverse(g);
    Packing out;
    out.kind = kind;
    out.label = label;
    out.params = params;
    if (disks_in_ball) {
        out.disks_in_ball = [inner = disks_in_ball, g, g_inv](const BallSpec& b) {
            auto disks = inner(BallSpec(apply(g_inv, b.center), b.radius));
            for (auto& d : disks) d.center = apply(g, d.center);
            return disks;
        };
    }
    out.covers = [inner = covers, g_inv](const HPoint& z) { return inner(apply(g_inv, z)); };
    if (exact_area_in_ball) {
        out.exact_area_in_ball = [inner = exact_area_in_ball, g_inv](const BallSpec& b) {
            return inner(BallSpec(apply(g_inv, b.center), b.radius));
        };
    }
    if (fundamental_domain) {
        std::vector<HPoint> verts;
        for (const auto& v : fundamental_domain->polygon.vertices()) verts.push_back(apply(g, v));
        FundamentalDomain fd{GeodesicPolygon(std::move(verts)), fundamental_domain->sectors};
        for (auto& s : fd.sectors) s.disk.center = apply(g, s.disk.center);
        out.fundamental_domain = std::move(fd);
    }
    return out;
}

double min_pairwise_gap(const std::vector<HDisk>& disks) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j)
            gap = std::min(gap, distance(disks[i].center, disks[j].center) - disks[i].radius - disks[j].radius);
    return gap;
}

// ---------------------------------------------------------------------------
// Stripe model and half-space

double StripeModel::horocycle(long j) const { return std::exp((static_cast<double>(j) + 0.5) * width); }

long StripeModel::stripe_index(const HPoint& p) const {
    return static_cast<long>(std::floor(p.log_y() / width - 0.5));
}

bool stripe_contains(const HPoint& p, double width) {
    if (!(width > 0.0)) throw DomainError("stripe width must be positive");
    return StripeModel{width}.stripe_index(p) % 2 == 0;
}

Packing stripe_packing(double width) {
    if (!(width > 0.0)) throw DomainError("stripe width must be positive");
    Packing p;
    p.kind = "stripe";
    p.label = "stripe model W=" + std::to_string(width);
    p.params = {{"W", width}};
    p.covers = [width](const HPoint& z) { return stripe_contains(z, width); };
    p.exact_area_in_ball = [width](const BallSpec& b) { return stripe_black_area(b, width); };
    return p;
}

bool halfspace_contains(const HPoint& p) { return p.x() >= 0.0; }

Packing halfspace_packing() {
    Packing p;
    p.kind = "halfspace";
    p.label = "half-space x >= 0";
    p.covers = halfspace_contains;
    return p;
}

// ---------------------------------------------------------------------------
// Boroczky packing

double boroczky_max_radius() { return 0.5 * std::acosh(1.5); }

HPoint boroczky_center(long j, long k) {
    const double log_y = 2.0 * static_cast<double>(j) + 0.5;
    return HPoint::from_log(std::exp(log_y) * (static_cast<double>(k) + 0.5), log_y);
}

namespace {

void check_boroczky_radius(double rho) {
    if (!(rho > 0.0)) throw DomainError("Boroczky disk radius must be positive");
    if (rho > boroczky_max_radius() + 1e-12)
        throw SaturationError("Boroczky disks overlap for rho > arccosh(1.5)/2 = " +
                              std::to_string(boroczky_max_radius()));
}

}  // namespace

std::vector<HDisk> boroczky_disks_in_ball(const BallSpec& ball, double rho) {
    check_boroczky_radius(rho);
    const double reach = ball.radius + rho;
    const double big_h = ball.center.x();
    const double big_k = ball.center.y();
    const double log_k = ball.center.log_y();
    // Row j sits at log y = 2j + 1/2; keep rows whose centres can be within reach.
    const auto j_lo = static_cast<long>(std::ceil((log_k - reach - 0.5) / 2.0));
    const auto j_hi = static_cast<long>(std::floor((log_k + reach - 0.5) / 2.0));
    std::vector<HDisk> out;
    for (long j = j_lo; j <= j_hi; ++j) {
        const double yc = std::exp(2.0 * static_cast<double>(j) + 0.5);
        // cosh(reach) >= 1 + ((x - H)^2 + (yc - K)^2) / (2 yc K)
        const double span2 = 2.0 * yc * big_k * (std::cosh(reach) - 1.0) - (yc - big_k) * (yc - big_k);
        if (span2 < 0.0) continue;
        const double half = std::sqrt(span2);
        const double k_lo = std::ceil((big_h - half) / yc - 0.5);
        const double k_hi = std::floor((big_h + half) / yc - 0.5);
        if (k_hi - k_lo > static_cast<double>(kMaxWindowBodies)) throw RangeError("Boroczky window too large");
        for (double k = k_lo; k <= k_hi; k += 1.0) {
            const HPoint c = HPoint::from_log(yc * (k + 0.5), 2.0 * static_cast<double>(j) + 0.5);
            if (distance(c, ball.center) <= reach) out.push_back({c, rho});
        }
        if (out.size() > kMaxWindowBodies) throw RangeError("Boroczky window too large");
    }
    return out;
}

Packing boroczky_packing(double rho) {
    check_boroczky_radius(rho);
    Packing p;
    p.kind = "boroczky";
    p.label = "Boroczky packing rho=" + std::to_string(rho);
    p.params = {{"rho", rho}};
    p.disks_in_ball = [rho](const BallSpec& b) { return boroczky_disks_in_ball(b, rho); };
    p.covers = [rho](const HPoint& z) {
        const double ly = z.log_y();
        const auto j_lo = static_cast<long>(std::ceil((ly - rho - 0.5) / 2.0));
        const auto j_hi = static_cast<long>(std::floor((ly + rho - 0.5) / 2.0));
        for (long j = j_lo; j <= j_hi; ++j) {
            const double log_yc = 2.0 * static_cast<double>(j) + 0.5;
            const double yc = std::exp(log_yc);
            const double k0 = std::round(z.x() / yc - 0.5);
            for (double k = k0 - 1.0; k <= k0 + 1.0; k += 1.0)
                if (distance(z, HPoint::from_log(yc * (k + 0.5), log_yc)) <= rho) return true;
        }
        return false;
    };
    return p;
}

// ---------------------------------------------------------------------------
// Tight-radius packings

double tight_radius(int m) {
    if (m <= 6) throw DomainError("tight radius needs m >= 7 (m <= 6 is Euclidean or spherical)");
    const double a = kPi / m;
    return 0.5 * std::acosh(1.0 / (std::tan(a) * std::tan(2.0 * a)));
}

double tight_density_formula(int m) {
    if (m <= 6) throw DomainError("tight density needs m >= 7");
    return (3.0 / std::sin(kPi / m) - 6.0) / static_cast<double>(m - 6);
}

namespace {

GeodesicPolygon base_face(int m, double radius) {
    const HPoint v0(0.0, 1.0);
    return GeodesicPolygon(
            {v0, point_at_polar(v0, 2.0 * radius, 0.0), point_at_polar(v0, 2.0 * radius, 2.0 * kPi / m)});
}

struct Fold {
    HPoint point;
    std::vector<int> mirrors;
};

}  // namespace

TightPacking::TightPacking(int m)
    : m_(m),
      radius_(tight_radius(m)),
      face_circumradius_(std::acosh(1.0 / (std::tan(kPi / 3.0) * std::tan(kPi / m)))),
      face_(base_face(m, radius_)) {
    for (std::size_t i = 0; i < 3; ++i) {
        edges_.push_back(face_.edge(i));
        inward_.push_back(signed_distance(edges_.back(), face_.vertices()[(i + 2) % 3]) > 0.0 ? 1.0 : -1.0);
    }
}

namespace {

// Reflect p through violated face edges until it lies in the face. Each step
// strictly reduces the distance to the face's interior, so the walk ends.
Fold fold_into_face(const HPoint& p, const std::vector<Geodesic>& edges, const std::vector<double>& inward) {
    Fold f{p, {}};
    for (int iter = 0; iter < 100000; ++iter) {
        int worst = -1;
        double worst_s = -1e-13;
        for (int i = 0; i < 3; ++i) {
            const double s = inward[static_cast<std::size_t>(i)] * signed_distance(edges[static_cast<std::size_t>(i)], f.point);
            if (s < worst_s) {
                worst_s = s;
                worst = i;
            }
        }
        if (worst < 0) return f;
        f.point = reflect(edges[static_cast<std::size_t>(worst)], f.point);
        f.mirrors.push_back(worst);
    }
    throw RangeError("folding into the fundamental face did not terminate");
}

}  // namespace

HPoint TightPacking::nearest_center(const HPoint& p) const {
    const Fold f = fold_into_face(p, edges_, inward_);
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 3; ++i) {
        const double d = distance(f.point, face_.vertices()[i]);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    HPoint v = face_.vertices()[best];
    for (auto it = f.mirrors.rbegin(); it != f.mirrors.rend(); ++it) v = reflect(edges_[static_cast<std::size_t>(*it)], v);
    return v;
}

bool TightPacking::covers(const HPoint& p) const {
    const Fold f = fold_into_face(p, edges_, inward_);
    for (const auto& v : face_.vertices())
        if (distance(f.point, v) <= radius_) return true;
    return false;
}

std::vector<HPoint> TightPacking::centers_in_ball(const BallSpec& ball) const {
    if (ball.radius > kMaxTightWindow) throw DomainError("tight packing window radius must be <= 20");
    // Seed at the vertex nearest the ball centre; unfold a face neighbour too
    // to fix the angular frame of the seed's m neighbours.
    const Fold f = fold_into_face(ball.center, edges_, inward_);
    std::size_t best = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (distance(f.point, face_.vertices()[i]) < distance(f.point, face_.vertices()[best])) best = i;
    HPoint seed = face_.vertices()[best];
    HPoint neighbour = face_.vertices()[(best + 1) % 3];
    for (auto it = f.mirrors.rbegin(); it != f.mirrors.rend(); ++it) {
        seed = reflect(edges_[static_cast<std::size_t>(*it)], seed);
        neighbour = reflect(edges_[static_cast<std::size_t>(*it)], neighbour);
    }

    // Vertices within R + r_m of the centre are needed; every one of them is
    // joined to the seed through vertices within R + r_m + (face circumradius).
    const double explore = ball.radius + radius_ + face_circumradius_ + 1e-9;
    const double step = 2.0 * radius_;
    PointIndex index(0.5);
    std::vector<double> frame;
    std::deque<std::size_t> queue;
    index.insert(seed);
    frame.push_back(polar_angle(seed, neighbour));
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        const HPoint pv = index[v];
        const double base = frame[v];
        for (int i = 0; i < m_; ++i) {
            const HPoint c = point_at_polar(pv, step, base + 2.0 * kPi * i / m_);
            if (distance(ball.center, c) > explore) continue;
            bool duplicate = false;
            for (auto id : index.within(c, kDedupAmbiguous)) {
                const double d = distance(c, index[id]);
                if (d < kDedupDistance) {
                    duplicate = true;
                } else {
                    throw DomainError("tight packing vertex deduplication is ambiguous; tighten the tolerance");
                }
            }
            if (duplicate) continue;
            const std::size_t id = index.insert(c);
            frame.push_back(polar_angle(c, pv));
            queue.push_back(id);
        }
    }
    std::vector<HPoint> out;
    for (const auto& p : index.points())
        if (distance(ball.center, p) <= ball.radius + radius_) out.push_back(p);
    return out;
}

FundamentalDomain TightPacking::fundamental_domain() const {
    FundamentalDomain fd{face_, {}};
    const auto angles = face_.interior_angles();
    for (std::size_t i = 0; i < 3; ++i) fd.sectors.push_back({HDisk{face_.vertices()[i], radius_}, angles[i]});
    return fd;
}

Packing TightPacking::packing() const {
    auto self = std::make_shared<const TightPacking>(*this);
    Packing p;
    p.kind = "tight";
    p.label = "tight {3," + std::to_string(m_) + "} packing";
    p.params = {{"m", static_cast<double>(m_)}, {"rho", radius_}};
    p.disks_in_ball = [self](const BallSpec& b) {
        std::vector<HDisk> disks;
        for (const auto& c : self->centers_in_ball(b)) disks.push_back({c, self->radius()});
        return disks;
    };
    p.covers = [self](const HPoint& z) { return self->covers(z); };
    p.fundamental_domain = fundamental_domain();
    return p;
}

std::vector<HPoint> tight_centers_in_ball(int m, const BallSpec& ball) { return TightPacking(m).centers_in_ball(ball); }

// ---------------------------------------------------------------------------
// Bricks

double BrickTile::scale() const { return std::exp(2.0 * static_cast<double>(j) + offset); }
double BrickTile::x_lo() const { return width * scale() * static_cast<double>(k); }
double BrickTile::x_hi() const { return width * scale() * static_cast<double>(k + 1); }
double BrickTile::y_lo() const { return scale(); }
double BrickTile::y_hi() const { return std::exp(2.0 * static_cast<double>(j) + offset + 2.0); }

bool BrickTile::contains(const HPoint& p) const {
    return p.y() >= y_lo() && p.y() < y_hi() && p.x() >= x_lo() && p.x() < x_hi();
}

double BrickTile::area() const { return width * -std::expm1(-2.0); }

BrickTile brick_at(const HPoint& p, double offset, double width) {
    if (!(width > 0.0)) throw DomainError("brick width must be positive");
    BrickTile t;
    t.offset = offset;
    t.width = width;
    t.j = static_cast<long>(std::floor((p.log_y() - offset) / 2.0));
    t.k = static_cast<long>(std::floor(p.x() / (width * t.scale())));
    return t;
}

double brick_area_in_ball(const BrickTile& tile, const BallSpec& ball) {
    const EuclideanCircle circ = disk_euclidean_form(HDisk{ball.center, ball.radius});
    const double a = std::max(tile.y_lo(), circ.y_lo);
    const double b = std::min(tile.y_hi(), circ.y_hi);
    if (!(a < b)) return 0.0;
    const double x0 = tile.x_lo();
    const double x1 = tile.x_hi();
    // Overlap length of [x0, x1] with the ball's chord at height y, over y^2.
    auto integrand = [&](double y) {
        const double hw2 = (y - circ.y_lo) * (circ.y_hi - y);
        if (!(hw2 > 0.0)) return 0.0;
        const double hw = std::sqrt(hw2);
        const double len = std::min(x1, circ.h + hw) - std::max(x0, circ.h - hw);
        return len > 0.0 ? len / (y * y) : 0.0;
    };
    // Kinks where the chord end crosses a vertical side: hw(y) = |x_side - h|.
    std::vector<double> cuts{a, b};
    for (double side : {x0, x1}) {
        const double c = side - circ.h;
        if (std::fabs(c) >= circ.r) continue;
        const double dy = std::sqrt((circ.r - c) * (circ.r + c));
        for (double y : {circ.k - dy, circ.k + dy})
            if (y > a && y < b) cuts.push_back(y);
    }
    std::sort(cuts.begin(), cuts.end());
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        area += integrate_sqrt_endpoints(integrand, cuts[i], cuts[i + 1], 1e-11);
    return area;
}

Region brick_region(const BrickTile& tile) {
    if (!(tile.width > 0.0)) throw DomainError("brick width must be positive");
    if (!(tile.offset >= 0.0 && tile.offset < 2.0)) throw DomainError("brick offset must lie in [0, 2)");
    return {[tile](const HPoint& p) { return tile.contains(p); },
            [tile](const BallSpec& b) { return brick_area_in_ball(tile, b); },
            "brick j=" + std::to_string(tile.j) + " k=" + std::to_string(tile.k)};
}

}  // namespace hypack
