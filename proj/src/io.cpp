#include "hypack/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "hypack/errors.hpp"

namespace hypack {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxBricks = 200000;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json point_json(const HPoint& p) { return {{"x", p.x()}, {"y", p.y()}}; }

json window_json(const BallSpec& w) { return {{"center", point_json(w.center)}, {"radius", w.radius}}; }

json params_json(const std::map<std::string, double>& params) {
    json out = json::object();
    for (const auto& [k, v] : params) out[k] = v;
    return out;
}

json header(const std::string& model, const std::string& kind) {
    return {{"schema", kSchemaVersion}, {"model", model}, {"kind", kind}};
}

// Viewport in model coordinates and the map to pixels.
struct View {
    double x0, x1, y0, y1;
    bool log_y;
    double width_px, height_px;

    double px(double x) const { return (x - x0) / (x1 - x0) * width_px; }
    double py(double y) const {
        if (log_y) {
            const double ly = std::log(std::max(y, 1e-300));
            return (std::log(y1) - ly) / (std::log(y1) - std::log(y0)) * height_px;
        }
        return (y1 - y) / (y1 - y0) * height_px;
    }
};

View make_view(const json& doc, const SvgOptions& opts) {
    const auto& w = doc.at("window");
    const double cx = w.at("center").at("x").get<double>();
    const double cy = w.at("center").at("y").get<double>();
    const double r = w.at("radius").get<double>();
    View v{};
    v.log_y = false;
    v.width_px = opts.width_px;
    if (doc.at("model") == "euclidean") {
        v.x0 = cx - r;
        v.x1 = cx + r;
        v.y0 = cy - r;
        v.y1 = cy + r;
    } else {
        const EuclideanCircle c = disk_euclidean_form(HDisk{HPoint(cx, cy), r});
        v.x0 = c.h - c.r;
        v.x1 = c.h + c.r;
        v.y0 = c.y_lo;
        v.y1 = c.y_hi;
        v.log_y = opts.log_y;
    }
    v.height_px = v.log_y ? opts.width_px : opts.width_px * (v.y1 - v.y0) / (v.x1 - v.x0);
    return v;
}

std::string polyline_path(const View& v, const std::vector<std::pair<double, double>>& pts, bool close) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i)
        d += (i == 0 ? "M" : " L") + num(v.px(pts[i].first)) + "," + num(v.py(pts[i].second));
    if (close) d += " Z";
    return d;
}

std::vector<std::pair<double, double>> circle_points(double h, double k, double r, int n = 96) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * i / n;
        pts.emplace_back(h + r * std::cos(t), k + r * std::sin(t));
    }
    return pts;
}

std::vector<std::pair<double, double>> geodesic_segment(const HPoint& a, const HPoint& b, int n = 24) {
    std::vector<std::pair<double, double>> pts;
    const double len = distance(a, b);
    const double theta = polar_angle(a, b);
    for (int i = 0; i <= n; ++i) {
        const HPoint p = point_at_polar(a, len * i / n, theta);
        pts.emplace_back(p.x(), p.y());
    }
    return pts;
}

void brick_rects(std::ostringstream& svg, const View& v, double offset, double width, const char* cls) {
    const long j0 = static_cast<long>(std::floor((std::log(v.y0) - offset) / 2.0));
    const long j1 = static_cast<long>(std::floor((std::log(v.y1) - offset) / 2.0));
    std::size_t count = 0;
    for (long j = j0; j <= j1; ++j) {
        const double s = std::exp(2.0 * static_cast<double>(j) + offset);
        const long k0 = static_cast<long>(std::floor(v.x0 / (width * s)));
        const long k1 = static_cast<long>(std::floor(v.x1 / (width * s)));
        for (long k = k0; k <= k1; ++k) {
            if (++count > kMaxBricks) return;
            const double xa = width * s * static_cast<double>(k), xb = width * s * static_cast<double>(k + 1);
            const double ya = s, yb = s * std::exp(2.0);
            svg << "<path class=\"" << cls << "\" d=\""
                << polyline_path(v, {{xa, ya}, {xb, ya}, {xb, yb}, {xa, yb}}, true) << "\"/>\n";
        }
    }
}

}  // namespace

json packing_to_json(const Packing& p, const BallSpec& window) {
    json doc = header("uhp", p.kind);
    doc["params"] = params_json(p.params);
    doc["window"] = window_json(window);
    if (p.has_bodies()) {
        json bodies = json::array();
        for (const auto& d : p.disks_in_ball(window))
            bodies.push_back({{"H", d.center.x()}, {"K", d.center.y()}, {"R", d.radius}});
        doc["bodies"] = std::move(bodies);
    } else {
        json region = params_json(p.params);
        region["type"] = p.kind;
        doc["region"] = std::move(region);
    }
    return doc;
}

json bricks_to_json(double offset, double width, const BallSpec& window) {
    if (!(width > 0.0)) throw DomainError("brick width must be positive");
    if (!(offset >= 0.0 && offset < 2.0)) throw DomainError("brick offset must lie in [0, 2)");
    json doc = header("uhp", "bricks");
    doc["params"] = {{"offset", offset}, {"width", width}};
    doc["window"] = window_json(window);
    doc["region"] = {{"type", "bricks"}, {"offset", offset}, {"width", width}};
    const EuclideanCircle c = disk_euclidean_form(HDisk{window.center, window.radius});
    const long j0 = static_cast<long>(std::floor((std::log(c.y_lo) - offset) / 2.0));
    const long j1 = static_cast<long>(std::floor((std::log(c.y_hi) - offset) / 2.0));
    json tiles = json::array();
    for (long j = j0; j <= j1; ++j) {
        const double s = std::exp(2.0 * static_cast<double>(j) + offset);
        const long k0 = static_cast<long>(std::floor((c.h - c.r) / (width * s)));
        const long k1 = static_cast<long>(std::floor((c.h + c.r) / (width * s)));
        for (long k = k0; k <= k1; ++k) {
            const BrickTile t{j, k, offset, width};
            if (brick_area_in_ball(t, window) <= 0.0) continue;
            if (tiles.size() >= kMaxBricks) throw DomainError("window meets too many bricks");
            tiles.push_back({{"j", j}, {"k", k}, {"x_lo", t.x_lo()}, {"x_hi", t.x_hi()},
                             {"y_lo", t.y_lo()}, {"y_hi", t.y_hi()}});
        }
    }
    doc["tiles"] = std::move(tiles);
    return doc;
}

json annulus_to_json(int k) {
    if (k < 2) throw DomainError("annulus window exponent must be >= 2");
    json doc = header("euclidean", "annulus");
    doc["params"] = {{"K", k}};
    doc["window"] = {{"center", {{"x", 0.0}, {"y", 0.0}}}, {"radius", std::ldexp(1.0, k)}};
    doc["region"] = {{"type", "annulus"}};
    json annuli = json::array();
    for (int j = 2; j <= k; j += 2) annuli.push_back({{"inner", std::ldexp(1.0, j - 1)}, {"outer", std::ldexp(1.0, j)}});
    doc["annuli"] = std::move(annuli);
    return doc;
}

void validate_packing_json(const json& doc) {
    auto fail = [](const std::string& what) { throw DomainError("packing document: " + what); };
    if (!doc.is_object()) fail("not an object");
    if (!doc.contains("schema") || doc["schema"] != kSchemaVersion) fail("schema must be hypack/1");
    if (!doc.contains("model") || (doc["model"] != "uhp" && doc["model"] != "euclidean")) fail("model must be uhp or euclidean");
    if (!doc.contains("kind") || !doc["kind"].is_string()) fail("kind missing");
    if (!doc.contains("params") || !doc["params"].is_object()) fail("params missing");
    if (!doc.contains("window") || !doc["window"].is_object()) fail("window missing");
    const auto& w = doc["window"];
    if (!w.contains("center") || !w["center"].contains("x") || !w["center"].contains("y")) fail("window centre missing");
    if (!w.contains("radius") || !w["radius"].is_number() || !(w["radius"].get<double>() > 0.0)) fail("window radius must be positive");
    const bool bodies = doc.contains("bodies");
    const bool region = doc.contains("region");
    if (bodies == region) fail("exactly one of bodies and region is required");
    if (bodies) {
        if (!doc["bodies"].is_array()) fail("bodies must be an array");
        for (const auto& b : doc["bodies"]) {
            if (!b.contains("H") || !b.contains("K") || !b.contains("R")) fail("body needs H, K and R");
            if (!(b["K"].get<double>() > 0.0) || !(b["R"].get<double>() > 0.0)) fail("body needs K > 0 and R > 0");
        }
    } else if (!doc["region"].is_object() || !doc["region"].contains("type")) {
        fail("region descriptor needs a type");
    }
}

std::vector<HDisk> bodies_from_json(const json& doc) {
    std::vector<HDisk> out;
    if (!doc.contains("bodies")) return out;
    for (const auto& b : doc["bodies"])
        out.push_back({HPoint(b["H"].get<double>(), b["K"].get<double>()), b["R"].get<double>()});
    return out;
}

Packing packing_from_params(const std::string& kind, const std::map<std::string, double>& params) {
    auto need = [&](const char* key) {
        const auto it = params.find(key);
        if (it == params.end()) throw DomainError("packing '" + kind + "' needs parameter " + key);
        return it->second;
    };
    if (kind == "stripe") return stripe_packing(need("W"));
    if (kind == "halfspace") return halfspace_packing();
    if (kind == "boroczky") return boroczky_packing(need("rho"));
    if (kind == "tight") {
        const double m = need("m");
        if (m != std::floor(m)) throw DomainError("tight packing needs an integer m");
        return TightPacking(static_cast<int>(m)).packing();
    }
    throw DomainError("unknown hyperbolic packing kind '" + kind + "'");
}

Packing packing_from_json(const json& doc) {
    validate_packing_json(doc);
    if (doc["model"] != "uhp") throw DomainError("packing document is not a half-plane model");
    std::map<std::string, double> params;
    for (const auto& [k, v] : doc["params"].items()) params[k] = v.get<double>();
    return packing_from_params(doc["kind"].get<std::string>(), params);
}

std::string curve_to_csv(const DensityCurve& curve) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& p : curve.points)
        out += full(p.radius) + "," + full(p.fraction) + "," + full(p.std_error) + "," + std::to_string(p.samples) +
               "," + to_string(curve.method) + "\n";
    return out;
}

json cell_to_json(const VoronoiCell& cell) {
    json verts = json::array();
    for (const auto& v : cell.polygon.vertices()) verts.push_back(point_json(v));
    return {{"site", point_json(cell.site)}, {"vertices", std::move(verts)}};
}

std::string render_svg(const json& doc, const SvgOptions& opts, const std::vector<json>& cells) {
    validate_packing_json(doc);
    const View v = make_view(doc, opts);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(v.width_px) << "\" height=\""
        << num(v.height_px) << "\" viewBox=\"0 0 " << num(v.width_px) << " " << num(v.height_px) << "\">\n";
    svg << "<style>.frame{fill:none;stroke:#000}.body{fill:#4a7ab5;stroke:#1d3557;stroke-width:0.5}"
           ".stripe-black{fill:#222}.stripe-white{fill:#f4f4f4}.horocycle{stroke:#c33;stroke-width:0.5}"
           ".halfspace{fill:#444}.geodesic{stroke:#c33}.brick{fill:#e9c46a;stroke:#6b4f12;stroke-width:0.5}"
           ".brick-outline{fill:none;stroke:#6b4f12;stroke-width:0.5}.annulus{fill:#4a7ab5;fill-rule:evenodd}"
           ".cell{fill:none;stroke:#2a9d8f;stroke-width:0.7}</style>\n";
    svg << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << num(v.width_px) << "\" height=\"" << num(v.height_px)
        << "\"/>\n";

    const std::string kind = doc["kind"];
    if (doc.contains("region")) {
        const auto& region = doc["region"];
        if (kind == "stripe") {
            const double w = region.at("W").get<double>();
            const long j0 = static_cast<long>(std::floor(std::log(v.y0) / w - 0.5));
            const long j1 = static_cast<long>(std::floor(std::log(v.y1) / w - 0.5));
            for (long j = j0; j <= j1; ++j) {
                const double ya = std::max(v.y0, std::exp((static_cast<double>(j) + 0.5) * w));
                const double yb = std::min(v.y1, std::exp((static_cast<double>(j) + 1.5) * w));
                svg << "<path class=\"" << (j % 2 == 0 ? "stripe-black" : "stripe-white") << "\" d=\""
                    << polyline_path(v, {{v.x0, ya}, {v.x1, ya}, {v.x1, yb}, {v.x0, yb}}, true) << "\"/>\n";
                if (j > j0)
                    svg << "<path class=\"horocycle\" d=\"" << polyline_path(v, {{v.x0, ya}, {v.x1, ya}}, false)
                        << "\"/>\n";
            }
        } else if (kind == "halfspace") {
            const double xa = std::max(v.x0, 0.0);
            if (xa < v.x1)
                svg << "<path class=\"halfspace\" d=\""
                    << polyline_path(v, {{xa, v.y0}, {v.x1, v.y0}, {v.x1, v.y1}, {xa, v.y1}}, true) << "\"/>\n";
            if (v.x0 <= 0.0 && 0.0 <= v.x1)
                svg << "<path class=\"geodesic\" d=\"" << polyline_path(v, {{0.0, v.y0}, {0.0, v.y1}}, false)
                    << "\"/>\n";
        } else if (kind == "bricks") {
            for (const auto& t : doc.at("tiles")) {
                const double xa = t["x_lo"], xb = t["x_hi"], ya = t["y_lo"], yb = t["y_hi"];
                svg << "<path class=\"brick\" d=\""
                    << polyline_path(v, {{xa, ya}, {xb, ya}, {xb, yb}, {xa, yb}}, true) << "\"/>\n";
            }
        } else if (kind == "annulus") {
            for (const auto& a : doc.at("annuli")) {
                const double r_in = a["inner"], r_out = a["outer"];
                svg << "<path class=\"annulus\" d=\"" << polyline_path(v, circle_points(0.0, 0.0, r_out, 192), true)
                    << " " << polyline_path(v, circle_points(0.0, 0.0, r_in, 192), true) << "\"/>\n";
            }
        }
    }

    for (const auto& d : bodies_from_json(doc)) {
        const EuclideanCircle c = disk_euclidean_form(d);
        if (v.log_y) {
            svg << "<path class=\"body\" d=\"" << polyline_path(v, circle_points(c.h, c.k, c.r), true) << "\"/>\n";
        } else {
            svg << "<circle class=\"body\" cx=\"" << num(v.px(c.h)) << "\" cy=\"" << num(v.py(c.k)) << "\" r=\""
                << num(c.r / (v.x1 - v.x0) * v.width_px) << "\"/>\n";
        }
    }

    if (opts.brick_layer && doc["model"] == "uhp") brick_rects(svg, v, opts.brick_offset, opts.brick_width, "brick-outline");

    for (const auto& cell : cells) {
        std::vector<HPoint> verts;
        for (const auto& p : cell.at("vertices")) verts.emplace_back(p["x"].get<double>(), p["y"].get<double>());
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            auto seg = geodesic_segment(verts[i], verts[(i + 1) % verts.size()]);
            seg.pop_back();
            pts.insert(pts.end(), seg.begin(), seg.end());
        }
        svg << "<path class=\"cell\" d=\"" << polyline_path(v, pts, true) << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hypack
