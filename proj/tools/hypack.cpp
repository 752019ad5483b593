// hypack command-line front end: gen | density | voronoi | render | verify.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypack/acceptance.hpp"
#include "hypack/density.hpp"
#include "hypack/errors.hpp"
#include "hypack/io.hpp"
#include "hypack/packings.hpp"
#include "hypack/voronoi.hpp"

using namespace hypack;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string kind = "tight";
    double W = 5.0;
    int m = 7;
    double rho = 0.0;  // 0 = maximal Boroczky radius
    double R = 6.0;
    int K = 10;
    std::vector<double> radii;
    std::string critical;  // "N0:N1" for stripe critical radii (N + 1/2) W
    std::vector<double> center{0.0, 1.0};
    std::uint64_t seed = 0x5eed;
    std::size_t samples = 100000;
    unsigned workers = 0;
    double offset = 0.0;
    double width = 0.0;  // 0 = e^{offset + 1/2}
    bool euclidean = false;
    bool log_y = false;
    bool brick_layer = false;
    bool tamper = false;
    std::string in;
    std::string cells;
    std::string out = "-";
    std::string report;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return json::parse(f);
}

HPoint center_of(const RunConfig& c) {
    if (c.center.size() != 2) throw DomainError("--center takes x,y");
    return HPoint(c.center[0], c.center[1]);
}

double boroczky_rho(const RunConfig& c) { return c.rho > 0.0 ? c.rho : boroczky_max_radius(); }

double brick_width(const RunConfig& c) { return c.width > 0.0 ? c.width : std::exp(c.offset + 0.5); }

Packing named_packing(const RunConfig& c) {
    if (c.kind == "stripe") return stripe_packing(c.W);
    if (c.kind == "halfspace") return halfspace_packing();
    if (c.kind == "boroczky") return boroczky_packing(boroczky_rho(c));
    if (c.kind == "tight") return TightPacking(c.m).packing();
    throw DomainError("kind '" + c.kind + "' is not a hyperbolic packing (use stripe, halfspace, boroczky or tight)");
}

std::vector<double> radii_of(const RunConfig& c) {
    if (!c.critical.empty()) {
        const auto colon = c.critical.find(':');
        if (colon == std::string::npos) throw DomainError("--critical takes N0:N1");
        const int n0 = std::stoi(c.critical.substr(0, colon));
        const int n1 = std::stoi(c.critical.substr(colon + 1));
        std::vector<double> r;
        for (int n = n0; n <= n1; ++n) r.push_back((n + 0.5) * c.W);
        return r;
    }
    if (c.radii.empty()) throw DomainError("density needs --radii or --critical");
    return c.radii;
}

void cmd_gen(const RunConfig& c) {
    json doc;
    if (c.kind == "annulus") {
        doc = annulus_to_json(c.K);
    } else if (c.kind == "bricks") {
        doc = bricks_to_json(c.offset, brick_width(c), BallSpec(center_of(c), c.R));
    } else {
        doc = packing_to_json(named_packing(c), BallSpec(center_of(c), c.R));
    }
    write_output(c.out, doc.dump(1) + "\n");
}

void cmd_density(const RunConfig& c) {
    const auto radii = radii_of(c);
    SamplePlan plan;
    plan.seed = c.seed;
    plan.samples = c.samples;
    plan.workers = c.workers;
    DensityCurve curve;
    if (c.euclidean) {
        curve.center = EPoint{0.0, 0.0};
        if (c.kind == "annulus") {
            curve.method = CurveMethod::closed_form;
            for (double r : radii) curve.points.push_back({r, annulus_covered_fraction(r), 0.0, 0});
        } else if (c.kind == "lattice") {
            // Square windows of side 2r around the origin.
            const EuclideanPacking lattice = lattice_disk_packing(1.0, c.rho > 0.0 ? c.rho : 0.5);
            curve.method = CurveMethod::mc;
            for (double r : radii) {
                const auto est = euclid_window_density(lattice, 2.0 * r, plan);
                curve.points.push_back({r, est.fraction, est.std_error, est.samples_used});
            }
        } else {
            throw DomainError("Euclidean mode supports kinds annulus and lattice");
        }
    } else {
        const Packing p = c.in.empty() ? named_packing(c) : packing_from_json(read_json(c.in));
        curve = density_curve(p, center_of(c), radii, plan);
    }
    write_output(c.out, curve_to_csv(curve));
}

void cmd_voronoi(const RunConfig& c) {
    const TightPacking tight(c.m);
    const double search = 6.0 * tight.radius();
    const HPoint center = center_of(c);
    PointIndex index(0.5);
    for (const auto& s : tight.centers_in_ball(BallSpec(center, c.R + search))) index.insert(s);
    json cells = json::array();
    for (std::size_t i = 0; i < index.size(); ++i)
        if (distance(center, index[i]) <= c.R) cells.push_back(cell_to_json(dirichlet_cell(index, i, search)));
    write_output(c.out, cells.dump(1) + "\n");
}

void cmd_render(const RunConfig& c) {
    if (c.in.empty()) throw DomainError("render needs --in packing.json");
    const json doc = read_json(c.in);
    SvgOptions opts;
    opts.log_y = c.log_y;
    opts.brick_layer = c.brick_layer;
    opts.brick_offset = c.offset;
    opts.brick_width = brick_width(c);
    std::vector<json> cells;
    if (!c.cells.empty())
        for (const auto& cell : read_json(c.cells)) cells.push_back(cell);
    write_output(c.out, render_svg(doc, opts, cells));
}

int cmd_verify(const RunConfig& c) {
    AcceptanceOptions opts;
    opts.seed = c.seed;
    opts.workers = c.workers;
    opts.tamper = c.tamper;
    const auto results = run_acceptance(opts);
    bool all = true;
    for (const auto& r : results) {
        std::cout << format_line(r) << "\n";
        all = all && r.pass;
    }
    const json report = acceptance_report(results, opts);
    if (!c.report.empty()) write_output(c.report, report.dump(2) + "\n");
    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypack: packings and densities in the hyperbolic plane"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML/INI file");
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--kind", cfg.kind, "stripe | halfspace | annulus | boroczky | tight | bricks | lattice");
        sub->add_option("--W", cfg.W, "stripe width");
        sub->add_option("--m", cfg.m, "tight packing {3,m}");
        sub->add_option("--rho", cfg.rho, "disk radius (Boroczky default: maximal)");
        sub->add_option("--R", cfg.R, "window radius");
        sub->add_option("--K", cfg.K, "annulus window exponent (radius 2^K)");
        sub->add_option("--center", cfg.center, "centre x,y")->delimiter(',')->expected(2);
        sub->add_option("--seed", cfg.seed, "sampling seed");
        sub->add_option("--samples", cfg.samples, "Monte Carlo samples per radius");
        sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
        sub->add_option("--offset", cfg.offset, "brick family log-offset in [0, 2)");
        sub->add_option("--width", cfg.width, "brick width (default e^{offset+1/2})");
        sub->add_option("--out", cfg.out, "output path, - for stdout");
        sub->add_option("--in", cfg.in, "input packing JSON");
    };

    auto* gen = app.add_subcommand("gen", "write a packing window as JSON");
    common(gen);
    auto* dens = app.add_subcommand("density", "write a density curve as CSV");
    common(dens);
    dens->add_option("--radii", cfg.radii, "comma-separated radii")->delimiter(',');
    dens->add_option("--critical", cfg.critical, "stripe critical radii (N+1/2)W for N0:N1");
    dens->add_flag("--euclidean", cfg.euclidean, "Euclidean mode (annulus, lattice)");
    auto* vor = app.add_subcommand("voronoi", "write Voronoi cells of a tight packing window as JSON");
    common(vor);
    auto* ren = app.add_subcommand("render", "render a packing JSON to SVG");
    common(ren);
    ren->add_flag("--log-y", cfg.log_y, "logarithmic vertical axis");
    ren->add_flag("--bricks", cfg.brick_layer, "overlay brick outlines");
    ren->add_option("--cells", cfg.cells, "Voronoi cell JSON to overlay");
    auto* ver = app.add_subcommand("verify", "run the acceptance suite");
    ver->add_option("--seed", cfg.seed, "sampling seed");
    ver->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    ver->add_option("--report", cfg.report, "write the JSON report here");
    ver->add_flag("--tamper", cfg.tamper, "negative control: shrink every tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) cmd_gen(cfg);
        if (dens->parsed()) cmd_density(cfg);
        if (vor->parsed()) cmd_voronoi(cfg);
        if (ren->parsed()) cmd_render(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
