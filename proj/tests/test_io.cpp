#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"

#include "hypack/acceptance.hpp"
#include "hypack/errors.hpp"
#include "hypack/io.hpp"
#include "hypack/packings.hpp"
#include "hypack/voronoi.hpp"

using namespace hypack;
using nlohmann::json;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("packing documents validate and round-trip") {
    const BallSpec window(HPoint(0, 1), 3.0);
    const Packing p = TightPacking(7).packing();
    const json doc = packing_to_json(p, window);
    CHECK_NOTHROW(validate_packing_json(doc));
    CHECK(doc["schema"] == kSchemaVersion);
    CHECK(doc["model"] == "uhp");
    const auto bodies = bodies_from_json(doc);
    CHECK(bodies.size() == p.disks_in_ball(window).size());
    CHECK(bodies.size() == TightPacking(7).centers_in_ball(window).size());
    const json reparsed = json::parse(doc.dump());
    const Packing back = packing_from_json(reparsed);
    CHECK(back.kind == "tight");
    CHECK(back.covers(HPoint(0, 1)));

    const Packing stripe = packing_from_json(packing_to_json(stripe_packing(2.5), window));
    CHECK(stripe.params.at("W") == 2.5);
    const Packing bor = packing_from_params("boroczky", {{"rho", 0.3}});
    CHECK(bor.params.at("rho") == 0.3);
    CHECK_THROWS_AS(packing_from_params("moon", {}), DomainError);
}

TEST_CASE("malformed documents are rejected") {
    json doc = packing_to_json(stripe_packing(1.0), BallSpec(HPoint(0, 1), 1.0));
    doc["schema"] = "other/0";
    CHECK_THROWS_AS(validate_packing_json(doc), DomainError);
    CHECK_THROWS_AS(validate_packing_json(json::object()), DomainError);
    json bad = packing_to_json(TightPacking(8).packing(), BallSpec(HPoint(0, 1), 1.0));
    bad["bodies"][0]["K"] = -1.0;
    CHECK_THROWS_AS(validate_packing_json(bad), DomainError);
}

TEST_CASE("other document kinds") {
    const json bricks = bricks_to_json(0.0, std::exp(0.5), BallSpec(HPoint(0, 1), 2.0));
    CHECK_NOTHROW(validate_packing_json(bricks));
    CHECK(bricks["tiles"].size() > 0);
    const json ann = annulus_to_json(4);
    CHECK(ann["model"] == "euclidean");
    CHECK(ann["annuli"].size() == 2);
}

TEST_CASE("CSV output") {
    DensityCurve c;
    c.method = CurveMethod::quadrature;
    c.points.push_back({12.5, 0.1, 0.0, 0});
    c.points.push_back({17.5, 1.0 / 3.0, 0.0, 0});
    const std::string csv = curve_to_csv(c);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == kCsvHeader);
    std::getline(in, line);
    CHECK(line == "12.5,0.10000000000000001,0,0,quadrature");
    std::getline(in, line);
    CHECK(std::stod(line.substr(5, 20)) == 1.0 / 3.0);
}

TEST_CASE("SVG output has one element per body") {
    const BallSpec window(HPoint(0, 1), 2.5);
    const json doc = packing_to_json(TightPacking(7).packing(), window);
    for (bool log_y : {false, true}) {
        SvgOptions opts;
        opts.log_y = log_y;
        const std::string svg = render_svg(doc, opts);
        CHECK(svg.rfind("<svg", 0) == 0);
        CHECK(count(svg, "class=\"body\"") == doc["bodies"].size());
    }
    const json stripe = packing_to_json(stripe_packing(1.0), window);
    const std::string s = render_svg(stripe, {});
    CHECK(count(s, "class=\"stripe-black\"") > 0);
    CHECK(count(s, "class=\"body\"") == 0);

    const PointIndex idx = [] {
        PointIndex i;
        for (const auto& c : TightPacking(7).centers_in_ball(BallSpec(HPoint(0, 1), 5.0))) i.insert(c);
        return i;
    }();
    std::vector<json> cells{cell_to_json(dirichlet_cell(idx, idx.nearest(HPoint(0, 1))->first, 3.0))};
    CHECK(cells[0]["vertices"].size() == 7);
    CHECK(count(render_svg(doc, {}, cells), "class=\"cell\"") == 1);
    SvgOptions bricks;
    bricks.brick_layer = true;
    CHECK(count(render_svg(doc, bricks), "class=\"brick-outline\"") > 0);
}

TEST_CASE("acceptance report format") {
    CriterionResult r;
    r.id = "A0";
    r.title = "demo";
    r.pass = true;
    r.detail = "ok";
    CHECK(format_line(r).rfind("A0 PASS demo: ok", 0) == 0);
    r.pass = false;
    CHECK(format_line(r).rfind("A0 FAIL", 0) == 0);
    const json rep = acceptance_report({r}, AcceptanceOptions{});
    CHECK(rep.contains("criteria"));
}

}
