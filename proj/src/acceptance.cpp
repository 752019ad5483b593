#include "hypack/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>

#include "hypack/density.hpp"
#include "hypack/errors.hpp"
#include "hypack/packings.hpp"
#include "hypack/pspace.hpp"
#include "hypack/regions.hpp"

namespace hypack {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

struct Context {
    const AcceptanceOptions& opts;
    double tol_scale;

    SamplePlan plan(std::size_t samples, std::uint64_t salt) const {
        SamplePlan p;
        p.seed = mix64(opts.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
        p.samples = samples;
        p.workers = opts.workers;
        return p;
    }
    double tol(double t) const { return t * tol_scale; }
};

// Uniform draws for the randomised criteria, keyed like the sample streams.
double draw(const Context& ctx, std::uint64_t salt, std::uint64_t i, std::uint32_t k) {
    return counter_uniform(mix64(ctx.opts.seed + salt), i, k);
}

Isometry random_isometry(const Context& ctx, std::uint64_t salt, std::uint64_t i) {
    const double t = 6.0 * draw(ctx, salt, i, 0) - 3.0;
    const double lambda = std::exp(4.0 * draw(ctx, salt, i, 1) - 2.0);
    const double theta = 2.0 * kPi * draw(ctx, salt, i, 2) - kPi;
    const HPoint about(draw(ctx, salt, i, 3) - 0.5, std::exp(draw(ctx, salt, i, 4) - 0.5));
    return compose(Isometry::rotation(about, theta), compose(Isometry::dilation(lambda), Isometry::translation(t)));
}

CriterionResult a1(const Context& ctx) {
    CriterionResult r{"A1", "tight density closed form vs geometry", false, "", json::object(), 0.0};
    const double closed = (3.0 / std::sin(kPi / 7.0) - 6.0) / (7.0 - 6.0);
    const double formula = tight_density_formula(7);
    const TightPacking tight(7);
    const Packing pk = tight.packing();
    const double fd = fundamental_domain_density(pk);
    const auto t0 = std::chrono::steady_clock::now();
    const AreaEstimate mc = tile_density(pk, polygon_tile(tight.face()), ctx.plan(1'000'000, 1));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok_formula = std::fabs(formula - closed) <= ctx.tol(1e-12);
    const bool ok_fd = std::fabs(formula - fd) <= ctx.tol(1e-12);
    const bool ok_mc = std::fabs(mc.fraction - formula) <= ctx.tol(0.003);
    const bool ok_time = secs < 10.0;
    r.pass = ok_formula && ok_fd && ok_mc && ok_time;
    r.detail = "formula=" + fmt("%.10f", formula) + " fundamental-domain=" + fmt("%.10f", fd) +
               " |diff|=" + fmt("%.2e", std::fabs(formula - fd)) + " (tol 1e-12); MC(1e6)=" + fmt("%.5f", mc.fraction) +
               " |diff|=" + fmt("%.5f", std::fabs(mc.fraction - formula)) + " (tol 0.003); MC time " + fmt("%.2f", secs) + " s (< 10 s)";
    r.measured = {{"formula", formula}, {"fundamental_domain", fd}, {"mc", mc.fraction}, {"mc_std_error", mc.std_error},
                  {"mc_seconds", secs}};
    return r;
}

CriterionResult a2(const Context& ctx) {
    CriterionResult r{"A2", "stripe oscillation", false, "", json::object(), 0.0};
    const double w = 5.0;
    const double f6 = quad_black_fraction(6.5 * w, w);
    const double f7 = quad_black_fraction(7.5 * w, w);
    const bool ok6 = f6 >= 2.0 / 3.0 - ctx.tol(1e-6);
    const bool ok7 = f7 <= 1.0 / 3.0 + ctx.tol(1e-6);
    // Stripe-area ratio at W=6, R=(8+1/2)6.
    const double w2 = 6.0, radius = 8.5 * w2;
    double worst = 0.0;
    json ratios = json::object();
    for (long j = -4; j <= 4; ++j) {
        const double ratio = quad_stripe_area(j, radius, w2) / quad_stripe_area(j + 1, radius, w2) / std::exp(w2 / 2.0);
        ratios[std::to_string(j)] = ratio;
        worst = std::max(worst, std::fabs(ratio - 1.0));
    }
    const bool ok_ratio = worst <= ctx.tol(0.10);
    r.pass = ok6 && ok7 && ok_ratio;
    r.detail = "black fraction N=6: " + fmt("%.6f", f6) + " (need >= 2/3) " + (ok6 ? "ok" : "VIOLATED") +
               "; N=7: " + fmt("%.6f", f7) + " (need <= 1/3) " + (ok7 ? "ok" : "VIOLATED") +
               "; oscillation amplitude " + fmt("%.4f", std::fabs(f7 - f6)) + "; max |A_j/A_{j+1}/e^3 - 1| over j=-4..4: " +
               fmt("%.4f", worst) + " (tol 0.10)";
    r.measured = {{"fraction_N6", f6}, {"fraction_N7", f7}, {"ratio_over_e3", ratios}, {"ratio_max_dev", worst}};
    return r;
}

CriterionResult a3(const Context& ctx) {
    CriterionResult r{"A3", "volume growth", false, "", json::object(), 0.0};
    const double ratio = ball_area(19.0) / ball_area(20.0);
    const double growth = ball_area(30.0) * std::exp(-30.0);
    const bool ok1 = std::fabs(ratio - std::exp(-1.0)) <= ctx.tol(1e-3);
    const bool ok2 = std::fabs(growth / kPi - 1.0) <= ctx.tol(0.01);
    r.pass = ok1 && ok2;
    r.detail = "vol B19/vol B20=" + fmt("%.9f", ratio) + " vs e^-1=" + fmt("%.9f", std::exp(-1.0)) +
               " (tol 1e-3); vol B30 e^-30=" + fmt("%.9f", growth) + " vs pi (tol 1%)";
    r.measured = {{"ratio_19_20", ratio}, {"growth_ratio_30", growth}};
    return r;
}

CriterionResult a4(const Context& ctx) {
    CriterionResult r{"A4", "Euclidean annulus oscillation", false, "", json::object(), 0.0};
    const std::map<int, double> target{{10, 0.8}, {11, 0.2}, {12, 0.8}};
    bool ok = true;
    double worst_oracle = 0.0;
    std::string detail;
    for (const auto& [k, want] : target) {
        const double got = annulus_fraction_euclid(k);
        // Partial sums of the annulus areas pi (4^j - 4^{j-1}) for even j in [2, K].
        double covered = 0.0;
        for (int j = 2; j <= k; j += 2) covered += kPi * (std::ldexp(1.0, 2 * j) - std::ldexp(1.0, 2 * j - 2));
        const double oracle = covered / (kPi * std::ldexp(1.0, 2 * k));
        worst_oracle = std::max(worst_oracle, std::fabs(got - oracle));
        const bool near = std::fabs(got - want) <= ctx.tol(0.02) * want;
        ok = ok && near;
        detail += "K=" + std::to_string(k) + ": " + fmt("%.9f", got) + " (target " + fmt("%.1f", want) + ") ";
        r.measured["K" + std::to_string(k)] = got;
    }
    const bool ok_oracle = worst_oracle <= ctx.tol(1e-12);
    r.pass = ok && ok_oracle;
    r.detail = detail + "within 2%; partial-sum oracle |diff|=" + fmt("%.1e", worst_oracle) + " (tol 1e-12)";
    r.measured["oracle_max_diff"] = worst_oracle;
    return r;
}

CriterionResult a5(const Context& ctx) {
    CriterionResult r{"A5", "half-space centre dependence", false, "", json::object(), 0.0};
    const Packing half = halfspace_packing();
    bool ok = true;
    for (double t : {0.0, 1.0, 2.0}) {
        // (sinh t, 1) lies on the covered side at distance t from x = 0.
        const HPoint c(std::sinh(t), 1.0);
        const double radii[] = {12.0};
        const auto curve = density_curve(half, c, radii, ctx.plan(400'000, 5 + static_cast<std::uint64_t>(t)));
        const double mc = curve.points[0].fraction;
        const double limit = halfspace_density_limit(t, HalfspaceSide::near);
        const bool good = std::fabs(mc - limit) <= ctx.tol(0.02);
        ok = ok && good;
        r.detail += "t=" + fmt("%.0f", t) + ": MC=" + fmt("%.4f", mc) + " limit=" + fmt("%.6f", limit) + "; ";
        r.measured["t" + fmt("%.0f", t)] = {{"mc", mc}, {"limit", limit}};
    }
    const bool half_at_zero = halfspace_density_limit(0.0, HalfspaceSide::near) == 0.5;
    r.pass = ok && half_at_zero;
    r.detail += "tol 0.02; t=0 limit exactly 0.5: " + std::string(half_at_zero ? "yes" : "no");
    return r;
}

CriterionResult a6(const Context& ctx) {
    CriterionResult r{"A6", "Boroczky construction audit", false, "", json::object(), 0.0};
    const double rho = boroczky_max_radius();
    double radius = 5.0;
    std::vector<HDisk> disks;
    for (; radius < 12.0; radius += 0.25) {
        disks = boroczky_disks_in_ball(BallSpec(HPoint(0.0, 1.0), radius), rho);
        if (disks.size() >= 1000) break;
    }
    const double gap = min_pairwise_gap(disks);
    std::map<double, std::vector<const HDisk*>> rows;
    for (const auto& d : disks) rows[d.center.log_y()].push_back(&d);
    double worst = 0.0;
    std::size_t pairs = 0;
    for (auto& [log_y, row] : rows) {
        std::sort(row.begin(), row.end(), [](auto* a, auto* b) { return a->center.x() < b->center.x(); });
        const double step = std::exp(log_y);
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            if (std::fabs(row[i + 1]->center.x() - row[i]->center.x() - step) > 1e-9 * step) continue;
            worst = std::max(worst, std::fabs(distance(row[i]->center, row[i + 1]->center) - 2.0 * rho));
            ++pairs;
        }
    }
    bool rejected = false;
    try {
        boroczky_disks_in_ball(BallSpec(HPoint(0.0, 1.0), 3.0), 0.49);
    } catch (const SaturationError&) {
        rejected = true;
    }
    r.pass = disks.size() >= 1000 && gap >= -ctx.tol(1e-9) && worst <= ctx.tol(1e-9) && pairs > 0 && rejected;
    r.detail = std::to_string(disks.size()) + " disks (window R=" + fmt("%.2f", radius) + "), min gap=" + fmt("%.3e", gap) +
               " (>= -1e-9), row tangency max |d-2rho|=" + fmt("%.2e", worst) + " over " + std::to_string(pairs) +
               " pairs (<= 1e-9), rho=0.49 rejected: " + (rejected ? "yes" : "no");
    r.measured = {{"disks", disks.size()}, {"min_gap", gap}, {"tangency_max_dev", worst}, {"rho_049_rejected", rejected}};
    return r;
}

CriterionResult a7(const Context& ctx) {
    CriterionResult r{"A7", "tile-density ambiguity", false, "", json::object(), 0.0};
    const Packing bor = boroczky_packing(boroczky_max_radius());
    const double widths[2] = {std::exp(0.5), std::exp(1.5)};
    double fraction[2] = {0.0, 0.0};
    double var[2] = {0.0, 0.0};
    int bricks = 0;
    for (int fam = 0; fam < 2; ++fam) {
        bricks = 0;
        for (long j = -1; j <= 1; ++j) {
            for (long k = -1; k <= 0; ++k) {
                const BrickTile t{j, k, static_cast<double>(fam), widths[fam]};
                const auto est = tile_density(bor, brick_tile(t), ctx.plan(100'000, 70 + static_cast<std::uint64_t>(10 * fam + bricks)));
                fraction[fam] += est.fraction;
                var[fam] += est.std_error * est.std_error;
                ++bricks;
            }
        }
        fraction[fam] /= bricks;
        var[fam] /= static_cast<double>(bricks) * bricks;
    }
    const double ratio = fraction[0] / fraction[1];
    const double ratio_se = ratio * std::sqrt(var[0] / (fraction[0] * fraction[0]) + var[1] / (fraction[1] * fraction[1]));
    r.pass = std::fabs(ratio - std::exp(1.0)) <= ctx.tol(0.05);
    r.detail = "offset 0 (w=e^1/2): " + fmt("%.5f", fraction[0]) + ", offset 1 (w=e^3/2): " + fmt("%.5f", fraction[1]) +
               ", ratio=" + fmt("%.4f", ratio) + " +- " + fmt("%.4f", ratio_se) + " vs e=" + fmt("%.4f", std::exp(1.0)) + " (tol 0.05)";
    r.measured = {{"offset0", fraction[0]}, {"offset1", fraction[1]}, {"ratio", ratio}, {"ratio_std_error", ratio_se}};
    return r;
}

CriterionResult a8(const Context& ctx) {
    CriterionResult r{"A8", "ergodic ball-average convergence", false, "", json::object(), 0.0};
    const Packing tight = TightPacking(7).packing();
    const double target = tight_density_formula(7);
    std::vector<AreaEstimate> est;
    for (double radius : {6.0, 8.0, 10.0, 12.0})
        est.push_back(f_R_estimate(tight, radius, ctx.plan(400'000, 80 + static_cast<std::uint64_t>(radius))));
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < est.size(); ++i) {
        const double e0 = std::fabs(est[i].fraction - target), e1 = std::fabs(est[i + 1].fraction - target);
        const double slack = 2.0 * std::hypot(est[i].std_error, est[i + 1].std_error);
        if (e1 > e0 + ctx.tol(slack)) monotone = false;
    }
    const double err12 = std::fabs(est.back().fraction - target);
    r.pass = err12 <= ctx.tol(0.02) && monotone;
    r.detail = "f_R at R=6,8,10,12: ";
    for (const auto& e : est) r.detail += fmt("%.4f", e.fraction) + "(" + fmt("%.4f", e.std_error) + ") ";
    r.detail += "target " + fmt("%.6f", target) + "; |f_12 - target|=" + fmt("%.4f", err12) +
                " (tol 0.02); errors non-increasing within 2 SE: " + (monotone ? "yes" : "no");
    r.measured = json::array();
    for (const auto& e : est) r.measured.push_back({{"fraction", e.fraction}, {"std_error", e.std_error}});
    return r;
}

CriterionResult a9(const Context& ctx) {
    CriterionResult r{"A9", "mass-transport identity", false, "", json::object(), 0.0};
    const auto est = mass_transport_check(voronoi_source(TightPacking(7)), BallSpec(HPoint(0.0, 1.0), 8.0), ctx.plan(20'000, 9));
    const double target = 0.9143;
    r.pass = std::fabs(est.fraction - target) <= ctx.tol(0.01);
    r.detail = "mean cell-relative density over R=8 window: " + fmt("%.6f", est.fraction) + " +- " +
               fmt("%.1e", est.std_error) + " vs 0.9143 (tol 0.01)";
    r.measured = {{"mean", est.fraction}, {"std_error", est.std_error}};
    return r;
}

CriterionResult a10(const Context& ctx) {
    CriterionResult r{"A10", "packing-space metric axioms", false, "", json::object(), 0.0};
    TruncationOptions coarse;
    coarse.k_max = 2;
    coarse.spacing = 0.06;
    const Packing bases[3] = {TightPacking(7).packing(), stripe_packing(1.0), boroczky_packing(boroczky_max_radius())};
    std::vector<TruncatedPacking> pool;
    for (int i = 0; i < 12; ++i) {
        const Isometry g = i < 3 ? Isometry::identity() : random_isometry(ctx, 100, static_cast<std::uint64_t>(i));
        pool.push_back(truncate(bases[i % 3].transformed(g), coarse));
    }
    const std::size_t n = pool.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    bool identity = true, symmetric = true;
    for (std::size_t i = 0; i < n; ++i) {
        identity = identity && packing_distance(pool[i], pool[i]).value == 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            d[i][j] = packing_distance(pool[i], pool[j]).value;
            d[j][i] = packing_distance(pool[j], pool[i]).value;
            symmetric = symmetric && d[i][j] == d[j][i];
        }
    }
    double worst_triangle = -std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < 100; ++t) {
        const auto a = static_cast<std::size_t>(draw(ctx, 101, t, 0) * n);
        const auto b = static_cast<std::size_t>(draw(ctx, 101, t, 1) * n);
        const auto c = static_cast<std::size_t>(draw(ctx, 101, t, 2) * n);
        worst_triangle = std::max(worst_triangle, d[a][c] - d[a][b] - d[b][c]);
    }
    const bool triangle = worst_triangle <= ctx.tol(1e-9);

    // Rotation path about the origin towards the identity.
    TruncationOptions fine;
    fine.k_max = 1;
    fine.spacing = 0.01;
    const Packing tight = TightPacking(7).packing();
    const TruncatedPacking base = truncate(tight, fine);
    std::vector<double> path;
    bool monotone = true;
    for (int i = 0; i < 10; ++i) {
        const double theta = 0.12 * std::pow(0.8, i);
        path.push_back(packing_distance(base, truncate(tight.transformed(Isometry::rotation(HPoint(0.0, 1.0), theta)), fine)).value);
        if (i > 0 && !(path[static_cast<std::size_t>(i)] < path[static_cast<std::size_t>(i) - 1])) monotone = false;
    }
    r.pass = identity && symmetric && triangle && monotone;
    r.detail = std::string("identity exact: ") + (identity ? "yes" : "no") + ", symmetry exact: " + (symmetric ? "yes" : "no") +
               ", max triangle excess over 100 triples=" + fmt("%.2e", worst_triangle) + " (<= 1e-9), d(P,gP) along rotation path:";
    for (double v : path) r.detail += " " + fmt("%.4f", v);
    r.detail += monotone ? " (strictly decreasing)" : " (NOT monotone)";
    r.measured = {{"identity", identity}, {"symmetric", symmetric}, {"max_triangle_excess", worst_triangle}, {"path", path}};
    return r;
}

CriterionResult a11(const Context& ctx) {
    CriterionResult r{"A11", "isometry equivariance", false, "", json::object(), 0.0};
    const Packing bases[4] = {TightPacking(7).packing(), stripe_packing(2.0), boroczky_packing(boroczky_max_radius()),
                              halfspace_packing()};
    const std::size_t samples = 20'000;
    double worst = 0.0;
    int failures = 0;
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        const Packing& p = bases[trial % 4];
        const Isometry g = random_isometry(ctx, 110, trial);
        const HPoint c = point_at_polar(HPoint(0.0, 1.0), 2.0 * draw(ctx, 111, trial, 0), 2.0 * kPi * draw(ctx, 111, trial, 1));
        const double radii[] = {1.0 + 2.0 * draw(ctx, 111, trial, 2), 4.0 + 2.0 * draw(ctx, 111, trial, 3)};
        const auto base = density_curve(p, c, radii, ctx.plan(samples, 2 * trial), false);
        const auto moved = density_curve(p.transformed(g), apply(g, c), radii, ctx.plan(samples, 2 * trial + 1), false);
        // Ball average about the origin against the image ball about g(O).
        const AreaEstimate f = f_R_estimate(p, radii[1], ctx.plan(samples, 1000 + trial));
        const double one[] = {radii[1]};
        const auto fg = density_curve(p.transformed(g), apply(g, HPoint(0.0, 1.0)), one, ctx.plan(samples, 2000 + trial), false);
        std::vector<std::pair<DensityPoint, DensityPoint>> pairs;
        for (std::size_t i = 0; i < 2; ++i) pairs.emplace_back(base.points[i], moved.points[i]);
        pairs.emplace_back(DensityPoint{radii[1], f.fraction, f.std_error, f.samples_used}, fg.points[0]);
        for (const auto& [u, v] : pairs) {
            const double se = std::max(std::hypot(u.std_error, v.std_error), 1.0 / static_cast<double>(samples));
            const double z = std::fabs(u.fraction - v.fraction) / se;
            worst = std::max(worst, z);
            if (z > 4.0 * ctx.tol_scale) ++failures;
        }
    }
    r.pass = failures == 0;
    r.detail = "50 trials x (2 curve radii + f_R): max |diff|/combined SE=" + fmt("%.2f", worst) + " (<= 4), failures=" +
               std::to_string(failures);
    r.measured = {{"max_z", worst}, {"failures", failures}};
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    const Context ctx{opts, opts.tamper ? 1e-9 : 1.0};
    const std::function<CriterionResult(const Context&)> criteria[] = {a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11};
    const char* ids[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11"};
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult res;
        try {
            res = criteria[i](ctx);
        } catch (const std::exception& e) {
            res.id = ids[i];
            res.title = "error";
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(res));
    }
    return out;
}

std::string format_line(const CriterionResult& r) {
    return r.id + " " + (r.pass ? "PASS" : "FAIL") + " " + r.title + ": " + r.detail + " [" + fmt("%.1f", r.seconds) + " s]";
}

json acceptance_report(const std::vector<CriterionResult>& results, const AcceptanceOptions& opts) {
    json crit = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        crit.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                        {"measured", r.measured}, {"seconds", r.seconds}});
    }
    return {{"schema", "hypack/1"}, {"seed", opts.seed}, {"tampered", opts.tamper}, {"all_pass", all}, {"criteria", crit}};
}

}  // namespace hypack
