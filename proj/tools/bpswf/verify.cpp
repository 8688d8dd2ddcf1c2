#include "commands.hpp"

#include "output.hpp"

#include "bpswf/bouwkamp.hpp"
#include "bpswf/pswf.hpp"
#include "bpswf/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

namespace bpswf::cli {

using nlohmann::json;

namespace {

struct Context {
    VerifyOptions opts;
    QuadratureSizes quad;
    QuadratureSizes mu_quad;
    ModeTable table;

    BallQuadratureRule rule(const QuadratureSizes &q, int scale = 1) const {
        return ball_rule(opts.alpha, scale * q.m_r, scale * q.m_theta, scale * q.m_phi);
    }

    VectorPswf mode(int n, int k, int ell) const {
        return VectorPswf(ScalarPswf(ModeIndex{opts.alpha, opts.c, n, k, ell}, table.at(n, k)));
    }

    std::vector<VectorPswf> gram_modes() const {
        std::vector<VectorPswf> out;
        for (const auto &[key, e] : table.entries)
            for (int ell = 1; ell <= 2 * e.n + 1; ++ell)
                out.push_back(mode(e.n, e.k, ell));
        return out;
    }
};

json mode_json(int n, int k) { return json{{"n", n}, {"k", k}}; }

json check_result(double residual, double tolerance) {
    return json{{"pass", residual <= tolerance}, {"residual", residual}, {"tolerance", tolerance}};
}

json skipped(const std::string &why) { return json{{"pass", true}, {"skipped", why}}; }

// Worst-case bookkeeping shared by the per-mode checks.
struct Worst {
    double value = 0.0;
    json at;
    void update(double v, json where) {
        if (!(v <= value)) {
            value = v;
            at = std::move(where);
        }
    }
};

json algebraic_residual(const Context &ctx) {
    Worst w;
    for (const auto &[key, e] : ctx.table.entries) {
        const auto a = build_matrix(e.n, ctx.opts.alpha, ctx.opts.c, e.truncation());
        w.update(residual(a, e.chi, e.beta) / a.norm(), mode_json(e.n, e.k));
    }
    auto out = check_result(w.value, 1e-11);
    out["worst_mode"] = w.at;
    return out;
}

json ordering(const Context &ctx) {
    int violations = 0;
    for (const auto &[key, e] : ctx.table.entries)
        if (e.k > 0 && !(ctx.table.at(e.n, e.k - 1).chi < e.chi))
            ++violations;
    auto out = check_result(violations, 0);
    out["pairs"] = std::count_if(ctx.table.entries.begin(), ctx.table.entries.end(),
                                 [](const auto &kv) { return kv.second.k > 0; });
    return out;
}

json sturm_liouville(const Context &ctx) {
    Worst w;
    for (const auto &[key, e] : ctx.table.entries) {
        const ScalarPswf s(ModeIndex{ctx.opts.alpha, ctx.opts.c, e.n, e.k, 1}, e);
        double scale = 0.0, defect = 0.0;
        for (int i = 0; i < 32; ++i) {
            const double r = 0.5 + 0.5 * std::cos(std::numbers::pi * (i + 0.5) / 32);
            const double chi_g = e.chi * s.radial_profile(r).value;
            scale = std::max(scale, std::abs(chi_g));
            defect = std::max(defect, std::abs(apply_L_radial(s, r) - chi_g));
        }
        w.update(defect / scale, mode_json(e.n, e.k));
    }
    auto out = check_result(w.value, 1e-9);
    out["worst_mode"] = w.at;
    out["radii"] = 32;
    return out;
}

json d_operator(const Context &ctx) {
    const double h = 1e-3, floor = 1e-9;
    Worst err, order;
    for (const auto &[key, e] : ctx.table.entries) {
        const auto v = ctx.mode(e.n, e.k, 2);
        const double shift = e.chi + 2.0 * ctx.opts.alpha + 2.0;
        double e1 = 0.0, e2 = 0.0;
        for (const auto &x : ratio_sample_points(v, 10, ctx.opts.seed)) {
            const Vec3 psi = vector_eval(v, x);
            const double pp = dot(psi, psi);
            e1 = std::max(e1, std::abs(dot(apply_D_fd(v, x, h), psi) / pp - shift) / shift);
            e2 = std::max(e2, std::abs(dot(apply_D_fd(v, x, h / 2), psi) / pp - shift) / shift);
        }
        err.update(e1, mode_json(e.n, e.k));
        if (e1 > floor)
            order.update(std::abs(e1 / e2 - 4.0), mode_json(e.n, e.k));
    }
    json out = check_result(err.value, 5e-4);
    out["worst_mode"] = err.at;
    out["h"] = h;
    out["order_ratio_defect"] = order.value;
    out["order_ratio_tolerance"] = 1.0;
    out["pass"] = err.value <= 5e-4 && order.value <= 1.0;
    return out;
}

json gram(const Context &ctx) {
    const auto modes = ctx.gram_modes();
    const auto g = gram_vector(modes, ctx.rule(ctx.quad));
    double worst = 0.0;
    json diagonal = json::array();
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const int n = modes[i].mode().n;
        diagonal.push_back(g[i][i]);
        for (std::size_t j = 0; j < modes.size(); ++j)
            worst = std::max(worst, std::abs(g[i][j] - (i == j ? n * (n + 1.0) : 0.0)));
    }
    auto out = check_result(worst, 1e-8);
    out["modes"] = modes.size();
    out["diagonal"] = diagonal;
    return out;
}

json divergence(const Context &ctx) {
    const double h = 1e-4, floor = 1e-9;
    std::mt19937_64 rng(ctx.opts.seed);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    Worst w, order;
    for (const auto &[key, e] : ctx.table.entries) {
        const auto v = ctx.mode(e.n, e.k, 2);
        double div = 0.0, div2 = 0.0, scale = 1.0;
        for (int i = 0; i < 200;) {
            const Vec3 x{u(rng), u(rng), u(rng)};
            if (norm(x) > 0.95 || std::hypot(x.x, x.y) < 1e-2)
                continue;
            ++i;
            div = std::max(div, std::abs(divergence_fd(v, x, h)));
            div2 = std::max(div2, std::abs(divergence_fd(v, x, 2 * h)));
            scale = std::max(scale, norm(vector_eval(v, x)));
        }
        w.update(div / scale, mode_json(e.n, e.k));
        if (div / scale > floor)
            order.update(std::abs(div2 / div - 4.0), mode_json(e.n, e.k));
    }
    auto out = check_result(w.value, 1e-6);
    out["worst_mode"] = w.at;
    out["points_per_mode"] = 200;
    out["h"] = h;
    out["order_ratio_defect"] = order.value;
    out["order_ratio_tolerance"] = 1.0;
    out["pass"] = w.value <= 1e-6 && order.value <= 1.0;
    return out;
}

json eigen_relation(const Context &ctx) {
    if (ctx.opts.c == 0.0)
        return skipped("the transform has no eigenvalue ratio at c = 0");
    const auto rule = ctx.rule(ctx.quad);
    const auto mu_rule = ctx.rule(ctx.mu_quad);
    Worst disp, phase, mu;
    int order_violations = 0;
    json modes = json::array();
    std::map<int, double> previous;
    for (const auto &[key, e] : ctx.table.entries) {
        const auto v = ctx.mode(e.n, e.k, 2);
        const auto rep = eigen_report(v, rule, mu_rule, ratio_sample_points(v, 20, ctx.opts.seed));
        disp.update(rep.dispersion, mode_json(e.n, e.k));
        phase.update(rep.residuals.at("phase_error"), mode_json(e.n, e.k));
        mu.update(rep.residuals.at("mu_vs_lambda_sq"), mode_json(e.n, e.k));
        if (previous.count(e.n) && !(rep.lambda < previous[e.n]))
            ++order_violations;
        previous[e.n] = rep.lambda;
        modes.push_back(json{{"n", e.n}, {"k", e.k}, {"lambda", rep.lambda}, {"mu", rep.mu},
                             {"phase_index", rep.phase_index}, {"dispersion", rep.dispersion}});
    }
    json out;
    out["pass"] = disp.value <= 1e-5 && phase.value <= 1e-6 && mu.value <= 1e-5 && order_violations == 0;
    out["residual"] = disp.value;
    out["tolerance"] = 1e-5;
    out["phase_error"] = check_result(phase.value, 1e-6);
    out["mu_vs_lambda_sq"] = check_result(mu.value, 1e-5);
    out["lambda_order_violations"] = order_violations;
    out["modes"] = modes;
    return out;
}

json identities(const Context &ctx) {
    const auto rep = identity_suite(ctx.opts.seed, 100, 6);
    double worst = 0.0;
    json defects;
    for (const auto &[name, d] : rep.max_defect) {
        defects[name] = d;
        worst = std::max(worst, d);
    }
    auto out = check_result(worst, 1e-12);
    out["trials"] = rep.trials;
    out["defects"] = defects;
    return out;
}

json convergence(const Context &ctx) {
    if (ctx.opts.c == 0.0)
        return skipped("quadrature enters only through the transform, which is trivial at c = 0");
    const auto coarse = ctx.rule(ctx.quad);
    const auto fine = ctx.rule(ctx.quad, 2);
    Worst lam;
    for (const auto &[key, e] : ctx.table.entries) {
        const auto v = ctx.mode(e.n, e.k, 2);
        const auto pts = ratio_sample_points(v, 20, ctx.opts.seed);
        const double a = estimate_lambda(v, coarse, pts).lambda;
        const double b = estimate_lambda(v, fine, pts).lambda;
        lam.update(std::abs(a - b) / std::abs(b), mode_json(e.n, e.k));
    }
    // the double transform is quadratic in the rule size, so only the lowest mode is doubled
    double mu_change = 0.0;
    if (ctx.table.entries.count({1, 0})) {
        const auto v = ctx.mode(1, 0, 2);
        const auto pts = ratio_sample_points(v, 20, ctx.opts.seed);
        const double a = mu_via_double_transform(v, ctx.rule(ctx.mu_quad), pts).mu;
        const double b = mu_via_double_transform(v, ctx.rule(ctx.mu_quad, 2), pts).mu;
        mu_change = std::abs(a - b) / std::abs(b);
    }
    const auto modes = ctx.gram_modes();
    const auto g1 = gram_vector(modes, coarse);
    const auto g2 = gram_vector(modes, fine);
    double gram_change = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i)
        for (std::size_t j = 0; j < modes.size(); ++j)
            gram_change = std::max(gram_change, std::abs(g1[i][j] - g2[i][j]));

    json out;
    out["lambda"] = check_result(lam.value, 1e-5);
    out["lambda"]["worst_mode"] = lam.at;
    out["mu"] = check_result(mu_change, 1e-5);
    out["gram"] = check_result(gram_change, 1e-8);
    out["pass"] = out["lambda"]["pass"].get<bool>() && out["mu"]["pass"].get<bool>() &&
                  out["gram"]["pass"].get<bool>();
    out["residual"] = std::max({lam.value, mu_change, gram_change});
    out["tolerance"] = 1e-8;
    return out;
}

using CheckFn = std::function<json(const Context &)>;

const std::vector<std::pair<std::string, CheckFn>> &registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks{
        {"algebraic-residual", algebraic_residual},
        {"ordering", ordering},
        {"sturm-liouville", sturm_liouville},
        {"d-operator", d_operator},
        {"gram-vector", gram},
        {"divergence", divergence},
        {"eigen-relation", eigen_relation},
        {"identities", identities},
        {"convergence", convergence},
    };
    return checks;
}

constexpr QuadratureSizes kDefaultRule{48, 48, 96};

// The double transform costs the square of the rule size, so mu gets its own
// bandwidth-scaled rule, never finer than the main one.
QuadratureSizes mu_rule_sizes(double c, const QuadratureSizes &main) {
    const int m = std::max(12, static_cast<int>(std::ceil(1.5 * c)) + 4);
    return {std::min(m, main.m_r), std::min(m, main.m_theta), std::min(2 * m, main.m_phi)};
}

} // namespace

const std::vector<std::string> &available_checks() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

nlohmann::json run_verify(const VerifyOptions &opts) {
    if (opts.N < 1)
        throw UsageError("--N must be at least 1 for verification");
    for (const auto &name : opts.checks)
        if (std::find(available_checks().begin(), available_checks().end(), name) == available_checks().end())
            throw UsageError("unknown check '" + name + "'");

    Context ctx;
    ctx.opts = opts;
    ctx.quad = {opts.quad.m_r > 0 ? opts.quad.m_r : kDefaultRule.m_r,
                opts.quad.m_theta > 0 ? opts.quad.m_theta : kDefaultRule.m_theta,
                opts.quad.m_phi > 0 ? opts.quad.m_phi : kDefaultRule.m_phi};
    ctx.mu_quad = mu_rule_sizes(opts.c, ctx.quad);
    ctx.table = solve_modes(opts.N, opts.alpha, opts.c);

    json report;
    report["schema_version"] = kSchemaVersion;
    report["parameters"] = {{"alpha", opts.alpha}, {"c", opts.c}, {"N", opts.N}, {"seed", opts.seed}};
    report["quadrature"] = {
        {"m_r", ctx.quad.m_r},
        {"m_theta", ctx.quad.m_theta},
        {"m_phi", ctx.quad.m_phi},
        {"mu", {{"m_r", ctx.mu_quad.m_r}, {"m_theta", ctx.mu_quad.m_theta}, {"m_phi", ctx.mu_quad.m_phi}}},
    };
    bool pass = true;
    json checks = json::object();
    for (const auto &[name, fn] : registry()) {
        if (!opts.checks.empty() && std::find(opts.checks.begin(), opts.checks.end(), name) == opts.checks.end())
            continue;
        json r = fn(ctx);
        pass = pass && r["pass"].get<bool>();
        checks[name] = std::move(r);
    }
    report["checks"] = checks;
    report["pass"] = pass;
    return report;
}

} // namespace bpswf::cli
