#include "gz/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RestartOutcome {
    double best = kInf;
    std::vector<double> best_x;
    long evals = 0;
    std::vector<TrajectoryPoint> trajectory;
};

// Bounded Nelder-Mead; candidates are clamped into the box before
// evaluation, matching what the decoder will see.
template <typename F>
RestartOutcome nelder_mead(F&& f, std::vector<double> x0,
                           const std::vector<std::pair<double, double>>& bounds, int max_iters,
                           int restart_index) {
    const int n = static_cast<int>(x0.size());
    RestartOutcome out;
    auto clamp = [&](std::vector<double>& x) {
        for (int i = 0; i < n; ++i) x[i] = std::clamp(x[i], bounds[i].first, bounds[i].second);
    };
    auto eval = [&](std::vector<double> x) {
        clamp(x);
        double v = f(x, out.evals);
        if (v < out.best) {
            out.best = v;
            out.best_x = x;
        }
        out.trajectory.push_back(TrajectoryPoint{restart_index, out.evals, v, out.best});
        ++out.evals;
        return v;
    };

    std::vector<std::vector<double>> simplex;
    std::vector<double> fx;
    clamp(x0);
    simplex.push_back(x0);
    fx.push_back(eval(x0));
    for (int i = 0; i < n; ++i) {
        std::vector<double> xi = x0;
        double step = 0.2 * (bounds[i].second - bounds[i].first);
        xi[i] += (xi[i] + step <= bounds[i].second) ? step : -step;
        simplex.push_back(xi);
        fx.push_back(eval(xi));
    }

    for (int iter = 0; iter < max_iters; ++iter) {
        std::vector<int> order(simplex.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fx[a] < fx[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (int idx : order) {
            s2.push_back(simplex[idx]);
            f2.push_back(fx[idx]);
        }
        simplex = std::move(s2);
        fx = std::move(f2);

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int v = 0; v < n; ++v) centroid[i] += simplex[v][i];
            centroid[i] /= n;
        }
        auto blend = [&](double t) {
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i) x[i] = centroid[i] + t * (centroid[i] - simplex[n][i]);
            return x;
        };
        std::vector<double> xr = blend(1.0);
        double fr = eval(xr);
        if (fr < fx[0]) {
            std::vector<double> xe = blend(2.0);
            double fe = eval(xe);
            if (fe < fr) {
                simplex[n] = xe;
                fx[n] = fe;
            } else {
                simplex[n] = xr;
                fx[n] = fr;
            }
        } else if (fr < fx[n - 1]) {
            simplex[n] = xr;
            fx[n] = fr;
        } else {
            std::vector<double> xc = blend(fr < fx[n] ? 0.5 : -0.5);
            double fc = eval(xc);
            if (fc < std::min(fr, fx[n])) {
                simplex[n] = xc;
                fx[n] = fc;
            } else {
                for (int v = 1; v <= n; ++v) {
                    for (int i = 0; i < n; ++i)
                        simplex[v][i] = simplex[0][i] + 0.5 * (simplex[v][i] - simplex[0][i]);
                    fx[v] = eval(simplex[v]);
                }
            }
        }
    }
    return out;
}

}  // namespace

BodyClass body_class_from_string(const std::string& s) {
    if (s == "sym") return BodyClass::Sym;
    if (s == "origin") return BodyClass::Origin;
    throw input_error("unknown body class: " + s);
}

std::string to_string(BodyClass c) { return c == BodyClass::Sym ? "sym" : "origin"; }

int SearchSpace::params_per_body() const {
    if (dim == 1) return cls == BodyClass::Sym ? 1 : 2;
    // a0 plus (cos, sin) per order: even orders 2..8 or all orders 1..8
    return 1 + 2 * (cls == BodyClass::Sym ? 4 : 8);
}

std::vector<std::pair<double, double>> SearchSpace::bounds() const {
    std::vector<std::pair<double, double>> b;
    const int per = params_per_body();
    for (int body = 0; body < 2; ++body) {
        b.emplace_back(a0_lo, a0_hi);
        for (int i = 1; i < per; ++i) b.emplace_back(-amp, amp);
    }
    return b;
}

ConvexBody SearchSpace::decode_body(const std::vector<double>& params, int offset) const {
    if (dim == 1) {
        auto grid = DirectionGrid::standard(1);
        double hp = std::max(h_min, params[offset]);
        double hm = cls == BodyClass::Sym ? hp : std::max(h_min, params[offset + 1]);
        return ConvexBody::support_grid(grid, {hp, hm});
    }
    std::vector<Harmonic> terms;
    int i = offset + 1;
    for (int m = (cls == BodyClass::Sym ? 2 : 1); m <= 8; m += (cls == BodyClass::Sym ? 2 : 1)) {
        terms.push_back(Harmonic{m, params[i], params[i + 1]});
        i += 2;
    }
    return harmonic_body_2d(params[offset], terms, grid_size, h_min, rho_floor);
}

std::pair<ConvexBody, ConvexBody> SearchSpace::decode(const std::vector<double>& params) const {
    if (static_cast<int>(params.size()) != total_params())
        throw input_error("SearchSpace::decode: wrong parameter count");
    if (dim != 1 && dim != 2) throw input_error("SearchSpace: dim must be 1 or 2");
    return {decode_body(params, 0), decode_body(params, params_per_body())};
}

namespace {

template <typename Objective>
SearchResult run_search(const SearchSpace& space, const OptimConfig& cfg,
                        const IntegrateOptions& opts, Objective&& objective) {
    auto bounds = space.bounds();
    const int n = space.total_params();
    std::vector<RestartOutcome> outcomes(cfg.restarts);

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < cfg.restarts; ++r) {
        UniformSequence init(derive_stream(opts.rng, 0x9E57A7ull + r));
        std::vector<double> x0(n);
        for (int i = 0; i < n; ++i) x0[i] = init.next_in(bounds[i].first, bounds[i].second);
        auto f = [&](const std::vector<double>& x, long eval_index) {
            std::uint64_t tag = (static_cast<std::uint64_t>(r) << 32) |
                                static_cast<std::uint64_t>(eval_index);
            return objective(x, tag);
        };
        outcomes[r] = nelder_mead(f, std::move(x0), bounds, cfg.max_iters, r);
    }

    SearchResult res;
    res.rng = opts.rng;
    res.best_objective = kInf;
    for (int r = 0; r < cfg.restarts; ++r) {
        res.evaluations += outcomes[r].evals;
        for (const auto& t : outcomes[r].trajectory) res.trajectory.push_back(t);
        if (outcomes[r].best < res.best_objective) {
            res.best_objective = outcomes[r].best;
            res.best_params = outcomes[r].best_x;
        }
    }
    if (!std::isfinite(res.best_objective))
        throw precondition_error("search: all candidates failed to evaluate (degenerate)");
    return res;
}

}  // namespace

SearchResult search_min_gap(const Potential& p, const SearchSpace& space, double p_exp,
                            const std::vector<double>& lambda_grid, const OptimConfig& cfg,
                            const IntegrateOptions& opts) {
    if (!(p_exp > 0.0)) throw input_error("search_min_gap: p must be positive");
    if (p.dim != space.dim) throw input_error("search_min_gap: dimension mismatch");
    if (lambda_grid.empty()) throw input_error("search_min_gap: empty lambda grid");

    auto objective = [&](const std::vector<double>& x, std::uint64_t tag) {
        auto [k, l] = space.decode(x);
        IntegrateOptions o = opts;
        o.rng = derive_stream(opts.rng, tag);
        double worst_gap = kInf;
        try {
            for (double lam : lambda_grid)
                worst_gap = std::min(worst_gap, gap(p, k, l, lam, p_exp, o).gap.value);
        } catch (const precondition_error&) {
            return kInf;
        }
        return worst_gap;
    };
    SearchResult res = run_search(space, cfg, opts, objective);
    res.p = p_exp;

    // Re-examine the winner at 10x budget on its tightest lambda.
    auto [k, l] = space.decode(res.best_params);
    IntegrateOptions verify = opts;
    verify.budget = opts.budget * 10;
    verify.quad_tol = opts.quad_tol * 0.1;
    verify.rng = derive_stream(opts.rng, 0xCE27157ull);
    double worst_val = kInf;
    for (double lam : lambda_grid) {
        GapReport g = gap(p, k, l, lam, p_exp, verify);
        if (g.gap.value < worst_val) {
            worst_val = g.gap.value;
            res.best_lambda = lam;
            res.verification = g;
        }
    }
    res.certified_violation = res.verification.verdict == Verdict::Violated;
    return res;
}

SearchResult search_profile(const Potential& p, const SearchSpace& space,
                            const std::vector<double>& lambda_grid, double p_cap, double tol,
                            const OptimConfig& cfg, const IntegrateOptions& opts) {
    if (p.dim != space.dim) throw input_error("search_profile: dimension mismatch");

    auto objective = [&](const std::vector<double>& x, std::uint64_t tag) {
        auto [k, l] = space.decode(x);
        IntegrateOptions o = opts;
        o.rng = derive_stream(opts.rng, tag);
        try {
            return profile_p_star(p, k, l, lambda_grid, p_cap, tol, o).p_star;
        } catch (const precondition_error&) {
            return kInf;
        }
    };
    SearchResult res = run_search(space, cfg, opts, objective);

    auto [k, l] = space.decode(res.best_params);
    IntegrateOptions verify = opts;
    verify.budget = opts.budget * 10;
    verify.quad_tol = opts.quad_tol * 0.1;
    verify.rng = derive_stream(opts.rng, 0xCE27157ull);
    res.best_p_star = profile_p_star(p, k, l, lambda_grid, p_cap, tol, verify).p_star;
    return res;
}

}  // namespace gz
