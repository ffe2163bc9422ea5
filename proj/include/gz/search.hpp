#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gz/inequalities.hpp"
#include "gz/random_bodies.hpp"

namespace gz {

/// Body classes closed under Minkowski convex combination.
enum class BodyClass { Sym, Origin };

BodyClass body_class_from_string(const std::string& s);
std::string to_string(BodyClass c);

/// Parameter space of (K, L) pairs: harmonic support-grid coefficients per
/// body, even orders only for the symmetric class, all orders plus a
/// positivity floor for the origin class. Decoding clamps, so every in-box
/// parameter vector yields a valid pair.
struct SearchSpace {
    BodyClass cls = BodyClass::Sym;
    int dim = 2;
    double h_min = 0.05;
    double rho_floor = 1e-4;
    double a0_lo = 0.4;
    double a0_hi = 2.0;
    double amp = 0.6;
    int grid_size = 0;  // 0 -> default for the dimension

    int params_per_body() const;
    int total_params() const { return 2 * params_per_body(); }
    std::vector<std::pair<double, double>> bounds() const;
    ConvexBody decode_body(const std::vector<double>& params, int offset) const;
    std::pair<ConvexBody, ConvexBody> decode(const std::vector<double>& params) const;
};

struct OptimConfig {
    int restarts = 16;
    int max_iters = 160;  // Nelder-Mead iterations per restart
};

struct TrajectoryPoint {
    int restart = 0;
    long eval = 0;
    double objective = 0.0;
    double best_so_far = 0.0;
};

struct SearchResult {
    std::vector<double> best_params;
    double best_objective = 0.0;
    long evaluations = 0;
    RngSpec rng;
    double p = 0.0;
    double best_lambda = 0.0;
    /// min-gap search: the best candidate re-examined at 10x budget.
    GapReport verification;
    bool certified_violation = false;
    /// profile search: smallest empirical p_star, re-evaluated at 10x budget.
    double best_p_star = 0.0;
    std::vector<TrajectoryPoint> trajectory;
};

/// Derivative-free descent (Nelder-Mead, seeded random restarts) on the
/// min-over-lambda gap at fixed p. Each candidate is evaluated under a
/// stream derived from (seed, candidate index), so the optimizer sees a
/// deterministic landscape; a negative best is only certified after
/// re-verification at 10x budget flags it Violated.
SearchResult search_min_gap(const Potential& p, const SearchSpace& space, double p_exp,
                            const std::vector<double>& lambda_grid, const OptimConfig& cfg,
                            const IntegrateOptions& opts);

/// Same machinery minimizing the empirical p_star of the pair.
SearchResult search_profile(const Potential& p, const SearchSpace& space,
                            const std::vector<double>& lambda_grid, double p_cap, double tol,
                            const OptimConfig& cfg, const IntegrateOptions& opts);

}  // namespace gz
