#include <cmath>

#include "doctest.h"
#include "gz/search.hpp"

using namespace gz;

namespace {

IntegrateOptions search_opts(std::uint64_t seed = 11) {
    IntegrateOptions o;
    o.method = Method::Auto;  // radial for these origin-containing planar bodies
    o.budget = 50000;
    o.rng = RngSpec{seed, 0};
    return o;
}

SearchSpace small_space(BodyClass cls, int dim = 2) {
    SearchSpace s;
    s.cls = cls;
    s.dim = dim;
    s.grid_size = dim == 2 ? 180 : 0;
    return s;
}

}  // namespace

TEST_CASE("decoder totality: every in-box vector is a valid pair (property)") {
    for (BodyClass cls : {BodyClass::Sym, BodyClass::Origin}) {
        SearchSpace space = small_space(cls);
        auto bounds = space.bounds();
        UniformSequence u(RngSpec{404, static_cast<std::uint64_t>(cls)});
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<double> x(space.total_params());
            for (std::size_t i = 0; i < x.size(); ++i) {
                // corners included: extremes exercise the clamp
                double t = trial < 5 ? (trial % 2 ? 1.0 : 0.0) : u.next();
                x[i] = bounds[i].first + t * (bounds[i].second - bounds[i].first);
            }
            auto [k, l] = space.decode(x);
            CHECK(k.contains_origin());
            CHECK(l.contains_origin());
            if (cls == BodyClass::Sym) {
                CHECK(k.is_symmetric());
                CHECK(l.is_symmetric());
            }
        }
    }
}

TEST_CASE("reruns with the same seed reproduce the trajectory exactly") {
    Potential g = make_gaussian(2);
    SearchSpace space = small_space(BodyClass::Sym);
    OptimConfig cfg;
    cfg.restarts = 2;
    cfg.max_iters = 12;
    std::vector<double> lambdas = {0.5};
    SearchResult a = search_min_gap(g, space, 0.25, lambdas, cfg, search_opts());
    SearchResult b = search_min_gap(g, space, 0.25, lambdas, cfg, search_opts());
    REQUIRE(a.trajectory.size() == b.trajectory.size());
    for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
        CHECK(a.trajectory[i].objective == b.trajectory[i].objective);
        CHECK(a.trajectory[i].restart == b.trajectory[i].restart);
    }
    CHECK(a.best_objective == b.best_objective);
}

TEST_CASE("symmetric class finds no violation at p = 1/(2n)") {
    Potential g = make_gaussian(2);
    SearchSpace space = small_space(BodyClass::Sym);
    OptimConfig cfg;
    cfg.restarts = 3;
    cfg.max_iters = 40;
    SearchResult r = search_min_gap(g, space, 0.25, {0.3, 0.5, 0.7}, cfg, search_opts(21));
    CHECK_FALSE(r.certified_violation);
    CHECK(r.best_objective >= -1e-8);
    CHECK(r.verification.verdict == Verdict::Holds);
    CHECK(r.evaluations > 0);
}

TEST_CASE("profile search in dimension 1 approaches the conjectured exponent") {
    // symmetric intervals are dilates of each other; the infimum of p_star
    // over the class is approached by small intervals and stays >= 1
    Potential g = make_gaussian(1);
    SearchSpace space = small_space(BodyClass::Sym, 1);
    OptimConfig cfg;
    cfg.restarts = 3;
    cfg.max_iters = 25;
    SearchResult r =
        search_profile(g, space, {0.25, 0.5, 0.75}, 4.0, 1e-3, cfg, search_opts(31));
    CHECK(r.best_p_star >= 1.0 - 5e-3);
    CHECK(r.best_p_star < 2.5);  // the minimizer pushes well below the cap
}

TEST_CASE("origin-class profile stays above 1/(2n) in the plane") {
    Potential g = make_gaussian(2);
    SearchSpace space = small_space(BodyClass::Origin);
    OptimConfig cfg;
    cfg.restarts = 2;
    cfg.max_iters = 15;
    SearchResult r = search_profile(g, space, {0.5}, 2.0, 5e-3, cfg, search_opts(41));
    CHECK(r.best_p_star >= 0.25 - 5e-3);
}
