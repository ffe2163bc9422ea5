// gz: command-line laboratory for dimensional Brunn-Minkowski concavity of
// log-concave measures: measure estimates, p-concavity gaps and profiles,
// lemma-level inequality checks, shape variations, and counterexample search.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "gz/acceptance.hpp"
#include "gz/spec_io.hpp"

namespace {

using gz::ordered_json;

struct Common {
    std::string measure = "gaussian";
    int dim = 2;
    std::string method = "auto";
    long long budget = 2'000'000;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, Common& c, bool with_measure = true) {
    if (with_measure)
        cmd->add_option("--measure", c.measure, "gaussian | diag:c1,..,cn | spec.json");
    cmd->add_option("--dim", c.dim, "ambient dimension");
    cmd->add_option("--method", c.method, "auto | mc | radial | closed_form");
    cmd->add_option("--budget", c.budget, "Monte Carlo sample budget")
        ->envname("GZ_DEFAULT_BUDGET");
    cmd->add_option("--seed", c.seed, "RNG seed");
    cmd->add_option("--stream", c.stream, "RNG stream id");
    cmd->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", c.out_path, "output path (default: stdout)");
}

gz::IntegrateOptions options_of(const Common& c) {
    gz::IntegrateOptions o;
    o.method = gz::method_from_string(c.method);
    o.budget = c.budget;
    o.rng = gz::RngSpec{c.seed, c.stream};
    return o;
}

ordered_json config_json(const Common& c, const ordered_json& extra) {
    ordered_json j{{"measure", c.measure}, {"dim", c.dim},       {"method", c.method},
                   {"budget", c.budget},   {"seed", c.seed},     {"stream", c.stream},
                   {"format", c.format}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    return j;
}

// Reports are byte-stable for fixed (argv, seed); timing goes to stderr.
void emit(const Common& c, const std::string& command, const ordered_json& config,
          const ordered_json& result, const std::string& csv) {
    std::string payload;
    if (c.format == "csv") {
        payload = csv;
    } else {
        ordered_json report{{"tool", "gz"},
                            {"version", gz::kVersion},
                            {"command", command},
                            {"config", config},
                            {"result", result}};
        payload = report.dump(2) + "\n";
    }
    if (c.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f) throw gz::input_error("cannot write " + c.out_path);
        f << payload;
    }
}

int exit_code_of(gz::Verdict v) {
    switch (v) {
        case gz::Verdict::Holds: return 0;
        case gz::Verdict::Violated: return 1;
        case gz::Verdict::Inconclusive: return 3;
    }
    return 0;
}

std::vector<double> parse_grid(const std::string& spec) {
    // "a:b:step" or comma list
    std::vector<double> g;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        auto colon2 = spec.find(':', colon + 1);
        if (colon2 == std::string::npos) throw gz::input_error("grid spec is a:b:step");
        double a = std::stod(spec.substr(0, colon));
        double b = std::stod(spec.substr(colon + 1, colon2 - colon - 1));
        double step = std::stod(spec.substr(colon2 + 1));
        if (!(step > 0.0)) throw gz::input_error("grid step must be positive");
        for (double t = a; t <= b + 1e-12; t += step) g.push_back(t);
        return g;
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        auto comma = spec.find(',', pos);
        g.push_back(std::stod(spec.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for Brunn-Minkowski type concavity of log-concave "
                 "measures"};
    app.require_subcommand(1);

    Common c;
    std::string body_k, body_l, body_spec, psi_spec = "const";
    double lambda = 0.5, p_exp = 0.25, p_cap = 4.0, tol = 1e-3, eps = 0.0, R = 1.0;
    std::string grid_spec, lambda_spec, cls = "origin", suite = "primary", t_grid_spec;
    int order = 1, restarts = 16, iters = 160, curve_m = 720;
    bool crn = false, search_pstar = false;

    auto* measure_cmd = app.add_subcommand("measure", "estimate mu(K)");
    add_common(measure_cmd, c);
    measure_cmd->add_option("--K", body_k, "body spec")->required();

    auto* gap_cmd = app.add_subcommand("gap", "p-concavity gap at (K, L, lambda, p)");
    add_common(gap_cmd, c);
    gap_cmd->add_option("--K", body_k)->required();
    gap_cmd->add_option("--L", body_l)->required();
    gap_cmd->add_option("--lambda", lambda);
    gap_cmd->add_option("--p", p_exp);
    gap_cmd->add_flag("--crn", crn, "common random numbers across the three measures");

    auto* profile_cmd = app.add_subcommand("profile", "largest p with a holding gap (bisection)");
    add_common(profile_cmd, c);
    profile_cmd->add_option("--K", body_k)->required();
    profile_cmd->add_option("--L", body_l)->required();
    profile_cmd->add_option("--p-cap", p_cap);
    profile_cmd->add_option("--tol", tol);
    profile_cmd->add_option("--lambda-grid", lambda_spec, "comma list or a:b:step");

    auto* lemmas_cmd = app.add_subcommand("lemmas", "run the lemma-level checks on one body");
    add_common(lemmas_cmd, c);
    lemmas_cmd->add_option("--body", body_spec)->required();
    lemmas_cmd->add_option("--eps", eps, "epsilon for the Jensen bound");

    auto* alpha_cmd = app.add_subcommand("alpha", "alpha(R) = int_0^R (t^4-3t^2) e^{-t^2/2} dt");
    add_common(alpha_cmd, c, false);
    alpha_cmd->add_option("--R", R);
    alpha_cmd->add_option("--grid", grid_spec, "a:b:step");

    auto* beta_cmd = app.add_subcommand("beta", "beta(R) for the 1-D Neumann profile");
    add_common(beta_cmd, c, false);
    beta_cmd->add_option("--R", R);
    beta_cmd->add_option("--grid", grid_spec, "a:b:step");

    auto* bochner_cmd = app.add_subcommand("bochner", "1-D boundary identity residual");
    add_common(bochner_cmd, c, false);
    bochner_cmd->add_option("--R", grid_spec, "comma list of radii")->required();

    auto* var_cmd = app.add_subcommand("variation", "first/second shape variation vs fd");
    add_common(var_cmd, c);
    var_cmd->add_option("--body", body_spec)->required();
    var_cmd->add_option("--psi", psi_spec, "const[:a] | cos:m[:a] | sin:m[:a] | file.json");
    var_cmd->add_option("--order", order)->check(CLI::IsMember({1, 2}));
    var_cmd->add_option("--M", curve_m, "curve resolution");

    auto* localc_cmd = app.add_subcommand("localc", "local concavity constant estimate");
    add_common(localc_cmd, c);
    localc_cmd->add_option("--body", body_spec)->required();
    localc_cmd->add_option("--psi", psi_spec);
    localc_cmd->add_option("--M", curve_m);

    auto* dilate_cmd = app.add_subcommand("dilate", "concavity of t -> mu(tK)^{1/n}");
    add_common(dilate_cmd, c);
    dilate_cmd->add_option("--body", body_spec)->required();
    dilate_cmd->add_option("--t-grid", t_grid_spec, "a:b:step");

    auto* search_cmd = app.add_subcommand("search", "derivative-free search for low gaps");
    add_common(search_cmd, c);
    search_cmd->add_option("--class", cls, "sym | origin");
    search_cmd->add_option("--p", p_exp);
    search_cmd->add_option("--restarts", restarts);
    search_cmd->add_option("--iters", iters);
    search_cmd->add_option("--lambda-grid", lambda_spec);
    search_cmd->add_flag("--profile", search_pstar, "minimize p_star instead of the gap");

    auto* acc_cmd = app.add_subcommand("acceptance", "run the acceptance suite");
    acc_cmd->add_option("--suite", suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        gz::IntegrateOptions opts = options_of(c);
        auto lambdas =
            lambda_spec.empty() ? gz::default_lambda_grid() : parse_grid(lambda_spec);

        if (measure_cmd->parsed()) {
            gz::Potential p = gz::parse_measure_spec(c.measure, c.dim);
            gz::ConvexBody k = gz::parse_body_spec(body_k, c.dim);
            gz::Estimate e = gz::mu_of_body(p, k, opts);
            std::string csv = "value,stderr,budget,method\n" + gz::format_double(e.value) + "," +
                              gz::format_double(e.stderr_) + "," + std::to_string(e.budget) +
                              "," + gz::to_string(e.method) + "\n";
            emit(c, "measure", config_json(c, {{"K", body_k}}), gz::to_json(e), csv);
        } else if (gap_cmd->parsed()) {
            gz::Potential p = gz::parse_measure_spec(c.measure, c.dim);
            gz::GapReport r = gz::gap(p, gz::parse_body_spec(body_k, c.dim),
                                      gz::parse_body_spec(body_l, c.dim), lambda, p_exp, opts,
                                      crn);
            std::string csv = "p,lambda,gap,stderr,verdict\n" + gz::format_double(r.p) + "," +
                              gz::format_double(r.lambda) + "," +
                              gz::format_double(r.gap.value) + "," +
                              gz::format_double(r.gap.stderr_) + "," + gz::to_string(r.verdict) +
                              "\n";
            emit(c, "gap",
                 config_json(c, {{"K", body_k}, {"L", body_l}, {"lambda", lambda}, {"p", p_exp}}),
                 gz::to_json(r), csv);
            code = exit_code_of(r.verdict);
        } else if (profile_cmd->parsed()) {
            gz::Potential p = gz::parse_measure_spec(c.measure, c.dim);
            gz::ProfileReport r =
                gz::profile_p_star(p, gz::parse_body_spec(body_k, c.dim),
                                   gz::parse_body_spec(body_l, c.dim), lambdas, p_cap, tol, opts);
            std::string csv = "p_star,p_ok,p_bad,tightest_lambda,flagged\n" +
                              gz::format_double(r.p_star) + "," + gz::format_double(r.p_ok) +
                              "," + gz::format_double(r.p_bad) + "," +
                              gz::format_double(r.tightest_lambda) + "," +
                              (r.inconclusive_boundary ? "1" : "0") + "\n";
            emit(c, "profile",
                 config_json(c, {{"K", body_k}, {"L", body_l}, {"p_cap", p_cap}, {"tol", tol}}),
                 gz::to_json(r), csv);
            if (r.inconclusive_boundary) code = 3;
        } else if (lemmas_cmd->parsed()) {
            gz::Potential p = gz::parse_measure_spec(c.measure, c.dim);
            gz::ConvexBody k = gz::parse_body_spec(body_spec, c.dim);
            ordered_json results = ordered_json::array();
            std::string csv = "check,margin,stderr,verdict\n";
            gz::Verdict overall = gz::Verdict::Holds;
            bool any_skipped = false;
            auto add_check = [&](const gz::CheckReport& r) {
                results.push_back(gz::to_json(r));
                csv += r.name + "," + gz::format_double(r.value) + "," +
                       gz::format_double(r.stderr_) + "," +
                       (r.precondition_ok ? gz::to_string(r.verdict) : "skipped") + "\n";
                if (r.precondition_ok)
                    overall = gz::worst(overall, r.verdict);
                else
                    any_skipped = true;
            };
            if (k.contains_origin() && p.kind == gz::PotentialKind::Gaussian)
                add_check(gz::check_star_moment(k, opts));
            add_check(gz::check_grad_laplace(p, k, opts));
            if (p.kind == gz::PotentialKind::Gaussian && k.is_symmetric()) {
                add_check(gz::check_cfm(k, opts));
                add_check(gz::check_dilate_local(k, opts));
                if (k.dim() == 2) add_check(gz::check_est2(k, opts));
            }
            if (eps == 0.0 || (p.is_even && k.is_symmetric())) {
                gz::JensenReport j = gz::jensen_lower_bound(p, k, eps, opts);
                results.push_back(gz::to_json(j));
                csv += "jensen," + gz::format_double(j.lhs.value - j.bound) + "," +
                       gz::format_double(j.lhs.stderr_) + "," + gz::to_string(j.verdict) + "\n";
                overall = gz::worst(overall, j.verdict);
            }
            emit(c, "lemmas", config_json(c, {{"body", body_spec}, {"eps", eps}}),
                 ordered_json{{"checks", results}}, csv);
            code = exit_code_of(overall);
            if (code == 0 && any_skipped) code = 0;  // skipped checks do not fail the run
        } else if (alpha_cmd->parsed() || beta_cmd->parsed()) {
            bool is_alpha = alpha_cmd->parsed();
            std::vector<double> rs = grid_spec.empty() ? std::vector<double>{R}
                                                       : parse_grid(grid_spec);
            ordered_json rows = ordered_json::array();
            std::string csv = "R,value\n";
            for (double r : rs) {
                double v = is_alpha ? gz::alpha(r) : gz::beta(r);
                rows.push_back(ordered_json{{"R", r}, {"value", v}});
                csv += gz::format_double(r) + "," + gz::format_double(v) + "\n";
            }
            emit(c, is_alpha ? "alpha" : "beta", config_json(c, {{"grid", grid_spec}}),
                 ordered_json{{"rows", rows}}, csv);
        } else if (bochner_cmd->parsed()) {
            ordered_json rows = ordered_json::array();
            std::string csv = "R,lhs,bulk,boundary,residual\n";
            for (double r : parse_grid(grid_spec)) {
                gz::BochnerReport b = gz::bochner_residual_1d(r);
                rows.push_back(ordered_json{{"R", b.R},
                                            {"lhs", b.lhs},
                                            {"bulk", b.bulk},
                                            {"boundary", b.boundary},
                                            {"residual", b.residual}});
                csv += gz::format_double(b.R) + "," + gz::format_double(b.lhs) + "," +
                       gz::format_double(b.bulk) + "," + gz::format_double(b.boundary) + "," +
                       gz::format_double(b.residual) + "\n";
            }
            emit(c, "bochner", config_json(c, {{"R", grid_spec}}), ordered_json{{"rows", rows}},
                 csv);
        } else if (var_cmd->parsed()) {
            gz::Potential p = gz::parse_measure_spec(c.measure, c.dim);
            gz::ConvexBody k = gz::parse_body_spec(body_spec, c.dim);
            gz::BoundaryCurve2D curve = gz::boundary_curve_2d(k, curve_m);
            std::vector<double> psi = gz::parse_psi_spec(psi_spec, curve.size());
            gz::VariationReport r = order == 1 ? gz::first_variation_2d(p, curve, psi)
                                               : gz::second_variation_2d(p, curve, psi);
            std::string csv = "order,formula,fd,fd_half,step,rel_err\n" + std::to_string(order) +
                              "," + gz::format_double(r.formula) + "," + gz::format_double(r.fd) +
                              "," + gz::format_double(r.fd_half) + "," +
                              gz::format_double(r.step) + "," + gz::format_double(r.rel_err) +
                              "\n";
            emit(c, "variation",
                 config_json(c, {{"body", body_spec}, {"psi", psi_spec}, {"order", order}}),
                 gz::to_json(r), csv);
        } else if (localc_cmd->parsed()) {
            gz::Potential p = gz::parse_measure_spec(c.measure, c.dim);
            gz::ConvexBody k = gz::parse_body_spec(body_spec, c.dim);
            gz::BoundaryCurve2D curve = gz::boundary_curve_2d(k, curve_m);
            std::vector<double> psi = gz::parse_psi_spec(psi_spec, curve.size());
            gz::LocalCReport r = gz::local_c_estimate(p, curve, psi);
            std::string csv = "c,mu,dmu,d2mu\n" + gz::format_double(r.c) + "," +
                              gz::format_double(r.mu) + "," + gz::format_double(r.dmu) + "," +
                              gz::format_double(r.d2mu) + "\n";
            emit(c, "localc", config_json(c, {{"body", body_spec}, {"psi", psi_spec}}),
                 gz::to_json(r), csv);
            if (r.status == gz::LocalCStatus::LogConcavityViolated) code = 1;
        } else if (dilate_cmd->parsed()) {
            gz::Potential p = gz::parse_measure_spec(c.measure, c.dim);
            gz::ConvexBody k = gz::parse_body_spec(body_spec, c.dim);
            std::vector<double> ts =
                t_grid_spec.empty() ? parse_grid("0.2:3:0.1") : parse_grid(t_grid_spec);
            gz::DilateConcavityReport r = gz::dilate_concavity(p, k, ts, opts);
            std::string csv = "t,g\n";
            for (std::size_t i = 0; i < r.t_grid.size(); ++i)
                csv += gz::format_double(r.t_grid[i]) + "," + gz::format_double(r.g[i]) + "\n";
            emit(c, "dilate", config_json(c, {{"body", body_spec}}), gz::to_json(r), csv);
            code = r.precondition_ok ? exit_code_of(r.verdict) : 2;
        } else if (search_cmd->parsed()) {
            gz::Potential p = gz::parse_measure_spec(c.measure, c.dim);
            gz::SearchSpace space;
            space.cls = gz::body_class_from_string(cls);
            space.dim = c.dim;
            gz::OptimConfig cfg;
            cfg.restarts = restarts;
            cfg.max_iters = iters;
            gz::SearchResult r =
                search_pstar ? gz::search_profile(p, space, lambdas, p_cap, tol, cfg, opts)
                             : gz::search_min_gap(p, space, p_exp, lambdas, cfg, opts);
            std::string csv = "restart,eval,objective,best\n";
            for (const auto& t : r.trajectory)
                csv += std::to_string(t.restart) + "," + std::to_string(t.eval) + "," +
                       gz::format_double(t.objective) + "," + gz::format_double(t.best_so_far) +
                       "\n";
            emit(c, "search",
                 config_json(c, {{"class", cls}, {"p", p_exp}, {"restarts", restarts}}),
                 gz::to_json(r), csv);
            code = r.certified_violation ? 1 : 0;
        } else if (acc_cmd->parsed()) {
            int failures = gz::run_acceptance_suite(std::cout, suite);
            code = failures == 0 ? 0 : 1;
        }
    } catch (const gz::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const gz::precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "gz: done in " << ms << " ms\n";
    return code;
}
