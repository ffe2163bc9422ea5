#include "gz/spec_io.hpp"

#include <cstdio>
#include <fstream>

namespace gz {

namespace {

std::vector<double> split_numbers(const std::string& s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw input_error("could not parse number '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

bool looks_like_path(const std::string& s) {
    return s.find(".json") != std::string::npos || s.find('/') != std::string::npos;
}

ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open spec file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

namespace {

// A "symmetric": true claim in a spec file must survive the constructor's
// own detection; claiming less than the body has is fine.
ConvexBody check_symmetry_claim(ConvexBody body, const ordered_json& j) {
    if (j.contains("symmetric") && j.at("symmetric").get<bool>() && !body.is_symmetric())
        throw input_error("body spec: declared symmetric but support values are not");
    return body;
}

}  // namespace

ConvexBody body_from_json(const ordered_json& j) {
    try {
        if (!j.contains("type")) throw input_error("body spec: missing 'type'");
        std::string type = j.at("type").get<std::string>();
        if (type == "ball") {
            int dim = j.at("dim").get<int>();
            return ConvexBody::ball(dim, j.at("r").get<double>());
        }
        if (type == "box") return ConvexBody::box(j.at("w").get<std::vector<double>>());
        if (type == "ellipsoid")
            return ConvexBody::ellipsoid(j.at("axes").get<std::vector<double>>());
        if (type == "hpolytope") {
            auto normals_in = j.at("normals").get<std::vector<std::vector<double>>>();
            auto offsets = j.at("offsets").get<std::vector<double>>();
            std::vector<Vec> normals;
            for (const auto& row : normals_in) normals.push_back(Vec::from(row));
            return check_symmetry_claim(
                ConvexBody::hpolytope(std::move(normals), std::move(offsets)), j);
        }
        if (type == "supportgrid") {
            int dim = j.at("dim").get<int>();
            auto values = j.at("values").get<std::vector<double>>();
            std::uint64_t seed = j.value("grid_seed", 0);
            auto grid = DirectionGrid::standard(dim, static_cast<int>(values.size()), seed);
            return check_symmetry_claim(ConvexBody::support_grid(grid, std::move(values)), j);
        }
        throw input_error("body spec: unknown type '" + type + "'");
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("body spec: ") + e.what());
    }
}

ConvexBody load_body_file(const std::string& path) { return body_from_json(read_json_file(path)); }

ConvexBody parse_body_spec(const std::string& spec, int dim) {
    if (looks_like_path(spec)) return load_body_file(spec);
    std::size_t colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "ball") {
        if (args.empty()) throw input_error("ball:<r> needs a radius");
        return ConvexBody::ball(dim, split_numbers(args)[0]);
    }
    if (name == "box") return ConvexBody::box(split_numbers(args));
    if (name == "ellipse" || name == "ellipsoid")
        return ConvexBody::ellipsoid(split_numbers(args));
    if (name == "square") return make_square(args.empty() ? 1.0 : split_numbers(args)[0]);
    if (name == "smoothed-square")
        return make_smoothed_square(args.empty() ? 1e-2 : split_numbers(args)[0]);
    if (name == "interval") {
        if (args.empty()) throw input_error("interval:<a> needs a half-width");
        return ConvexBody::box({split_numbers(args)[0]});
    }
    throw input_error("unknown body spec '" + spec + "'");
}

Potential measure_from_json(const ordered_json& j) {
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "gaussian") return make_gaussian(j.at("dim").get<int>());
        if (kind == "diag_quadratic")
            return make_diag_quadratic(j.at("c").get<std::vector<double>>());
        throw input_error("measure spec: unknown kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("measure spec: ") + e.what());
    }
}

Potential load_measure_file(const std::string& path) {
    return measure_from_json(read_json_file(path));
}

Potential parse_measure_spec(const std::string& spec, int dim) {
    if (looks_like_path(spec)) return load_measure_file(spec);
    if (spec == "gaussian") return make_gaussian(dim);
    std::size_t colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    if (name == "diag" || name == "diag_quadratic") {
        if (colon == std::string::npos) throw input_error("diag:<c1,...,cn> needs coefficients");
        return make_diag_quadratic(split_numbers(spec.substr(colon + 1)));
    }
    throw input_error("unknown measure spec '" + spec + "'");
}

std::vector<double> parse_psi_spec(const std::string& spec, int M) {
    if (looks_like_path(spec)) {
        ordered_json j = read_json_file(spec);
        auto values = j.at("values").get<std::vector<double>>();
        if (static_cast<int>(values.size()) != M)
            throw input_error("psi values must match the curve grid size");
        return values;
    }
    std::size_t colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<double> args =
        colon == std::string::npos ? std::vector<double>{} : split_numbers(spec.substr(colon + 1));
    std::vector<double> psi(M, 0.0);
    if (name == "const") {
        double a = args.empty() ? 1.0 : args[0];
        std::fill(psi.begin(), psi.end(), a);
        return psi;
    }
    if (name == "cos" || name == "sin") {
        if (args.empty()) throw input_error(name + ":<m>[:amp] needs the order");
        int m = static_cast<int>(args[0]);
        double a = args.size() > 1 ? args[1] : 1.0;
        for (int j = 0; j < M; ++j) {
            double t = kTwoPi * j / M;
            psi[j] = a * (name == "cos" ? std::cos(m * t) : std::sin(m * t));
        }
        return psi;
    }
    throw input_error("unknown psi spec '" + spec + "'");
}

ordered_json to_json(const Estimate& e) {
    return ordered_json{{"value", e.value},
                        {"stderr", e.stderr_},
                        {"budget", e.budget},
                        {"method", to_string(e.method)}};
}

ordered_json to_json(const GapReport& r) {
    return ordered_json{{"p", r.p},          {"lambda", r.lambda},
                        {"gap", to_json(r.gap)}, {"mu_K", to_json(r.mu_k)},
                        {"mu_L", to_json(r.mu_l)}, {"mu_M", to_json(r.mu_m)},
                        {"verdict", to_string(r.verdict)},
                        {"seed", r.rng.seed},    {"stream", r.rng.stream}};
}

ordered_json to_json(const ProfileReport& r) {
    ordered_json reports = ordered_json::array();
    for (const auto& g : r.reports_at_p_star) reports.push_back(to_json(g));
    return ordered_json{{"lambda_grid", r.lambda_grid},
                        {"tol", r.tol},
                        {"p_star", r.p_star},
                        {"p_ok", r.p_ok},
                        {"p_bad", r.p_bad},
                        {"inconclusive_boundary", r.inconclusive_boundary},
                        {"tightest_lambda", r.tightest_lambda},
                        {"reports_at_p_star", reports}};
}

ordered_json to_json(const CheckReport& r) {
    ordered_json details = ordered_json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    return ordered_json{{"check", r.name},
                        {"margin", r.value},
                        {"stderr", r.stderr_},
                        {"verdict", r.precondition_ok ? to_string(r.verdict) : "skipped"},
                        {"precondition_ok", r.precondition_ok},
                        {"note", r.note},
                        {"details", details}};
}

ordered_json to_json(const JensenReport& r) {
    return ordered_json{{"check", "jensen_lower_bound"},
                        {"epsilon", r.epsilon},
                        {"lhs", to_json(r.lhs)},
                        {"bound", r.bound},
                        {"c_empirical", r.c_empirical},
                        {"c_formula", r.c_formula},
                        {"verdict", to_string(r.verdict)}};
}

ordered_json to_json(const DilateConcavityReport& r) {
    return ordered_json{{"check", "dilate_concavity"},
                        {"t_grid", r.t_grid},
                        {"g", r.g},
                        {"g_stderr", r.g_stderr},
                        {"second_diff", r.second_diff},
                        {"verdict", r.precondition_ok ? to_string(r.verdict) : "skipped"},
                        {"precondition_ok", r.precondition_ok},
                        {"note", r.note}};
}

ordered_json to_json(const VariationReport& r) {
    return ordered_json{{"order", r.order},   {"formula", r.formula},
                        {"fd", r.fd},         {"fd_half", r.fd_half},
                        {"step", r.step},     {"rel_err", r.rel_err}};
}

ordered_json to_json(const LocalCReport& r) {
    std::string status = r.status == LocalCStatus::Ok
                             ? "ok"
                             : (r.status == LocalCStatus::InfiniteCap ? "capped"
                                                                      : "logconcavity_violated");
    return ordered_json{{"c", r.c},       {"mu", r.mu},   {"dmu", r.dmu},
                        {"d2mu", r.d2mu}, {"status", status}};
}

ordered_json to_json(const SearchResult& r) {
    return ordered_json{{"best_objective", r.best_objective},
                        {"best_params", r.best_params},
                        {"evaluations", r.evaluations},
                        {"seed", r.rng.seed},
                        {"p", r.p},
                        {"best_lambda", r.best_lambda},
                        {"certified_violation", r.certified_violation},
                        {"verification", to_json(r.verification)},
                        {"best_p_star", r.best_p_star}};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace gz
