#include "gz/inequalities.hpp"

#include <algorithm>
#include <cmath>

namespace gz {

namespace {

// Stream tags for the independent estimates of one check.
enum : std::uint64_t { kTagK = 11, kTagL = 12, kTagM = 13, kTagMass = 21, kTagMom2 = 22,
                       kTagMom4 = 23, kTagBary = 24, kTagF = 25 };

IntegrateOptions with_stream(const IntegrateOptions& opts, std::uint64_t tag) {
    IntegrateOptions o = opts;
    o.rng = derive_stream(opts.rng, tag);
    return o;
}

// Weighted barycenter condition: every component of int_K grad V dmu (or of
// int_K x dgamma) must vanish within 3 stderr. Automatic for even measures
// on symmetric bodies.
bool barycenter_ok(const Potential& p, const ConvexBody& k, const IntegrateOptions& opts,
                   bool use_grad, std::string& note) {
    if (p.is_even && k.is_symmetric()) return true;
    for (int i = 0; i < p.dim; ++i) {
        auto f = [&](const Vec& x) { return use_grad ? p.gradV(x)[i] : x[i]; };
        Estimate e = moment(p, k, f, with_stream(opts, kTagBary + 100 * i));
        double sigma = std::max(e.stderr_, kDetFloor);
        if (std::abs(e.value) > 3.0 * sigma) {
            note = "barycenter component " + std::to_string(i) + " = " +
                   std::to_string(e.value) + " exceeds 3 stderr";
            return false;
        }
    }
    return true;
}

double pow_stderr(double mu, double s, double p) {
    // stderr of mu^p by the delta method
    return std::abs(p) * std::pow(mu, p - 1.0) * s;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict verdict_of(double value, double stderr_) {
    double sigma = std::max(stderr_, kDetFloor);
    if (value >= -3.0 * sigma) return Verdict::Holds;
    if (std::abs(value) > 10.0 * sigma) return Verdict::Violated;
    return Verdict::Inconclusive;
}

Verdict worst(Verdict a, Verdict b) {
    auto rank = [](Verdict v) {
        return v == Verdict::Violated ? 2 : (v == Verdict::Inconclusive ? 1 : 0);
    };
    return rank(a) >= rank(b) ? a : b;
}

double c_of_R(double R) {
    if (!(R >= 1.0)) throw input_error("c_of_R: R must be >= 1");
    double s = std::sqrt(R) + 1.0;
    return 2.0 / (s * s);
}

double optimal_epsilon(double R) {
    if (!(R >= 1.0)) throw input_error("optimal_epsilon: R must be >= 1");
    if (R == 1.0) return 0.0;
    return (R + 1.0 - 2.0 * std::sqrt(R)) / (R - 1.0);
}

std::vector<double> default_lambda_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 9; ++i) g.push_back(i / 10.0);
    return g;
}

GapReport gap(const Potential& p, const ConvexBody& k, const ConvexBody& l, double lambda,
              double p_exp, const IntegrateOptions& opts, bool common_random_numbers) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw input_error("gap: lambda must be in [0,1]");
    if (!(p_exp > 0.0)) throw input_error("gap: p must be positive");
    ConvexBody m = minkowski_comb(k, l, lambda);

    IntegrateOptions ok = common_random_numbers ? opts : with_stream(opts, kTagK);
    IntegrateOptions ol = common_random_numbers ? opts : with_stream(opts, kTagL);
    IntegrateOptions om = common_random_numbers ? opts : with_stream(opts, kTagM);

    GapReport r;
    r.p = p_exp;
    r.lambda = lambda;
    r.rng = opts.rng;
    r.mu_k = mu_of_body(p, k, ok);
    r.mu_l = mu_of_body(p, l, ol);
    r.mu_m = mu_of_body(p, m, om);

    for (const Estimate* e : {&r.mu_k, &r.mu_l, &r.mu_m})
        if (e->value <= 3.0 * e->stderr_)
            throw precondition_error("gap: vanishing measure (degenerate input)");

    double gk = std::pow(r.mu_k.value, p_exp);
    double gl = std::pow(r.mu_l.value, p_exp);
    double gm = std::pow(r.mu_m.value, p_exp);
    double value = gm - lambda * gk - (1.0 - lambda) * gl;
    double sk = lambda * pow_stderr(r.mu_k.value, r.mu_k.stderr_, p_exp);
    double sl = (1.0 - lambda) * pow_stderr(r.mu_l.value, r.mu_l.stderr_, p_exp);
    double sm = pow_stderr(r.mu_m.value, r.mu_m.stderr_, p_exp);
    double stderr_ = std::sqrt(sk * sk + sl * sl + sm * sm);

    r.gap = Estimate{value, stderr_, r.mu_k.budget + r.mu_l.budget + r.mu_m.budget,
                     r.mu_m.method};
    r.gap.stderr_ = stderr_;
    r.verdict = verdict_of(value, stderr_);
    return r;
}

ProfileReport profile_p_star(const Potential& p, const ConvexBody& k, const ConvexBody& l,
                             const std::vector<double>& lambda_grid, double p_cap, double tol,
                             const IntegrateOptions& opts) {
    if (lambda_grid.empty()) throw input_error("profile_p_star: empty lambda grid");
    for (double lam : lambda_grid)
        if (!(lam > 0.0 && lam < 1.0))
            throw input_error("profile_p_star: lambda grid must lie in (0,1)");
    if (!(p_cap > 0.0 && p_cap <= 4.0)) throw input_error("profile_p_star: p_cap in (0,4]");
    if (!(tol >= 1e-3)) throw input_error("profile_p_star: tol must be >= 1e-3");

    ProfileReport rep;
    rep.lambda_grid = lambda_grid;
    rep.tol = tol;

    bool saw_inconclusive = false;
    auto all_hold = [&](double pe) {
        Verdict v = Verdict::Holds;
        for (double lam : lambda_grid) {
            GapReport g = gap(p, k, l, lam, pe, opts);
            v = worst(v, g.verdict);
            if (v == Verdict::Violated) break;
        }
        if (v == Verdict::Inconclusive) saw_inconclusive = true;
        return v == Verdict::Holds;
    };

    double p_lo = tol;
    if (all_hold(p_cap)) {
        rep.p_ok = rep.p_bad = rep.p_star = p_cap;
    } else if (!all_hold(p_lo)) {
        rep.p_ok = 0.0;
        rep.p_bad = p_lo;
        rep.p_star = 0.0;
    } else {
        double ok = p_lo, bad = p_cap;
        while (bad - ok > tol) {
            double mid = 0.5 * (ok + bad);
            if (all_hold(mid))
                ok = mid;
            else
                bad = mid;
        }
        rep.p_ok = ok;
        rep.p_bad = bad;
        rep.p_star = ok;
    }
    rep.inconclusive_boundary = saw_inconclusive;

    if (rep.p_star > 0.0) {
        double tightest = lambda_grid.front();
        double min_gap = std::numeric_limits<double>::infinity();
        for (double lam : lambda_grid) {
            GapReport g = gap(p, k, l, lam, rep.p_star, opts);
            if (g.gap.value < min_gap) {
                min_gap = g.gap.value;
                tightest = lam;
            }
            rep.reports_at_p_star.push_back(std::move(g));
        }
        rep.tightest_lambda = tightest;
    }
    return rep;
}

CheckReport check_star_moment(const ConvexBody& k, const IntegrateOptions& opts) {
    if (!k.contains(Vec(k.dim())))
        throw precondition_error("check_star_moment: origin is not in the body");
    Potential gauss = make_gaussian(k.dim());
    const double n = k.dim();
    Estimate d = moment(gauss, k, [n](const Vec& x) { return n - norm2(x); },
                        with_stream(opts, kTagF));
    CheckReport r;
    r.name = "star_moment";
    r.value = d.value;
    r.stderr_ = d.stderr_;
    r.verdict = verdict_of(d.value, d.stderr_);
    r.details = {{"n_mu_minus_second_moment", d.value}};
    return r;
}

CheckReport check_grad_laplace(const Potential& p, const ConvexBody& k,
                               const IntegrateOptions& opts) {
    CheckReport r;
    r.name = "grad_laplace";
    std::string note;
    if (!barycenter_ok(p, k, opts, /*use_grad=*/true, note)) {
        r.precondition_ok = false;
        r.note = note;
        return r;
    }
    Estimate d = moment(p, k,
                        [&](const Vec& x) {
                            Vec g = p.gradV(x);
                            return p.hessV(x).trace() - norm2(g);
                        },
                        with_stream(opts, kTagF));
    r.value = d.value;
    r.stderr_ = d.stderr_;
    r.verdict = verdict_of(d.value, d.stderr_);
    return r;
}

namespace {

// Shared fourth-moment machinery for check_cfm / check_dilate_local.
struct GaussMoments {
    Estimate mass, m2, m4;
};

GaussMoments gauss_moments(const ConvexBody& k, const IntegrateOptions& opts) {
    Potential gauss = make_gaussian(k.dim());
    GaussMoments g;
    g.mass = mu_of_body(gauss, k, with_stream(opts, kTagMass));
    g.m2 = moment(gauss, k, [](const Vec& x) { return norm2(x); }, with_stream(opts, kTagMom2));
    g.m4 = moment(gauss, k,
                  [](const Vec& x) {
                      double t = norm2(x);
                      return t * t;
                  },
                  with_stream(opts, kTagMom4));
    if (g.mass.value <= 3.0 * g.mass.stderr_)
        throw precondition_error("fourth-moment check: vanishing measure");
    return g;
}

}  // namespace

CheckReport check_cfm(const ConvexBody& k, const IntegrateOptions& opts) {
    if (!k.is_symmetric()) throw precondition_error("check_cfm: body must be symmetric");
    GaussMoments g = gauss_moments(k, opts);
    const double m = g.mass.value, e2 = g.m2.value, e4 = g.m4.value;
    double margin = 2.0 * e2 + e2 * e2 / m - e4;
    double d4 = -1.0, d2 = 2.0 + 2.0 * e2 / m, dm = -e2 * e2 / (m * m);
    double stderr_ = std::sqrt(d4 * d4 * g.m4.stderr_ * g.m4.stderr_ +
                               d2 * d2 * g.m2.stderr_ * g.m2.stderr_ +
                               dm * dm * g.mass.stderr_ * g.mass.stderr_);
    CheckReport r;
    r.name = "cfm";
    r.value = margin;
    r.stderr_ = stderr_;
    r.verdict = verdict_of(margin, stderr_);
    r.details = {{"mass", m}, {"second_moment", e2}, {"fourth_moment", e4}};
    return r;
}

CheckReport check_dilate_local(const ConvexBody& k, const IntegrateOptions& opts) {
    CheckReport r;
    r.name = "dilate_local";
    Potential gauss = make_gaussian(k.dim());
    std::string note;
    if (!barycenter_ok(gauss, k, opts, /*use_grad=*/false, note)) {
        r.precondition_ok = false;
        r.note = note;
        return r;
    }
    GaussMoments g = gauss_moments(k, opts);
    const double n = k.dim();
    const double m = g.mass.value, e2 = g.m2.value, e4 = g.m4.value;
    // margin = -(cfm lhs) - (-E2 + E2^2/(n m))
    double margin = 3.0 * e2 + (1.0 - 1.0 / n) * e2 * e2 / m - e4;
    double d4 = -1.0;
    double d2 = 3.0 + 2.0 * (1.0 - 1.0 / n) * e2 / m;
    double dm = -(1.0 - 1.0 / n) * e2 * e2 / (m * m);
    double stderr_ = std::sqrt(d4 * d4 * g.m4.stderr_ * g.m4.stderr_ +
                               d2 * d2 * g.m2.stderr_ * g.m2.stderr_ +
                               dm * dm * g.mass.stderr_ * g.mass.stderr_);
    r.value = margin;
    r.stderr_ = stderr_;
    r.verdict = verdict_of(margin, stderr_);
    r.details = {{"mass", m}, {"second_moment", e2}, {"fourth_moment", e4}};
    return r;
}

CheckReport check_est2(const ConvexBody& k, const IntegrateOptions& opts) {
    if (k.dim() != 2) throw precondition_error("check_est2: 2-D bodies only");
    if (!k.is_symmetric()) throw precondition_error("check_est2: body must be symmetric");
    Potential gauss = make_gaussian(2);
    Estimate mass = mu_of_body(gauss, k, with_stream(opts, kTagMass));
    Estimate num = moment(gauss, k, [](const Vec& x) { return 1.0 / (norm2(x) + 2.0); },
                          with_stream(opts, kTagF));
    if (mass.value <= 3.0 * mass.stderr_)
        throw precondition_error("check_est2: vanishing measure");
    double ratio = num.value / mass.value;
    double stderr_ = std::abs(ratio) * std::sqrt(std::pow(num.stderr_ / num.value, 2) +
                                                 std::pow(mass.stderr_ / mass.value, 2));
    CheckReport r;
    r.name = "est2";
    r.value = ratio - 0.298;
    r.stderr_ = stderr_;
    r.verdict = verdict_of(r.value, stderr_);
    r.details = {{"normalized_integral", ratio}, {"threshold", 0.298}};
    return r;
}

JensenReport jensen_lower_bound(const Potential& p, const ConvexBody& k, double eps,
                                const IntegrateOptions& opts) {
    if (!(eps >= 0.0 && eps < 1.0)) throw input_error("jensen_lower_bound: eps must be in [0,1)");
    if (!(p.k1 > 0.0)) throw input_error("jensen_lower_bound: requires a declared k1 > 0");
    if (eps > 0.0 && !(p.is_even && k.is_symmetric()))
        throw precondition_error(
            "jensen_lower_bound: eps > 0 requires an even potential and a symmetric body");
    const double n = p.dim;
    const double k1 = p.k1;
    Estimate mass = mu_of_body(p, k, with_stream(opts, kTagMass));
    if (mass.value <= 3.0 * mass.stderr_)
        throw precondition_error("jensen_lower_bound: vanishing measure");
    Estimate num = moment(p, k,
                          [&](const Vec& x) {
                              double g2 = norm2(p.gradV(x));
                              return 1.0 / (g2 / ((1.0 + eps) * n * k1) + 1.0 / (1.0 - eps));
                          },
                          with_stream(opts, kTagF));
    JensenReport r;
    r.epsilon = eps;
    double lhs = num.value / mass.value;
    double stderr_ = std::abs(lhs) * std::sqrt(std::pow(num.stderr_ / num.value, 2) +
                                               std::pow(mass.stderr_ / mass.value, 2));
    r.lhs = Estimate{lhs, stderr_, num.budget + mass.budget, num.method};
    r.bound = 1.0 / (p.R() / (1.0 + eps) + 1.0 / (1.0 - eps));
    r.c_empirical = lhs;
    r.c_formula = c_of_R(std::max(1.0, p.R()));
    r.verdict = verdict_of(lhs - r.bound, stderr_);
    return r;
}

DilateConcavityReport dilate_concavity(const Potential& p, const ConvexBody& k,
                                       const std::vector<double>& t_grid,
                                       const IntegrateOptions& opts) {
    if (t_grid.size() < 3) throw input_error("dilate_concavity: need at least 3 grid points");
    for (std::size_t i = 0; i + 1 < t_grid.size(); ++i)
        if (!(t_grid[i] < t_grid[i + 1]) || !(t_grid[i] > 0.0))
            throw input_error("dilate_concavity: t grid must be positive and increasing");

    DilateConcavityReport r;
    r.t_grid = t_grid;
    std::string note;
    if (!barycenter_ok(p, k, opts, /*use_grad=*/false, note)) {
        r.precondition_ok = false;
        r.note = note;
        return r;
    }
    const double n = p.dim;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        Estimate m = mu_of_body(p, k.dilate(t_grid[i]), with_stream(opts, 1000 + i));
        double g = std::pow(m.value, 1.0 / n);
        double sg = (m.value > 0.0) ? pow_stderr(m.value, m.stderr_, 1.0 / n) : 0.0;
        r.g.push_back(g);
        r.g_stderr.push_back(sg);
    }
    Verdict v = Verdict::Holds;
    for (std::size_t i = 1; i + 1 < r.g.size(); ++i) {
        double d2 = r.g[i + 1] - 2.0 * r.g[i] + r.g[i - 1];
        double s = std::sqrt(r.g_stderr[i + 1] * r.g_stderr[i + 1] +
                             4.0 * r.g_stderr[i] * r.g_stderr[i] +
                             r.g_stderr[i - 1] * r.g_stderr[i - 1]);
        r.second_diff.push_back(d2);
        v = worst(v, verdict_of(-d2, s));
    }
    r.verdict = v;
    return r;
}

}  // namespace gz
