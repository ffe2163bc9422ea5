#include "gz/integrals.hpp"

#include <algorithm>
#include <cmath>

#include "gz/quadrature.hpp"

namespace gz {

namespace {

constexpr std::int64_t kChunk = 4096;

double erf_interval(double halfwidth, double c = 1.0) {
    // Mass of the 1-D normalized density sqrt(c/2pi) e^{-c t^2/2} on [-w, w].
    return std::erf(halfwidth * std::sqrt(0.5 * c));
}

struct ChunkAcc {
    double sum = 0.0;
    double sumsq = 0.0;
};

Estimate mc_integrate(const Potential& p, const ConvexBody& k,
                      const std::function<double(const Vec&)>& f, const IntegrateOptions& opts) {
    if (opts.budget < 100) throw input_error("mc: budget must be at least 100");
    const std::int64_t n_samples = opts.budget;
    const std::int64_t n_chunks = (n_samples + kChunk - 1) / kChunk;
    const double r_out = k.outer_radius();
    const double r_in = k.inner_radius();
    const double r_out2 = r_out * r_out;
    const double r_in2 = r_in * r_in;
    const int dim = p.dim;

    std::vector<ChunkAcc> partial(static_cast<std::size_t>(n_chunks));
    auto do_chunk = [&](std::int64_t c) {
        ChunkAcc acc;
        Vec x;
        const std::int64_t lo = c * kChunk;
        const std::int64_t hi = std::min(n_samples, lo + kChunk);
        for (std::int64_t i = lo; i < hi; ++i) {
            gaussian_sample(opts.rng, static_cast<std::uint64_t>(i), dim, x);
            double xx = norm2(x);
            bool inside = xx <= r_in2 || (xx <= r_out2 && k.contains(x));
            if (!inside) continue;
            double w = p.gaussian_weight(x);
            if (f) w *= f(x);
            acc.sum += w;
            acc.sumsq += w * w;
        }
        partial[static_cast<std::size_t>(c)] = acc;
    };

    if (opts.exec == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < n_chunks; ++c) do_chunk(c);
    } else {
        for (std::int64_t c = 0; c < n_chunks; ++c) do_chunk(c);
    }

    double sum = 0.0, sumsq = 0.0;
    for (const ChunkAcc& a : partial) {
        sum += a.sum;
        sumsq += a.sumsq;
    }
    const double nd = static_cast<double>(n_samples);
    double mean = sum / nd;
    double var = std::max(0.0, (sumsq - nd * mean * mean) / (nd - 1.0));
    return Estimate{mean, std::sqrt(var / nd), n_samples, Method::MonteCarlo};
}

// --- radial quadrature -----------------------------------------------------

// Angular pieces on which the 2-D radial function is smooth.
struct Arc {
    double phi0, phi1;
    bool polygonal;   // r(phi) = offset / <normal, e_phi> on the arc
    Vec normal;       // polygonal case
    double offset;
};

std::vector<Arc> angular_arcs(const ConvexBody& k) {
    std::vector<Arc> arcs;
    auto smooth_split = [&](int pieces) {
        for (int i = 0; i < pieces; ++i)
            arcs.push_back(Arc{kTwoPi * i / pieces, kTwoPi * (i + 1) / pieces, false, Vec(2), 0.0});
    };
    if (k.kind() == BodyKind::Ball || k.kind() == BodyKind::Ellipsoid) {
        smooth_split(k.kind() == BodyKind::Ball ? 1 : 16);
        return arcs;
    }

    // Polygon (H-polytope, box, or the grid relaxation of a support grid):
    // split at vertex angles; between consecutive vertices a single facet is
    // active.
    std::vector<Vec> normals;
    std::vector<double> offsets;
    if (k.kind() == BodyKind::Box) {
        const auto& w = k.box_halfwidths();
        normals = {Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}};
        offsets = {w[0], w[0], w[1], w[1]};
    } else if (k.kind() == BodyKind::HPolytope) {
        normals = k.polytope_normals();
        offsets = k.polytope_offsets();
    } else {
        const auto& g = *k.grid();
        for (int j = 0; j < g.size(); ++j) normals.push_back(g.dir(j));
        offsets = k.grid_values();
    }

    std::vector<Vec> verts = (k.kind() == BodyKind::HPolytope)
                                 ? k.polytope_vertices()
                                 : std::vector<Vec>{};
    if (verts.empty()) {
        // adjacent-facet intersections (grid bodies and boxes)
        const int m = static_cast<int>(normals.size());
        if (k.kind() == BodyKind::Box) {
            const auto& w = k.box_halfwidths();
            verts = {Vec{w[0], w[1]}, Vec{-w[0], w[1]}, Vec{-w[0], -w[1]}, Vec{w[0], -w[1]}};
        } else {
            for (int j = 0; j < m; ++j) {
                int jn = (j + 1) % m;
                double det = normals[j][0] * normals[jn][1] - normals[j][1] * normals[jn][0];
                if (std::abs(det) < 1e-14) continue;
                verts.push_back(Vec{(offsets[j] * normals[jn][1] - normals[j][1] * offsets[jn]) / det,
                                    (normals[j][0] * offsets[jn] - offsets[j] * normals[jn][0]) / det});
            }
        }
    }
    std::vector<double> angles;
    angles.reserve(verts.size());
    for (const Vec& v : verts)
        if (norm(v) > 1e-13) angles.push_back(wrap_angle(std::atan2(v[1], v[0])));
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-13; }),
                 angles.end());
    if (angles.empty()) throw precondition_error("radial: degenerate 2-D body");

    const int m = static_cast<int>(angles.size());
    for (int i = 0; i < m; ++i) {
        double a = angles[i];
        double b = (i + 1 < m) ? angles[i + 1] : angles[0] + kTwoPi;
        if (b - a < 1e-13) continue;
        double mid = 0.5 * (a + b);
        Vec e = unit2(mid);
        // active facet at the midpoint
        int best = -1;
        double rbest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < normals.size(); ++j) {
            double d = dot(normals[j], e);
            if (d > 1e-13) {
                double r = offsets[j] / d;
                if (r < rbest) {
                    rbest = r;
                    best = static_cast<int>(j);
                }
            }
        }
        if (best < 0) throw precondition_error("radial: body is unbounded in some direction");
        arcs.push_back(Arc{a, b, true, normals[best], offsets[best]});
    }
    return arcs;
}

Estimate radial_integrate(const Potential& p, const ConvexBody& k,
                          const std::function<double(const Vec&)>& f,
                          const IntegrateOptions& opts) {
    const int n = p.dim;
    if (n > 2) throw input_error("radial: available in dimensions 1 and 2 only");

    if (n == 1) {
        double right = k.radial(Vec{1.0});
        double left = k.radial(Vec{-1.0});
        if (!std::isfinite(right) || !std::isfinite(left))
            throw precondition_error("radial: unbounded interval");
        auto g = [&](double t) {
            Vec x{t};
            double w = p.density(x);
            return f ? w * f(x) : w;
        };
        QuadResult q = integrate(g, -left, right, opts.quad_tol * 0.1, 1e-13);
        return Estimate{q.value, 0.0, q.evals, Method::Radial};
    }

    const auto arcs = angular_arcs(k);
    const double atol_arc = opts.quad_tol / static_cast<double>(arcs.size());

    std::vector<double> partial(arcs.size(), 0.0);
    std::vector<long> evals(arcs.size(), 0);
    auto do_arc = [&](std::size_t i) {
        const Arc& arc = arcs[i];
        auto outer = [&](double phi) {
            Vec e = unit2(phi);
            double r = arc.polygonal ? arc.offset / dot(arc.normal, e) : k.radial(e);
            double q;
            if (!f && p.radial_profile_quadratic(e, q)) {
                // int_0^R e^{-q r^2/2} r dr, including the normalizer
                return std::exp(-p.log_norm) * (q > 0.0 ? -std::expm1(-0.5 * q * r * r) / q
                                                        : 0.5 * r * r);
            }
            auto inner = [&](double t) {
                Vec x = t * e;
                double w = p.density(x) * t;
                return f ? w * f(x) : w;
            };
            QuadResult qi = integrate(inner, 0.0, r, atol_arc * 1e-2, 1e-13, 40, 2);
            return qi.value;
        };
        // arcs are smooth by construction; no forced subdivision needed
        QuadResult qo = integrate(outer, arc.phi0, arc.phi1, atol_arc, 1e-12, 40, 0);
        partial[i] = qo.value;
        evals[i] = qo.evals;
    };

    const std::int64_t n_arcs = static_cast<std::int64_t>(arcs.size());
    if (opts.exec == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n_arcs; ++i) do_arc(static_cast<std::size_t>(i));
    } else {
        for (std::int64_t i = 0; i < n_arcs; ++i) do_arc(static_cast<std::size_t>(i));
    }
    double total = 0.0;
    long total_evals = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        total += partial[i];
        total_evals += evals[i];
    }
    return Estimate{total, 0.0, total_evals, Method::Radial};
}

bool radial_applicable(const Potential& p, const ConvexBody& k) {
    if (p.dim > 2 || !k.bounded()) return false;
    // The origin must lie in K (offsets / grid values nonnegative).
    if (k.kind() == BodyKind::HPolytope) {
        for (double b : k.polytope_offsets())
            if (b < 0.0) return false;
        return true;
    }
    return true;  // ball/box/ellipsoid/support grids contain the origin by construction
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::MonteCarlo: return "mc";
        case Method::Radial: return "radial";
        case Method::ClosedForm: return "closed_form";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    if (s == "auto") return Method::Auto;
    if (s == "mc") return Method::MonteCarlo;
    if (s == "radial") return Method::Radial;
    if (s == "closed_form" || s == "closed") return Method::ClosedForm;
    throw input_error("unknown method: " + s);
}

std::optional<Estimate> closed_form_mu(const Potential& p, const ConvexBody& k) {
    if (p.dim != k.dim()) return std::nullopt;
    if (p.kind == PotentialKind::Gaussian && k.kind() == BodyKind::Ball) {
        double r = k.ball_radius();
        if (p.dim == 1) return Estimate{erf_interval(r), 0.0, 0, Method::ClosedForm};
        if (p.dim == 2)
            return Estimate{-std::expm1(-0.5 * r * r), 0.0, 0, Method::ClosedForm};
        return std::nullopt;
    }
    if (k.kind() == BodyKind::Box && (p.kind == PotentialKind::Gaussian ||
                                      p.kind == PotentialKind::DiagQuadratic)) {
        double v = 1.0;
        for (int i = 0; i < p.dim; ++i) {
            double c = p.kind == PotentialKind::Gaussian ? 1.0 : p.coeffs[i];
            v *= erf_interval(k.box_halfwidths()[i], c);
        }
        return Estimate{v, 0.0, 0, Method::ClosedForm};
    }
    return std::nullopt;
}

Estimate mu_of_body(const Potential& p, const ConvexBody& k, const IntegrateOptions& opts) {
    if (p.dim != k.dim()) throw input_error("mu_of_body: dimension mismatch");
    switch (opts.method) {
        case Method::ClosedForm: {
            auto cf = closed_form_mu(p, k);
            if (!cf) throw input_error("mu_of_body: no closed form for this (measure, body)");
            return *cf;
        }
        case Method::Radial:
            if (!radial_applicable(p, k))
                throw precondition_error("mu_of_body: radial needs n <= 2 and origin in K");
            return radial_integrate(p, k, nullptr, opts);
        case Method::MonteCarlo: return mc_integrate(p, k, nullptr, opts);
        case Method::Auto: {
            if (auto cf = closed_form_mu(p, k)) return *cf;
            if (radial_applicable(p, k)) return radial_integrate(p, k, nullptr, opts);
            return mc_integrate(p, k, nullptr, opts);
        }
    }
    throw input_error("mu_of_body: bad method");
}

Estimate moment(const Potential& p, const ConvexBody& k,
                const std::function<double(const Vec&)>& f, const IntegrateOptions& opts) {
    if (p.dim != k.dim()) throw input_error("moment: dimension mismatch");
    if (!f) throw input_error("moment: integrand required");
    switch (opts.method) {
        case Method::ClosedForm:
            throw input_error("moment: no closed forms for general integrands");
        case Method::Radial:
            if (!radial_applicable(p, k))
                throw precondition_error("moment: radial needs n <= 2 and origin in K");
            return radial_integrate(p, k, f, opts);
        case Method::MonteCarlo: return mc_integrate(p, k, f, opts);
        case Method::Auto:
            if (radial_applicable(p, k)) return radial_integrate(p, k, f, opts);
            return mc_integrate(p, k, f, opts);
    }
    throw input_error("moment: bad method");
}

ConvexBody proxy_ball(int n) {
    return ConvexBody::ball(n, std::max(12.0, 6.0 * std::sqrt(static_cast<double>(n))));
}

}  // namespace gz
