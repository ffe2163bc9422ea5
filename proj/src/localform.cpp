#include "gz/localform.hpp"

#include <cmath>

#include "gz/quadrature.hpp"

namespace gz {

namespace {

constexpr double kSqrtHalfPi = 1.2533141373155002512;  // sqrt(pi/2)

// mu(K_s) for the family h + s*psi, by radial quadrature of the grid body.
double family_mu(const Potential& p, const ConvexBody& base, const std::vector<double>& psi,
                 double s) {
    std::vector<double> h = base.grid_values();
    for (std::size_t j = 0; j < h.size(); ++j) h[j] += s * psi[j];
    ConvexBody ks = ConvexBody::support_grid(base.grid(), std::move(h));
    IntegrateOptions opts;
    opts.method = Method::Radial;
    opts.quad_tol = 1e-12;
    return mu_of_body(p, ks, opts).value;
}

ConvexBody curve_body(const BoundaryCurve2D& curve) {
    auto grid = DirectionGrid::standard(2, curve.size());
    return ConvexBody::support_grid(grid, curve.h);
}

double rel_err(double a, double b) {
    double scale = std::max(std::abs(a), std::abs(b));
    if (scale < 1e-8) return 0.0;  // both routes vanish (e.g. odd psi)
    return std::abs(a - b) / scale;
}

void check_variation_inputs(const Potential& p, const BoundaryCurve2D& curve,
                            const std::vector<double>& psi) {
    if (p.dim != 2) throw input_error("variation: 2-D measures only");
    if (static_cast<int>(psi.size()) != curve.size())
        throw input_error("variation: psi must live on the curve's grid");
}

}  // namespace

double alpha(double R) {
    if (!(R >= 0.0)) throw input_error("alpha: R must be >= 0");
    if (R == 0.0) return 0.0;
    auto f = [](double t) { return (t * t * t * t - 3.0 * t * t) * std::exp(-0.5 * t * t); };
    return integrate(f, 0.0, R, 1e-10, 1e-13).value;
}

double neumann_du(double t) {
    return std::exp(0.5 * t * t) * kSqrtHalfPi * std::erf(t / std::sqrt(2.0));
}

double neumann_d2u(double t) { return t * neumann_du(t) + 1.0; }

OdeProfile OdeProfile::closed_form(double R, int nodes) {
    if (!(R > 0.0)) throw input_error("OdeProfile: R must be positive");
    if (nodes < 3) throw input_error("OdeProfile: need at least 3 nodes");
    OdeProfile p;
    p.R = R;
    p.t.resize(nodes);
    p.du.resize(nodes);
    p.d2u.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        double t = -R + 2.0 * R * i / (nodes - 1);
        p.t[i] = t;
        p.du[i] = neumann_du(t);
        p.d2u[i] = t * p.du[i] + 1.0;
    }
    return p;
}

double beta(double R) {
    if (!(R > 0.0)) throw input_error("beta: R must be positive");
    // both integrands are even in t
    auto num = [](double t) {
        double du = neumann_du(t);
        double d2u = t * du + 1.0;
        return (d2u * d2u + du * du) * std::exp(-0.5 * t * t);
    };
    auto den = [](double t) { return std::exp(-0.5 * t * t); };
    double top = integrate(num, 0.0, R, 1e-12, 1e-12).value;
    double bot = integrate(den, 0.0, R, 1e-14, 1e-13).value;
    return top / bot;
}

BochnerReport bochner_residual_1d(double R) {
    if (!(R > 0.0)) throw input_error("bochner_residual_1d: R must be positive");
    const double norm = 1.0 / std::sqrt(kTwoPi);
    BochnerReport r;
    r.R = R;
    r.lhs = std::erf(R / std::sqrt(2.0));  // int 1 dmu, normalized Gaussian
    auto bulk = [&](double t) {
        double du = neumann_du(t);
        double d2u = t * du + 1.0;
        return (d2u * d2u + du * du) * norm * std::exp(-0.5 * t * t);
    };
    r.bulk = 2.0 * integrate(bulk, 0.0, R, 1e-13, 1e-13).value;
    double duR = neumann_du(R);
    r.boundary = -2.0 * R * duR * duR * norm * std::exp(-0.5 * R * R);
    r.residual = std::abs(r.lhs - r.bulk - r.boundary) / std::abs(r.lhs);
    return r;
}

WeightedBoundary2D weight_boundary(const Potential& p, const BoundaryCurve2D& curve) {
    if (p.dim != 2) throw input_error("weight_boundary: 2-D measures only");
    WeightedBoundary2D w;
    w.curve = curve;
    const int M = curve.size();
    w.H.resize(M);
    w.weight.resize(M);
    for (int j = 0; j < M; ++j) {
        w.H[j] = 1.0 / curve.rho[j] - dot(p.gradV(curve.point[j]), curve.normal[j]);
        w.weight[j] = p.density(curve.point[j]) * curve.rho[j] * curve.dtheta;
    }
    return w;
}

VariationReport first_variation_2d(const Potential& p, const BoundaryCurve2D& curve,
                                   const std::vector<double>& psi, double step) {
    check_variation_inputs(p, curve, psi);
    WeightedBoundary2D w = weight_boundary(p, curve);
    double formula = 0.0;
    for (int j = 0; j < curve.size(); ++j) formula += psi[j] * w.weight[j];

    ConvexBody base = curve_body(curve);
    BodyFamily family(base, psi, -step, step);  // validates the whole interval
    auto fd_at = [&](double s) {
        return (family_mu(p, base, psi, s) - family_mu(p, base, psi, -s)) / (2.0 * s);
    };
    VariationReport r;
    r.order = 1;
    r.formula = formula;
    r.step = step;
    r.fd = fd_at(step);
    r.fd_half = fd_at(step / 2.0);
    r.rel_err = rel_err(formula, r.fd);
    return r;
}

VariationReport second_variation_2d(const Potential& p, const BoundaryCurve2D& curve,
                                    const std::vector<double>& psi, double step) {
    check_variation_inputs(p, curve, psi);
    WeightedBoundary2D w = weight_boundary(p, curve);
    const int M = curve.size();
    double formula = 0.0;
    for (int j = 0; j < M; ++j) {
        double dpsi = (psi[(j + 1) % M] - psi[(j + M - 1) % M]) / (2.0 * curve.dtheta);
        formula += (w.H[j] * psi[j] * psi[j] - dpsi * dpsi / curve.rho[j]) * w.weight[j];
    }

    ConvexBody base = curve_body(curve);
    BodyFamily family(base, psi, -step, step);
    double mu0 = family_mu(p, base, psi, 0.0);
    auto fd_at = [&](double s) {
        return (family_mu(p, base, psi, s) - 2.0 * mu0 + family_mu(p, base, psi, -s)) / (s * s);
    };
    VariationReport r;
    r.order = 2;
    r.formula = formula;
    r.step = step;
    r.fd = fd_at(step);
    r.fd_half = fd_at(step / 2.0);
    r.rel_err = rel_err(formula, r.fd);
    return r;
}

LocalCReport local_c_estimate(const Potential& p, const BoundaryCurve2D& curve,
                              const std::vector<double>& psi) {
    check_variation_inputs(p, curve, psi);
    WeightedBoundary2D w = weight_boundary(p, curve);
    const int M = curve.size();
    LocalCReport r;
    IntegrateOptions opts;
    opts.method = Method::Radial;
    opts.quad_tol = 1e-12;
    r.mu = mu_of_body(p, curve_body(curve), opts).value;
    for (int j = 0; j < M; ++j) {
        double dpsi = (psi[(j + 1) % M] - psi[(j + M - 1) % M]) / (2.0 * curve.dtheta);
        r.dmu += psi[j] * w.weight[j];
        r.d2mu += (w.H[j] * psi[j] * psi[j] - dpsi * dpsi / curve.rho[j]) * w.weight[j];
    }
    const double n = 2.0;
    double scale = std::max({std::abs(r.mu), std::abs(r.d2mu), 1.0});
    if (std::abs(r.dmu) < 1e-12 * scale) {
        if (r.d2mu <= 1e-12 * scale) {
            r.c = kLocalCCap;
            r.status = LocalCStatus::InfiniteCap;
        } else {
            r.c = -kLocalCCap;
            r.status = LocalCStatus::LogConcavityViolated;
        }
        return r;
    }
    r.c = n * (1.0 - r.d2mu * r.mu / (r.dmu * r.dmu));
    return r;
}

}  // namespace gz
