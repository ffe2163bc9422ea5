#include "gz/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gz {

double min_eigenvalue(SymMat m) {
    const int n = m.n;
    if (n == 1) return m.at(0, 0);
    // Cyclic Jacobi; dimensions are tiny so convergence is immediate.
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += m.at(p, q) * m.at(p, q);
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (std::abs(apq) < 1e-18) continue;
                double tau = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double mkp = m.at(k, p), mkq = m.at(k, q);
                    m.at(k, p) = c * mkp - s * mkq;
                    m.at(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    double mpk = m.at(p, k), mqk = m.at(q, k);
                    m.at(p, k) = c * mpk - s * mqk;
                    m.at(q, k) = s * mpk + c * mqk;
                }
            }
    }
    double mn = m.at(0, 0);
    for (int i = 1; i < n; ++i) mn = std::min(mn, m.at(i, i));
    return mn;
}

double Potential::V(const Vec& x) const {
    switch (kind) {
        case PotentialKind::Gaussian: return 0.5 * norm2(x);
        case PotentialKind::DiagQuadratic: {
            double s = 0.0;
            for (int i = 0; i < dim; ++i) s += coeffs[i] * x[i] * x[i];
            return 0.5 * s;
        }
        case PotentialKind::Custom: return custom_eval(x);
    }
    return 0.0;
}

Vec Potential::gradV(const Vec& x) const {
    switch (kind) {
        case PotentialKind::Gaussian: return x;
        case PotentialKind::DiagQuadratic: {
            Vec g(dim);
            for (int i = 0; i < dim; ++i) g[i] = coeffs[i] * x[i];
            return g;
        }
        case PotentialKind::Custom: return custom_grad(x);
    }
    return Vec(dim);
}

SymMat Potential::hessV(const Vec& x) const {
    switch (kind) {
        case PotentialKind::Gaussian: {
            SymMat h(dim);
            for (int i = 0; i < dim; ++i) h.at(i, i) = 1.0;
            return h;
        }
        case PotentialKind::DiagQuadratic: {
            SymMat h(dim);
            for (int i = 0; i < dim; ++i) h.at(i, i) = coeffs[i];
            return h;
        }
        case PotentialKind::Custom: return custom_hess(x);
    }
    return SymMat(dim);
}

double Potential::gaussian_weight(const Vec& x) const {
    if (kind == PotentialKind::Gaussian) return 1.0;
    double log_gauss = -0.5 * norm2(x) - 0.5 * dim * std::log(kTwoPi);
    return std::exp(-V(x) - log_norm - log_gauss);
}

bool Potential::radial_profile_quadratic(const Vec& u, double& q_out) const {
    if (kind == PotentialKind::Gaussian) {
        q_out = 1.0;
        return true;
    }
    if (kind == PotentialKind::DiagQuadratic) {
        double q = 0.0;
        for (int i = 0; i < dim; ++i) q += coeffs[i] * u[i] * u[i];
        q_out = q;
        return true;
    }
    return false;
}

Potential make_gaussian(int n) {
    if (n < 1 || n > kMaxDim) throw input_error("make_gaussian: dimension out of range");
    Potential p;
    p.dim = n;
    p.kind = PotentialKind::Gaussian;
    p.k1 = p.k2 = 1.0;
    p.is_even = true;
    p.log_norm = 0.5 * n * std::log(kTwoPi);
    p.normalized = true;
    return p;
}

Potential make_diag_quadratic(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size());
    if (n < 1 || n > kMaxDim) throw input_error("make_diag_quadratic: dimension out of range");
    for (double ci : c)
        if (!(ci > 0.0)) throw input_error("make_diag_quadratic: coefficients must be positive");
    Potential p;
    p.dim = n;
    p.kind = PotentialKind::DiagQuadratic;
    p.coeffs = c;
    p.k1 = *std::min_element(c.begin(), c.end());
    p.k2 = std::accumulate(c.begin(), c.end(), 0.0) / n;
    p.is_even = true;
    p.log_norm = 0.0;
    for (double ci : c) p.log_norm += 0.5 * std::log(kTwoPi / ci);
    p.normalized = true;
    return p;
}

Potential make_custom(int n, std::function<double(const Vec&)> eval,
                      std::function<Vec(const Vec&)> grad,
                      std::function<SymMat(const Vec&)> hess, double k1, double k2,
                      bool is_even) {
    if (n < 1 || n > kMaxDim) throw input_error("make_custom: dimension out of range");
    if (!eval || !grad || !hess)
        throw input_error("make_custom: all three oracles are required");
    Potential p;
    p.dim = n;
    p.kind = PotentialKind::Custom;
    p.custom_eval = std::move(eval);
    p.custom_grad = std::move(grad);
    p.custom_hess = std::move(hess);
    p.k1 = k1;
    p.k2 = k2;
    p.is_even = is_even;
    p.log_norm = 0.0;
    p.normalized = false;
    return p;
}

BoundsReport check_bounds(const Potential& p, const std::vector<Vec>& points) {
    BoundsReport r;
    r.min_eigenvalue = std::numeric_limits<double>::infinity();
    r.max_trace_over_n = -std::numeric_limits<double>::infinity();
    for (const Vec& x : points) {
        SymMat h = p.hessV(x);
        double eig = min_eigenvalue(h);
        double tr = h.trace() / p.dim;
        if (eig < r.min_eigenvalue) {
            r.min_eigenvalue = eig;
            r.worst_eig_point = x;
        }
        if (tr > r.max_trace_over_n) {
            r.max_trace_over_n = tr;
            r.worst_trace_point = x;
        }
    }
    r.pass = r.min_eigenvalue >= p.k1 - 1e-8 && r.max_trace_over_n <= p.k2 + 1e-8;
    return r;
}

}  // namespace gz
