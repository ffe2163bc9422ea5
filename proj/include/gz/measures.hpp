#pragma once

#include <functional>
#include <vector>

#include "gz/common.hpp"

namespace gz {

enum class PotentialKind { Gaussian, DiagQuadratic, Custom };

/// Log-concave measure mu = e^{-V} dx / Z through oracles for V and its
/// first two derivatives, plus the declared curvature bounds
/// k1 (Hessian >= k1*Id) and k2 (Laplacian <= k2*n). The bounds are
/// hypotheses carried by the object, spot-verified by check_bounds; they are
/// never recomputed from the oracles.
struct Potential {
    int dim = 0;
    PotentialKind kind = PotentialKind::Gaussian;
    std::vector<double> coeffs;  // diag_quadratic coefficients
    double k1 = 1.0;
    double k2 = 1.0;
    bool is_even = true;
    /// log Z with Z the total mass of e^{-V}; zero (unknown) for custom
    /// potentials, in which case mu is reported unnormalized.
    double log_norm = 0.0;
    bool normalized = true;

    std::function<double(const Vec&)> custom_eval;
    std::function<Vec(const Vec&)> custom_grad;
    std::function<SymMat(const Vec&)> custom_hess;

    double V(const Vec& x) const;
    Vec gradV(const Vec& x) const;
    SymMat hessV(const Vec& x) const;

    double R() const { return k2 / k1; }
    /// Normalized density e^{-V}/Z.
    double density(const Vec& x) const { return std::exp(-V(x) - log_norm); }
    /// Importance weight against the standard Gaussian reference.
    double gaussian_weight(const Vec& x) const;
    /// Density along the ray r*u, as a function of r (used by the radial
    /// integrator); q_out receives the diagonal quadratic form when the
    /// profile is exp(-q r^2 / 2) so callers can use the closed form.
    bool radial_profile_quadratic(const Vec& u, double& q_out) const;
};

/// Standard Gaussian: V(x) = |x|^2/2, k1 = k2 = 1.
Potential make_gaussian(int n);

/// V(x) = sum c_i x_i^2 / 2 with all c_i > 0; k1 = min c, k2 = mean c.
Potential make_diag_quadratic(const std::vector<double>& c);

/// Custom potential; all three oracles are required, bounds are declared.
Potential make_custom(int n, std::function<double(const Vec&)> eval,
                      std::function<Vec(const Vec&)> grad,
                      std::function<SymMat(const Vec&)> hess, double k1, double k2,
                      bool is_even);

struct BoundsReport {
    double min_eigenvalue = 0.0;
    double max_trace_over_n = 0.0;
    bool pass = false;
    Vec worst_eig_point;
    Vec worst_trace_point;
};

/// Spot-checks the declared (k1, k2) at the given points within 1e-8.
/// Failure indicates a misdeclared Potential, not a computation error.
BoundsReport check_bounds(const Potential& p, const std::vector<Vec>& points);

}  // namespace gz
