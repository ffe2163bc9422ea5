#pragma once

#include <vector>

#include "gz/bodies.hpp"
#include "gz/integrals.hpp"
#include "gz/measures.hpp"

namespace gz {

/// alpha(R) = int_0^R (t^4 - 3 t^2) e^{-t^2/2} dt, evaluated by adaptive
/// quadrature with absolute tolerance 1e-10. Nonpositive for all R >= 0,
/// minimal near sqrt(3), and tending back to 0 at infinity.
double alpha(double R);

/// Closed-form solution profile of the 1-D weighted Neumann problem
/// u'' - t u' = 1 on [-R, R]:
///   u'(t) = e^{t^2/2} int_0^t e^{-s^2/2} ds,   u''(t) = t u'(t) + 1.
/// The identity u'' - t u' = 1 holds exactly by construction.
double neumann_du(double t);
double neumann_d2u(double t);

struct OdeProfile {
    double R = 0.0;
    std::vector<double> t;
    std::vector<double> du;
    std::vector<double> d2u;

    static OdeProfile closed_form(double R, int nodes = 201);
};

/// beta(R) = int_{-R}^{R} (u''^2 + u'^2) e^{-t^2/2} dt
///         / int_{-R}^{R} e^{-t^2/2} dt, always >= 1, strictly increasing.
double beta(double R);

/// The 1-D boundary-value identity: with u as above and mu the standard
/// Gaussian restricted to [-R, R],
///   int (Lu)^2 dmu = int (u''^2 + u'^2) dmu + H_R * u'(R)^2 * (boundary mass)
/// with weighted curvature H = -R at both endpoints. The residual is pure
/// quadrature error.
struct BochnerReport {
    double R = 0.0;
    double lhs = 0.0;       // int (Lu)^2 dmu = gamma([-R, R])
    double bulk = 0.0;      // int (u''^2 + u'^2) dmu
    double boundary = 0.0;  // -2 R u'(R)^2 * omega(R)
    double residual = 0.0;  // |lhs - bulk - boundary| / |lhs|
};

BochnerReport bochner_residual_1d(double R);

/// Boundary data of a 2-D body weighted by the measure: H = 1/rho - <grad V, n>
/// and the boundary element density(x) * rho * dtheta.
struct WeightedBoundary2D {
    BoundaryCurve2D curve;
    std::vector<double> H;
    std::vector<double> weight;
};

WeightedBoundary2D weight_boundary(const Potential& p, const BoundaryCurve2D& curve);

/// Shape-derivative check: the boundary-integral formula against a central
/// finite difference of s -> mu(K_s) for the support family h + s*psi.
/// fd_half repeats the difference at half the step as a convergence control.
struct VariationReport {
    int order = 1;
    double formula = 0.0;
    double fd = 0.0;
    double fd_half = 0.0;
    double step = 0.0;
    double rel_err = 0.0;  // |formula - fd| / max(|formula|, |fd|)
};

/// First variation: d/ds mu(K_s)|_0 = int_{boundary} psi(n_x) dmu_boundary.
VariationReport first_variation_2d(const Potential& p, const BoundaryCurve2D& curve,
                                   const std::vector<double>& psi, double step = 1e-4);

/// Second variation: d2/ds2 mu(K_s)|_0
///   = int (H psi^2 - rho^{-1} (dpsi/dtheta)^2) dmu_boundary.
VariationReport second_variation_2d(const Potential& p, const BoundaryCurve2D& curve,
                                    const std::vector<double>& psi, double step = 1e-3);

enum class LocalCStatus { Ok, InfiniteCap, LogConcavityViolated };

/// Largest c with mu'' mu <= ((n-c)/n) (mu')^2 at this configuration,
/// i.e. c = n (1 - mu'' mu / mu'^2); capped when mu' = 0 and mu'' <= 0,
/// flagged as a numerical-bug signal when mu' = 0 and mu'' > 0.
struct LocalCReport {
    double c = 0.0;
    double mu = 0.0;
    double dmu = 0.0;
    double d2mu = 0.0;
    LocalCStatus status = LocalCStatus::Ok;
};

inline constexpr double kLocalCCap = 1e6;

LocalCReport local_c_estimate(const Potential& p, const BoundaryCurve2D& curve,
                              const std::vector<double>& psi);

}  // namespace gz
