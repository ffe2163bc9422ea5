#pragma once

#include <functional>

#include "gz/common.hpp"

namespace gz {

/// Result of a deterministic 1-D integration.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // accumulated Kronrod error estimate
    long evals = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Subdivides until the local
/// error estimate meets atol (scaled by subinterval share) or rtol relative
/// to the local value. The first min_depth levels always subdivide, so
/// features far narrower than the interval cannot hide between the nodes of
/// the opening panel. Handles a > b by sign flip.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double atol = 1e-12, double rtol = 1e-12, int max_depth = 40,
                     int min_depth = 4);

/// Single non-adaptive K15 panel; cheap path for short smooth arcs.
QuadResult gk15_panel(const std::function<double(double)>& f, double a, double b);

}  // namespace gz
