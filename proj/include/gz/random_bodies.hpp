#pragma once

#include <cstdint>
#include <vector>

#include "gz/bodies.hpp"

namespace gz {

struct Harmonic {
    int order = 0;
    double c = 0.0;  // cos coefficient
    double s = 0.0;  // sin coefficient
};

/// Support grid h(theta) = a0 + sum_m (c_m cos m theta + s_m sin m theta)
/// with the harmonic part shrunk toward the ball until the discrete
/// curvature radius stays >= rho_floor and h >= h_min everywhere. Decoding
/// is therefore total: any coefficients produce a valid body.
ConvexBody harmonic_body_2d(double a0, const std::vector<Harmonic>& terms, int M = 0,
                            double h_min = 0.05, double rho_floor = 1e-4);

/// Seeded generators used by the property suites. Each (seed, index) pair
/// deterministically names one body.
ConvexBody random_sym_grid_2d(std::uint64_t seed, int index, int M = 0);
ConvexBody random_origin_grid_2d(std::uint64_t seed, int index, int M = 0);
ConvexBody random_sym_hpolytope(int n, std::uint64_t seed, int index, int facet_pairs = 0);
ConvexBody random_origin_hpolytope(int n, std::uint64_t seed, int index, int facets = 0);

}  // namespace gz
