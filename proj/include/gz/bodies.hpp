#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gz/common.hpp"
#include "gz/spline.hpp"

namespace gz {

/// Set of unit directions on which support functions are sampled.
/// n=1: {+1,-1}; n=2: M uniformly spaced angles; n>=3: deterministic
/// quasi-uniform set (hemisphere spiral plus its mirror image) so the grid
/// is closed under negation. The generation seed is recorded.
class DirectionGrid {
public:
    static std::shared_ptr<const DirectionGrid> standard(int n, int size = 0,
                                                         std::uint64_t seed = 0);
    static int default_size(int n);

    int dim() const { return n_; }
    int size() const { return static_cast<int>(dirs_.size()); }
    std::uint64_t seed() const { return seed_; }
    const Vec& dir(int j) const { return dirs_[j]; }
    const std::vector<Vec>& dirs() const { return dirs_; }

    /// Index of -u_j; the grid is closed under negation by construction.
    int negation_index(int j) const;

    /// Angle of u_j (n=2 only).
    double angle(int j) const { return kTwoPi * j / size(); }
    double delta_theta() const { return kTwoPi / size(); }

    bool compatible_with(const DirectionGrid& other) const {
        return n_ == other.n_ && size() == other.size() && seed_ == other.seed_;
    }

private:
    DirectionGrid(int n, int size, std::uint64_t seed);

    int n_;
    std::uint64_t seed_;
    std::vector<Vec> dirs_;
};

enum class BodyKind { HPolytope, SupportGrid, Ball, Box, Ellipsoid };

std::string to_string(BodyKind k);

/// Immutable convex body. Analytic primitives (ball, box, ellipsoid) keep
/// exact support/membership/radial formulas; H-polytopes are exact via their
/// half-spaces (support through vertex enumeration, n <= 3); gridded support
/// functions use periodic cubic interpolation in 2-D and are understood as
/// the polytope relaxation {x : <x,u_j> <= h_j} for membership and measure.
class ConvexBody {
public:
    static ConvexBody ball(int n, double r);
    static ConvexBody box(const std::vector<double>& halfwidths);
    static ConvexBody ellipsoid(const std::vector<double>& semi_axes);
    /// Normals need not be unit; they are normalized and offsets rescaled.
    static ConvexBody hpolytope(std::vector<Vec> normals, std::vector<double> offsets);
    static ConvexBody support_grid(std::shared_ptr<const DirectionGrid> grid,
                                   std::vector<double> values);

    BodyKind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool is_symmetric() const { return symmetric_; }
    bool contains_origin() const { return contains_origin_; }
    bool bounded() const { return bounded_; }

    /// h_K(u) = sup_{x in K} <x,u>; requires |u| = 1 within 1e-10.
    double support(const Vec& u) const;
    /// Membership; boundary counts as inside.
    bool contains(const Vec& x) const;
    /// r(u) = sup{t >= 0 : t u in K}; requires the origin to lie in K.
    double radial(const Vec& u) const;
    /// Scales the body by t > 0 about the origin.
    ConvexBody dilate(double t) const;

    // Representation accessors (valid for the matching kind only).
    double ball_radius() const { return params_[0]; }
    const std::vector<double>& box_halfwidths() const { return params_; }
    const std::vector<double>& ellipsoid_axes() const { return params_; }
    const std::vector<Vec>& polytope_normals() const { return normals_; }
    const std::vector<double>& polytope_offsets() const { return params_; }
    const std::vector<Vec>& polytope_vertices() const { return vertices_; }
    const std::shared_ptr<const DirectionGrid>& grid() const { return grid_; }
    const std::vector<double>& grid_values() const { return params_; }
    const PeriodicSpline& support_spline() const;

    /// Support values sampled on an arbitrary grid (exact per representation;
    /// for a SupportGrid body the grid must match its own).
    std::vector<double> support_values_on(const DirectionGrid& g) const;

    /// Radius of a ball guaranteed to contain the body (used as a Monte
    /// Carlo pre-check). Infinity when unbounded.
    double outer_radius() const;
    /// Radius of a ball guaranteed to be contained in the body (0 when the
    /// origin is not known to be interior).
    double inner_radius() const;

private:
    ConvexBody() = default;
    void finalize_flags();

    BodyKind kind_ = BodyKind::Ball;
    int dim_ = 0;
    bool symmetric_ = false;
    bool contains_origin_ = false;
    bool bounded_ = true;

    // params_: radius | halfwidths | semi-axes | offsets | grid values.
    std::vector<double> params_;
    std::vector<Vec> normals_;
    std::vector<Vec> vertices_;  // HPolytope, n <= 3
    std::shared_ptr<const DirectionGrid> grid_;
    std::shared_ptr<const PeriodicSpline> spline_;  // SupportGrid, n = 2
};

/// Body with support lambda*h_K + (1-lambda)*h_L. Exact primitive when both
/// inputs are balls or boxes, otherwise a SupportGrid on a common grid.
ConvexBody minkowski_comb(const ConvexBody& K, const ConvexBody& L, double lambda,
                          std::shared_ptr<const DirectionGrid> grid = nullptr);

/// Discretized 2-D boundary in support parametrization:
/// x(theta) = h u + h' u_perp, outward normal u(theta), curvature radius
/// rho = h + h'' (second-difference form), arclength weight rho * dtheta.
struct BoundaryCurve2D {
    std::vector<double> theta;
    std::vector<double> h;
    std::vector<double> dh;   // central-difference h'
    std::vector<double> rho;  // h + second-difference h''
    std::vector<Vec> point;
    std::vector<Vec> normal;
    double dtheta = 0.0;

    int size() const { return static_cast<int>(theta.size()); }
    double perimeter() const;
};

/// Requires n=2 and discrete curvature radius >= rho_min at every node;
/// otherwise throws precondition_error naming the first offending angle.
BoundaryCurve2D boundary_curve_2d(const ConvexBody& K, int M, double rho_min = 1e-6);

/// One-parameter family of support functions h + s*psi over s in
/// [s_min, s_max], validated to stay a support function (rho >= rho_min,
/// h > 0) on the whole interval (rho is linear in s, so endpoint checks
/// suffice).
class BodyFamily {
public:
    BodyFamily(const ConvexBody& base, std::vector<double> psi, double s_min, double s_max,
               int grid_size = 0, double rho_min = 1e-9);

    const ConvexBody& base() const { return base_; }
    const std::vector<double>& psi() const { return psi_; }
    double s_min() const { return s_min_; }
    double s_max() const { return s_max_; }

    ConvexBody at(double s) const;

private:
    ConvexBody base_;
    std::vector<double> psi_;
    double s_min_, s_max_;
};

/// Axis-aligned square of half-width a as a Box body.
ConvexBody make_square(double a = 1.0);

/// Smooth C2+ stand-in for the eps-rounded square: the square's support
/// function mollified in angle (Gaussian filter of width sigma) plus an
/// eps-ball, sampled on an M-grid. Discrete curvature radius >= eps with the
/// edge mass resolved over a few nodes, so curve operations are accurate.
ConvexBody make_smoothed_square(double eps, double a = 1.0, int M = 0, double sigma = 0.0);

}  // namespace gz
