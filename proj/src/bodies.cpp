#include "gz/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gz/rng.hpp"

namespace gz {

namespace {

constexpr double kUnitTol = 1e-10;
constexpr double kSymTol = 1e-10;
constexpr double kRhoValidTol = -1e-8;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_unit(const Vec& u) {
    if (std::abs(norm(u) - 1.0) > kUnitTol) throw input_error("direction is not a unit vector");
}

// Solves A v = b for n = 2,3 by Cramer's rule; returns false when the
// system is close to singular.
bool solve_small(const std::vector<Vec>& rows, const std::vector<double>& rhs, Vec& out) {
    const int n = rows[0].dim();
    out = Vec(n);
    if (n == 2) {
        double det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
        if (std::abs(det) < 1e-12) return false;
        out[0] = (rhs[0] * rows[1][1] - rows[0][1] * rhs[1]) / det;
        out[1] = (rows[0][0] * rhs[1] - rhs[0] * rows[1][0]) / det;
        return true;
    }
    if (n == 3) {
        auto det3 = [](const Vec& a, const Vec& b, const Vec& c) {
            return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                   a[2] * (b[0] * c[1] - b[1] * c[0]);
        };
        double det = det3(rows[0], rows[1], rows[2]);
        if (std::abs(det) < 1e-12) return false;
        for (int col = 0; col < 3; ++col) {
            std::vector<Vec> m = rows;
            for (int r = 0; r < 3; ++r) m[r][col] = rhs[r];
            out[col] = det3(m[0], m[1], m[2]) / det;
        }
        return true;
    }
    return false;
}

// All vertices of {x : <a_i,x> <= b_i} for n <= 3 by facet intersection.
std::vector<Vec> enumerate_vertices(const std::vector<Vec>& a, const std::vector<double>& b) {
    const int n = a[0].dim();
    const int m = static_cast<int>(a.size());
    std::vector<Vec> verts;
    auto feasible = [&](const Vec& v) {
        for (int k = 0; k < m; ++k)
            if (dot(a[k], v) > b[k] + 1e-9) return false;
        return true;
    };
    auto push_unique = [&](const Vec& v) {
        for (const Vec& w : verts)
            if (norm(v - w) < 1e-9) return;
        verts.push_back(v);
    };
    if (n == 1) {
        for (int i = 0; i < m; ++i) {
            Vec v(1);
            v[0] = b[i] / a[i][0];
            if (feasible(v)) push_unique(v);
        }
        return verts;
    }
    if (n == 2) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Vec v;
                if (solve_small({a[i], a[j]}, {b[i], b[j]}, v) && feasible(v)) push_unique(v);
            }
        return verts;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                Vec v;
                if (solve_small({a[i], a[j], a[k]}, {b[i], b[j], b[k]}, v) && feasible(v))
                    push_unique(v);
            }
    return verts;
}

}  // namespace

// ---------------------------------------------------------------------------
// DirectionGrid

int DirectionGrid::default_size(int n) {
    if (n == 1) return 2;
    if (n == 2) return 720;
    return 2048;
}

DirectionGrid::DirectionGrid(int n, int size, std::uint64_t seed) : n_(n), seed_(seed) {
    if (n < 1 || n > kMaxDim) throw input_error("DirectionGrid: dimension out of range");
    if (n == 1) {
        dirs_ = {Vec{1.0}, Vec{-1.0}};
        return;
    }
    if (size < 4 || size % 2 != 0)
        throw input_error("DirectionGrid: size must be even and >= 4");
    dirs_.reserve(size);
    if (n == 2) {
        for (int j = 0; j < size; ++j) dirs_.push_back(unit2(kTwoPi * j / size));
        return;
    }
    // Quasi-uniform hemisphere (golden-angle spiral in the first n-1 == 2
    // case; seeded Gaussian directions above n = 3), mirrored for closure
    // under negation.
    const int half = size / 2;
    UniformSequence rot_seq(RngSpec{seed, 0xD1EC7105u});
    if (n == 3) {
        const double golden = 0.6180339887498949;
        const double rot = rot_seq.at(0);
        for (int i = 0; i < half; ++i) {
            double z = (i + 0.5) / half;  // (0,1)
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double phi = kTwoPi * std::fmod(i * golden + rot, 1.0);
            dirs_.push_back(Vec{r * std::cos(phi), r * std::sin(phi), z});
        }
    } else {
        for (int i = 0; i < half; ++i) {
            Vec g;
            gaussian_sample(RngSpec{seed, 0xD1EC7105u}, static_cast<std::uint64_t>(i), n, g);
            if (norm(g) < 1e-12) g[0] = 1.0;
            g = normalized(g);
            if (g[n - 1] < 0.0) g = -g;
            dirs_.push_back(g);
        }
    }
    for (int i = 0; i < half; ++i) dirs_.push_back(-dirs_[i]);
}

std::shared_ptr<const DirectionGrid> DirectionGrid::standard(int n, int size, std::uint64_t seed) {
    if (size == 0) size = default_size(n);
    return std::shared_ptr<const DirectionGrid>(new DirectionGrid(n, size, seed));
}

int DirectionGrid::negation_index(int j) const {
    if (n_ == 1) return 1 - j;
    int half = size() / 2;
    return (j + half) % size();
}

// ---------------------------------------------------------------------------
// ConvexBody

std::string to_string(BodyKind k) {
    switch (k) {
        case BodyKind::HPolytope: return "hpolytope";
        case BodyKind::SupportGrid: return "supportgrid";
        case BodyKind::Ball: return "ball";
        case BodyKind::Box: return "box";
        case BodyKind::Ellipsoid: return "ellipsoid";
    }
    return "?";
}

void ConvexBody::finalize_flags() {
    switch (kind_) {
        case BodyKind::Ball:
        case BodyKind::Box:
        case BodyKind::Ellipsoid:
            symmetric_ = true;
            contains_origin_ = true;
            break;
        case BodyKind::HPolytope: {
            contains_origin_ = true;
            for (double b : params_)
                if (b < 0.0) contains_origin_ = false;
            // symmetric iff every facet has a mirror facet with equal offset
            symmetric_ = true;
            const int m = static_cast<int>(normals_.size());
            for (int i = 0; i < m && symmetric_; ++i) {
                bool found = false;
                for (int j = 0; j < m; ++j) {
                    if (norm(normals_[i] + normals_[j]) < kSymTol &&
                        std::abs(params_[i] - params_[j]) < kSymTol) {
                        found = true;
                        break;
                    }
                }
                symmetric_ = found;
            }
            break;
        }
        case BodyKind::SupportGrid: {
            contains_origin_ = true;
            for (double h : params_)
                if (h <= 0.0) contains_origin_ = false;
            symmetric_ = true;
            for (int j = 0; j < grid_->size() && symmetric_; ++j)
                if (std::abs(params_[j] - params_[grid_->negation_index(j)]) > kSymTol)
                    symmetric_ = false;
            break;
        }
    }
}

ConvexBody ConvexBody::ball(int n, double r) {
    if (n < 1 || n > kMaxDim) throw input_error("ball: dimension out of range");
    if (!(r > 0.0)) throw input_error("ball: radius must be positive");
    ConvexBody b;
    b.kind_ = BodyKind::Ball;
    b.dim_ = n;
    b.params_ = {r};
    b.finalize_flags();
    return b;
}

ConvexBody ConvexBody::box(const std::vector<double>& halfwidths) {
    const int n = static_cast<int>(halfwidths.size());
    if (n < 1 || n > kMaxDim) throw input_error("box: dimension out of range");
    for (double w : halfwidths)
        if (!(w > 0.0)) throw input_error("box: half-widths must be positive");
    ConvexBody b;
    b.kind_ = BodyKind::Box;
    b.dim_ = n;
    b.params_ = halfwidths;
    b.finalize_flags();
    return b;
}

ConvexBody ConvexBody::ellipsoid(const std::vector<double>& semi_axes) {
    const int n = static_cast<int>(semi_axes.size());
    if (n < 1 || n > kMaxDim) throw input_error("ellipsoid: dimension out of range");
    for (double a : semi_axes)
        if (!(a > 0.0)) throw input_error("ellipsoid: semi-axes must be positive");
    ConvexBody b;
    b.kind_ = BodyKind::Ellipsoid;
    b.dim_ = n;
    b.params_ = semi_axes;
    b.finalize_flags();
    return b;
}

ConvexBody ConvexBody::hpolytope(std::vector<Vec> normals, std::vector<double> offsets) {
    if (normals.empty() || normals.size() != offsets.size())
        throw input_error("hpolytope: normals/offsets size mismatch");
    const int n = normals[0].dim();
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (normals[i].dim() != n) throw input_error("hpolytope: mixed dimensions");
        double m = norm(normals[i]);
        if (m < 1e-14) throw input_error("hpolytope: zero normal");
        normals[i] = (1.0 / m) * normals[i];
        offsets[i] /= m;
    }
    ConvexBody b;
    b.kind_ = BodyKind::HPolytope;
    b.dim_ = n;
    b.normals_ = std::move(normals);
    b.params_ = std::move(offsets);
    if (n <= 3) {
        b.vertices_ = enumerate_vertices(b.normals_, b.params_);
        // Bounded iff every probe direction sees a supporting facet.
        auto probe = DirectionGrid::standard(n, n == 1 ? 0 : (n == 2 ? 64 : 256));
        b.bounded_ = !b.vertices_.empty();
        for (int j = 0; j < probe->size() && b.bounded_; ++j) {
            bool covered = false;
            for (const Vec& a : b.normals_)
                if (dot(a, probe->dir(j)) > 1e-9) {
                    covered = true;
                    break;
                }
            b.bounded_ = covered;
        }
    }
    b.finalize_flags();
    return b;
}

ConvexBody ConvexBody::support_grid(std::shared_ptr<const DirectionGrid> grid,
                                    std::vector<double> values) {
    if (!grid) throw input_error("support_grid: null grid");
    if (static_cast<int>(values.size()) != grid->size())
        throw input_error("support_grid: values/grid size mismatch");
    for (double h : values)
        if (!(h >= 0.0)) throw input_error("support_grid: values must be nonnegative");
    ConvexBody b;
    b.kind_ = BodyKind::SupportGrid;
    b.dim_ = grid->dim();
    b.grid_ = std::move(grid);
    b.params_ = std::move(values);
    if (b.dim_ == 2) {
        const int M = b.grid_->size();
        const double dt = b.grid_->delta_theta();
        for (int j = 0; j < M; ++j) {
            double rho = b.params_[j] + (b.params_[(j + 1) % M] - 2.0 * b.params_[j] +
                                         b.params_[(j + M - 1) % M]) /
                                            (dt * dt);
            if (rho < kRhoValidTol)
                throw input_error("support_grid: not a support function, rho = " +
                                  std::to_string(rho) + " at theta = " +
                                  std::to_string(b.grid_->angle(j)));
        }
        b.spline_ = std::make_shared<PeriodicSpline>(b.params_);
    }
    b.finalize_flags();
    return b;
}

const PeriodicSpline& ConvexBody::support_spline() const {
    if (!spline_) throw input_error("support_spline: only available for 2-D support grids");
    return *spline_;
}

double ConvexBody::support(const Vec& u) const {
    if (u.dim() != dim_) throw input_error("support: dimension mismatch");
    require_unit(u);
    switch (kind_) {
        case BodyKind::Ball: return params_[0];
        case BodyKind::Box: {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) s += params_[i] * std::abs(u[i]);
            return s;
        }
        case BodyKind::Ellipsoid: {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) s += params_[i] * params_[i] * u[i] * u[i];
            return std::sqrt(s);
        }
        case BodyKind::HPolytope: {
            if (dim_ > 3) throw input_error("support: H-polytope support needs n <= 3");
            if (!bounded_) throw precondition_error("support: polytope is unbounded");
            double s = -kInf;
            for (const Vec& v : vertices_) s = std::max(s, dot(v, u));
            return s;
        }
        case BodyKind::SupportGrid: {
            if (dim_ == 1) return u[0] > 0.0 ? params_[0] : params_[1];
            if (dim_ == 2) return (*spline_)(std::atan2(u[1], u[0]));
            // n >= 3: grid-only evaluation
            for (int j = 0; j < grid_->size(); ++j)
                if (norm(grid_->dir(j) - u) < 1e-9) return params_[j];
            throw input_error("support: off-grid evaluation is 2-D only");
        }
    }
    return 0.0;
}

bool ConvexBody::contains(const Vec& x) const {
    if (x.dim() != dim_) throw input_error("contains: dimension mismatch");
    switch (kind_) {
        case BodyKind::Ball: return norm2(x) <= params_[0] * params_[0];
        case BodyKind::Box: {
            for (int i = 0; i < dim_; ++i)
                if (std::abs(x[i]) > params_[i]) return false;
            return true;
        }
        case BodyKind::Ellipsoid: {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) s += x[i] * x[i] / (params_[i] * params_[i]);
            return s <= 1.0;
        }
        case BodyKind::HPolytope: {
            for (std::size_t i = 0; i < normals_.size(); ++i)
                if (dot(normals_[i], x) > params_[i]) return false;
            return true;
        }
        case BodyKind::SupportGrid: {
            for (int j = 0; j < grid_->size(); ++j)
                if (dot(grid_->dir(j), x) > params_[j]) return false;
            return true;
        }
    }
    return false;
}

double ConvexBody::radial(const Vec& u) const {
    if (u.dim() != dim_) throw input_error("radial: dimension mismatch");
    require_unit(u);
    switch (kind_) {
        case BodyKind::Ball: return params_[0];
        case BodyKind::Box: {
            double r = kInf;
            for (int i = 0; i < dim_; ++i)
                if (u[i] != 0.0) r = std::min(r, params_[i] / std::abs(u[i]));
            return r;
        }
        case BodyKind::Ellipsoid: {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) s += u[i] * u[i] / (params_[i] * params_[i]);
            return 1.0 / std::sqrt(s);
        }
        case BodyKind::HPolytope: {
            for (double b : params_)
                if (b < 0.0) throw precondition_error("radial: origin is not in the body");
            double r = kInf;
            for (std::size_t i = 0; i < normals_.size(); ++i) {
                double d = dot(normals_[i], u);
                if (d > 0.0) r = std::min(r, params_[i] / d);
            }
            return r;
        }
        case BodyKind::SupportGrid: {
            double r = kInf;
            for (int j = 0; j < grid_->size(); ++j) {
                double d = dot(grid_->dir(j), u);
                if (d > 0.0) r = std::min(r, params_[j] / d);
            }
            return r;
        }
    }
    return 0.0;
}

ConvexBody ConvexBody::dilate(double t) const {
    if (!(t > 0.0)) throw input_error("dilate: factor must be positive");
    ConvexBody b = *this;
    for (double& p : b.params_) p *= t;
    for (Vec& v : b.vertices_) v = t * v;
    if (b.spline_) b.spline_ = std::make_shared<PeriodicSpline>(b.params_);
    return b;
}

std::vector<double> ConvexBody::support_values_on(const DirectionGrid& g) const {
    if (g.dim() != dim_) throw input_error("support_values_on: dimension mismatch");
    std::vector<double> vals(g.size());
    if (kind_ == BodyKind::SupportGrid) {
        if (!grid_->compatible_with(g))
            throw input_error("support_values_on: incompatible direction grids");
        return params_;
    }
    for (int j = 0; j < g.size(); ++j) vals[j] = support(g.dir(j));
    return vals;
}

double ConvexBody::outer_radius() const {
    switch (kind_) {
        case BodyKind::Ball: return params_[0];
        case BodyKind::Box: {
            double s = 0.0;
            for (double w : params_) s += w * w;
            return std::sqrt(s);
        }
        case BodyKind::Ellipsoid: return *std::max_element(params_.begin(), params_.end());
        case BodyKind::HPolytope: {
            if (!bounded_ || vertices_.empty()) return kInf;
            double r = 0.0;
            for (const Vec& v : vertices_) r = std::max(r, norm(v));
            return r;
        }
        case BodyKind::SupportGrid: {
            // |x| <= h_max / cos(covering angle). The covering angle is
            // exactly half the grid spacing for n <= 2; for n >= 3 no cheap
            // rigorous bound exists, and the pre-check must never exclude a
            // point of the body, so report unbounded there.
            double hmax = *std::max_element(params_.begin(), params_.end());
            if (dim_ == 1) return hmax;
            if (dim_ == 2) return hmax / std::cos(grid_->delta_theta() / 2.0);
            return kInf;
        }
    }
    return kInf;
}

double ConvexBody::inner_radius() const {
    switch (kind_) {
        case BodyKind::Ball: return params_[0];
        case BodyKind::Box:
        case BodyKind::Ellipsoid: return *std::min_element(params_.begin(), params_.end());
        case BodyKind::HPolytope: {
            double r = kInf;
            for (double b : params_) r = std::min(r, b);
            return std::max(0.0, r);
        }
        case BodyKind::SupportGrid: {
            double r = kInf;
            for (double h : params_) r = std::min(r, h);
            return std::max(0.0, r);
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Minkowski convex combination

ConvexBody minkowski_comb(const ConvexBody& K, const ConvexBody& L, double lambda,
                          std::shared_ptr<const DirectionGrid> grid) {
    if (K.dim() != L.dim()) throw input_error("minkowski_comb: dimension mismatch");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw input_error("minkowski_comb: lambda in [0,1]");
    if (lambda == 1.0) return K;
    if (lambda == 0.0) return L;

    if (K.kind() == BodyKind::Ball && L.kind() == BodyKind::Ball)
        return ConvexBody::ball(K.dim(),
                                lambda * K.ball_radius() + (1.0 - lambda) * L.ball_radius());
    if (K.kind() == BodyKind::Box && L.kind() == BodyKind::Box) {
        std::vector<double> w(K.dim());
        for (int i = 0; i < K.dim(); ++i)
            w[i] = lambda * K.box_halfwidths()[i] + (1.0 - lambda) * L.box_halfwidths()[i];
        return ConvexBody::box(w);
    }

    if (!grid) {
        if (K.kind() == BodyKind::SupportGrid)
            grid = K.grid();
        else if (L.kind() == BodyKind::SupportGrid)
            grid = L.grid();
        else
            grid = DirectionGrid::standard(K.dim());
    }
    std::vector<double> hk = K.support_values_on(*grid);
    std::vector<double> hl = L.support_values_on(*grid);
    std::vector<double> h(grid->size());
    for (int j = 0; j < grid->size(); ++j) h[j] = lambda * hk[j] + (1.0 - lambda) * hl[j];
    return ConvexBody::support_grid(std::move(grid), std::move(h));
}

// ---------------------------------------------------------------------------
// Boundary curve

double BoundaryCurve2D::perimeter() const {
    double s = 0.0;
    for (double r : rho) s += r * dtheta;
    return s;
}

BoundaryCurve2D boundary_curve_2d(const ConvexBody& K, int M, double rho_min) {
    if (K.dim() != 2) throw input_error("boundary_curve_2d: body must be 2-D");
    if (M < 8) throw input_error("boundary_curve_2d: need at least 8 nodes");
    if (K.kind() == BodyKind::Box || K.kind() == BodyKind::HPolytope)
        throw precondition_error(
            "boundary_curve_2d: body is not C2+ (flat facets have rho = 0 at theta = facet "
            "normal); smooth it first, e.g. by a Minkowski combination with a small ball");

    auto grid = (K.kind() == BodyKind::SupportGrid && K.grid()->size() == M)
                    ? K.grid()
                    : DirectionGrid::standard(2, M);
    BoundaryCurve2D c;
    c.dtheta = grid->delta_theta();
    c.theta.resize(M);
    c.h.resize(M);
    c.dh.resize(M);
    c.rho.resize(M);
    c.point.resize(M);
    c.normal.resize(M);

    if (K.kind() == BodyKind::Ball) {
        double r = K.ball_radius();
        for (int j = 0; j < M; ++j) {
            c.h[j] = r;
            c.dh[j] = 0.0;
            c.rho[j] = r;
        }
    } else if (K.kind() == BodyKind::Ellipsoid) {
        // support parametrization of the ellipse: rho = a^2 b^2 / h^3
        double a = K.ellipsoid_axes()[0], b = K.ellipsoid_axes()[1];
        for (int j = 0; j < M; ++j) {
            double t = grid->angle(j);
            double s = std::sin(t), co = std::cos(t);
            double h = std::sqrt(a * a * co * co + b * b * s * s);
            c.h[j] = h;
            c.dh[j] = (b * b - a * a) * s * co / h;
            c.rho[j] = a * a * b * b / (h * h * h);
        }
    } else {
        // gridded support function: spline resample if needed, second
        // differences for the curvature radius
        std::vector<double> h(M);
        if (K.grid()->size() != M) {
            const PeriodicSpline& s = K.support_spline();
            for (int j = 0; j < M; ++j) h[j] = s(grid->angle(j));
        } else {
            h = K.grid_values();
        }
        for (int j = 0; j < M; ++j) {
            double hp = h[(j + 1) % M], hm = h[(j + M - 1) % M];
            c.h[j] = h[j];
            c.dh[j] = (hp - hm) / (2.0 * c.dtheta);
            c.rho[j] = h[j] + (hp - 2.0 * h[j] + hm) / (c.dtheta * c.dtheta);
        }
    }
    for (int j = 0; j < M; ++j) {
        c.theta[j] = grid->angle(j);
        if (c.rho[j] < rho_min)
            throw precondition_error("boundary_curve_2d: body is not C2+ (rho = " +
                                     std::to_string(c.rho[j]) + " at theta = " +
                                     std::to_string(c.theta[j]) + ")");
        Vec u = grid->dir(j);
        Vec uperp{-u[1], u[0]};
        c.point[j] = c.h[j] * u + c.dh[j] * uperp;
        c.normal[j] = u;
    }
    return c;
}

// ---------------------------------------------------------------------------
// BodyFamily

namespace {

ConvexBody resample_to_grid(const ConvexBody& base, int grid_size) {
    if (base.dim() != 2) throw input_error("BodyFamily: 2-D only");
    auto grid = (base.kind() == BodyKind::SupportGrid && grid_size == 0)
                    ? base.grid()
                    : DirectionGrid::standard(2, grid_size == 0 ? 0 : grid_size);
    return ConvexBody::support_grid(grid, base.support_values_on(*grid));
}

}  // namespace

BodyFamily::BodyFamily(const ConvexBody& base, std::vector<double> psi, double s_min,
                       double s_max, int grid_size, double rho_min)
    : base_(resample_to_grid(base, grid_size)), psi_(std::move(psi)), s_min_(s_min),
      s_max_(s_max) {
    if (!(s_min <= s_max)) throw input_error("BodyFamily: empty interval");
    auto grid = base_.grid();
    if (static_cast<int>(psi_.size()) != grid->size())
        throw input_error("BodyFamily: psi size does not match grid");

    // rho and h are linear in s; endpoint validity covers the interval.
    const int M = grid->size();
    const double dt = grid->delta_theta();
    for (double s : {s_min_, s_max_}) {
        for (int j = 0; j < M; ++j) {
            double hj = base_.grid_values()[j] + s * psi_[j];
            double hp = base_.grid_values()[(j + 1) % M] + s * psi_[(j + 1) % M];
            double hm = base_.grid_values()[(j + M - 1) % M] + s * psi_[(j + M - 1) % M];
            double rho = hj + (hp - 2.0 * hj + hm) / (dt * dt);
            if (hj <= 0.0 || rho < rho_min)
                throw precondition_error("BodyFamily: family leaves the valid cone at s = " +
                                         std::to_string(s));
        }
    }
}

ConvexBody BodyFamily::at(double s) const {
    if (s < s_min_ - 1e-15 || s > s_max_ + 1e-15)
        throw input_error("BodyFamily::at: s outside the declared interval");
    std::vector<double> h = base_.grid_values();
    for (std::size_t j = 0; j < h.size(); ++j) h[j] += s * psi_[j];
    return ConvexBody::support_grid(base_.grid(), std::move(h));
}

// ---------------------------------------------------------------------------
// Stock bodies

ConvexBody make_square(double a) { return ConvexBody::box({a, a}); }

ConvexBody make_smoothed_square(double eps, double a, int M, double sigma) {
    if (!(eps > 0.0)) throw input_error("make_smoothed_square: eps must be positive");
    // double the default grid so curvature bumps span several nodes and the
    // polygon relaxation tracks the smooth body to ~1e-4
    if (M == 0) M = 2 * DirectionGrid::default_size(2);
    if (sigma == 0.0) sigma = 6.0 * kTwoPi / M;
    auto grid = DirectionGrid::standard(2, M);
    // Fourier series of |cos t|+|sin t| lives on multiples of 4; a Gaussian
    // angular filter then damps mode 4k by exp(-8 k^2 sigma^2).
    std::vector<double> h(M);
    for (int j = 0; j < M; ++j) {
        double t = grid->angle(j);
        double s = 4.0 / kPi;
        for (int k = 1; 8.0 * k * k * sigma * sigma < 40.0; ++k) {
            s -= (8.0 / kPi) * std::exp(-8.0 * k * k * sigma * sigma) *
                 std::cos(4.0 * k * t) / (16.0 * k * k - 1.0);
        }
        h[j] = a * s + eps;
    }
    return ConvexBody::support_grid(grid, std::move(h));
}

}  // namespace gz
