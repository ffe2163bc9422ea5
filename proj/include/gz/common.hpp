#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gz {

inline constexpr const char* kVersion = "0.1.0";

/// Hard cap on the ambient dimension; keeps point storage inline and
/// allocation-free in sampling loops.
inline constexpr int kMaxDim = 8;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Bad arguments, malformed specs, dimension mismatches. Maps to CLI exit 2.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A stated hypothesis of an operation does not hold for the given inputs
/// (origin not contained, body not smooth enough, ...). Maps to CLI exit 2.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-capacity Euclidean vector of runtime dimension n <= kMaxDim.
struct Vec {
    std::array<double, kMaxDim> x{};
    int n = 0;

    Vec() = default;
    explicit Vec(int dim) : n(dim) {
        if (dim < 0 || dim > kMaxDim) throw input_error("Vec: dimension out of range");
    }
    Vec(std::initializer_list<double> vals) : n(static_cast<int>(vals.size())) {
        if (n > kMaxDim) throw input_error("Vec: dimension out of range");
        int i = 0;
        for (double v : vals) x[i++] = v;
    }
    static Vec from(const std::vector<double>& v) {
        Vec out(static_cast<int>(v.size()));
        for (int i = 0; i < out.n; ++i) out.x[i] = v[i];
        return out;
    }

    double& operator[](int i) { return x[i]; }
    double operator[](int i) const { return x[i]; }
    int dim() const { return n; }

    std::vector<double> to_vector() const { return std::vector<double>(x.begin(), x.begin() + n); }
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (int i = 0; i < a.n; ++i) s += a.x[i] * b.x[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.n);
    for (int i = 0; i < a.n; ++i) r.x[i] = a.x[i] + b.x[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.n);
    for (int i = 0; i < a.n; ++i) r.x[i] = a.x[i] - b.x[i];
    return r;
}

inline Vec operator*(double t, const Vec& a) {
    Vec r(a.n);
    for (int i = 0; i < a.n; ++i) r.x[i] = t * a.x[i];
    return r;
}

inline Vec operator-(const Vec& a) { return -1.0 * a; }

inline Vec normalized(const Vec& a) {
    double m = norm(a);
    if (m == 0.0) throw input_error("normalized: zero vector");
    return (1.0 / m) * a;
}

inline Vec unit2(double theta) { return Vec{std::cos(theta), std::sin(theta)}; }

/// Symmetric matrix with inline storage, used for potential Hessians.
struct SymMat {
    std::array<double, kMaxDim * kMaxDim> a{};
    int n = 0;

    explicit SymMat(int dim = 0) : n(dim) {}
    double& at(int i, int j) { return a[i * kMaxDim + j]; }
    double at(int i, int j) const { return a[i * kMaxDim + j]; }

    double trace() const {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += at(i, i);
        return s;
    }
};

/// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi sweeps.
/// Dimensions here are tiny (<= kMaxDim) so this is plenty.
double min_eigenvalue(SymMat m);

/// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

}  // namespace gz
