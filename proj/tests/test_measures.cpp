#include <cmath>

#include "doctest.h"
#include "gz/measures.hpp"
#include "gz/rng.hpp"

using namespace gz;

namespace {

std::vector<Vec> sample_points(int n, int count) {
    std::vector<Vec> pts;
    Vec x;
    for (int i = 0; i < count; ++i) {
        gaussian_sample(RngSpec{321, 0}, i, n, x);
        pts.push_back(x);
    }
    return pts;
}

}  // namespace

TEST_CASE("gaussian potential basics") {
    Potential g = make_gaussian(2);
    CHECK(g.V(Vec{3.0, 4.0}) == doctest::Approx(12.5));
    Vec grad = g.gradV(Vec{0.3, -0.7});
    CHECK(grad[0] == doctest::Approx(0.3));
    CHECK(grad[1] == doctest::Approx(-0.7));
    CHECK(g.R() == doctest::Approx(1.0));
    CHECK(g.is_even);
}

TEST_CASE("diag quadratic: declared bounds") {
    Potential p = make_diag_quadratic({1.0, 4.0});
    CHECK(p.k1 == doctest::Approx(1.0));
    CHECK(p.k2 == doctest::Approx(2.5));
    CHECK(p.R() == doctest::Approx(2.5));
    Potential q = make_diag_quadratic({1.0, 1.0});
    CHECK(q.V(Vec{1.0, 2.0}) == doctest::Approx(make_gaussian(2).V(Vec{1.0, 2.0})));
    CHECK_THROWS_AS(make_diag_quadratic({1.0, -1.0}), input_error);
}

TEST_CASE("check_bounds passes honest declarations and flags a false one") {
    auto pts = sample_points(2, 100);
    CHECK(check_bounds(make_gaussian(2), pts).pass);
    BoundsReport r = check_bounds(make_diag_quadratic({1.0, 4.0}), pts);
    CHECK(r.pass);
    CHECK(r.min_eigenvalue == doctest::Approx(1.0));
    CHECK(r.max_trace_over_n == doctest::Approx(2.5));

    Potential lying = make_gaussian(2);
    lying.k1 = 2.0;  // deliberate misdeclaration
    CHECK_FALSE(check_bounds(lying, pts).pass);
}

TEST_CASE("smallest eigenvalue of a non-diagonal symmetric matrix") {
    // tridiag(1,2,1) of size 3 has eigenvalues 2 and 2 +- sqrt(2)
    SymMat m(3);
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = 2.0;
    m.at(0, 1) = m.at(1, 0) = 1.0;
    m.at(1, 2) = m.at(2, 1) = 1.0;
    CHECK(min_eigenvalue(m) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("gradient and hessian agree with finite differences (property)") {
    Potential p = make_diag_quadratic({0.5, 2.0, 3.0});
    auto pts = sample_points(3, 100);
    const double h = 1e-5;
    for (const Vec& x : pts) {
        Vec g = p.gradV(x);
        for (int i = 0; i < 3; ++i) {
            Vec xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            double fd = (p.V(xp) - p.V(xm)) / (2.0 * h);
            CHECK(fd == doctest::Approx(g[i]).epsilon(1e-6));
            double fd2 = (p.gradV(xp)[i] - p.gradV(xm)[i]) / (2.0 * h);
            CHECK(fd2 == doctest::Approx(p.hessV(x).at(i, i)).epsilon(1e-6));
        }
    }
}

TEST_CASE("evenness at sampled points") {
    Potential p = make_diag_quadratic({1.0, 2.0});
    for (const Vec& x : sample_points(2, 50)) {
        CHECK(p.V(x) == doctest::Approx(p.V(-x)).epsilon(1e-10));
        Vec gp = p.gradV(x), gm = p.gradV(-x);
        CHECK(norm(gp + gm) < 1e-10);
    }
}

TEST_CASE("custom potentials require all oracles") {
    auto v = [](const Vec& x) { return 0.5 * norm2(x) + 0.1 * x[0] * x[0] * x[0] * x[0]; };
    CHECK_THROWS_AS(make_custom(2, v, nullptr, nullptr, 1.0, 2.0, true), input_error);
}
