#include <cmath>

#include "doctest.h"
#include "gz/integrals.hpp"
#include "gz/random_bodies.hpp"

using namespace gz;

namespace {

IntegrateOptions opts_mc(std::int64_t budget = 400000, std::uint64_t seed = 17) {
    IntegrateOptions o;
    o.method = Method::MonteCarlo;
    o.budget = budget;
    o.rng = RngSpec{seed, 0};
    return o;
}

IntegrateOptions opts_radial() {
    IntegrateOptions o;
    o.method = Method::Radial;
    return o;
}

}  // namespace

TEST_CASE("closed forms: gaussian discs, intervals, boxes") {
    Potential g1 = make_gaussian(1);
    Potential g2 = make_gaussian(2);
    Potential g3 = make_gaussian(3);
    CHECK(closed_form_mu(g2, ConvexBody::ball(2, 1.0))->value ==
          doctest::Approx(0.393469).epsilon(1e-5));
    CHECK(closed_form_mu(g2, ConvexBody::ball(2, 2.0))->value ==
          doctest::Approx(0.864665).epsilon(1e-5));
    CHECK(closed_form_mu(g1, ConvexBody::box({1.0}))->value ==
          doctest::Approx(0.682689).epsilon(1e-5));
    double e = std::erf(1.0 / std::sqrt(2.0));
    CHECK(closed_form_mu(g3, ConvexBody::box({1.0, 1.0, 1.0}))->value ==
          doctest::Approx(e * e * e).epsilon(1e-12));
    CHECK(closed_form_mu(g2, ConvexBody::box({1.0, 2.0}))->value ==
          doctest::Approx(std::erf(1.0 / std::sqrt(2.0)) * std::erf(2.0 / std::sqrt(2.0)))
              .epsilon(1e-12));
    // declared coverage: no closed form for the 3-D ball or the ellipse
    CHECK_FALSE(closed_form_mu(g3, ConvexBody::ball(3, 1.0)).has_value());
    CHECK_FALSE(closed_form_mu(g2, ConvexBody::ellipsoid({2.0, 1.0})).has_value());
    // diag-quadratic box: product of 1-D masses
    Potential dq = make_diag_quadratic({1.0, 4.0});
    double want = std::erf(1.0 / std::sqrt(2.0)) * std::erf(2.0 * 1.0 / std::sqrt(2.0));
    CHECK(closed_form_mu(dq, ConvexBody::box({1.0, 1.0}))->value ==
          doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("radial quadrature agrees with closed forms to 1e-8") {
    Potential g2 = make_gaussian(2);
    Potential g1 = make_gaussian(1);
    auto radial = opts_radial();
    for (double r : {0.5, 1.0, 2.0}) {
        Estimate e = mu_of_body(g2, ConvexBody::ball(2, r), radial);
        CHECK(e.stderr_ == 0.0);
        CHECK(std::abs(e.value - closed_form_mu(g2, ConvexBody::ball(2, r))->value) < 1e-8);
    }
    // the polygonal path: boxes have kinked radial functions
    for (auto w : {std::vector<double>{1.0, 1.0}, {1.0, 2.0}, {0.4, 1.7}}) {
        Estimate e = mu_of_body(g2, ConvexBody::box(w), radial);
        CHECK(std::abs(e.value - closed_form_mu(g2, ConvexBody::box(w))->value) < 1e-8);
    }
    CHECK(std::abs(mu_of_body(g1, ConvexBody::box({1.3}), radial).value -
                   std::erf(1.3 / std::sqrt(2.0))) < 1e-8);
    Potential dq = make_diag_quadratic({1.0, 4.0});
    CHECK(std::abs(mu_of_body(dq, ConvexBody::box({1.0, 0.7}), radial).value -
                   closed_form_mu(dq, ConvexBody::box({1.0, 0.7}))->value) < 1e-8);
}

TEST_CASE("radial handles polytopes and grid bodies") {
    Potential g2 = make_gaussian(2);
    // square as an H-polytope equals the box
    ConvexBody sq = ConvexBody::hpolytope(
        {Vec{1.0, 0.0}, Vec{-1.0, 0.0}, Vec{0.0, 1.0}, Vec{0.0, -1.0}}, {1.0, 1.0, 1.0, 1.0});
    CHECK(std::abs(mu_of_body(g2, sq, opts_radial()).value -
                   closed_form_mu(g2, ConvexBody::box({1.0, 1.0}))->value) < 1e-8);
    // grid relaxation of a disc converges from above as the grid refines
    for (int M : {90, 360}) {
        auto grid = DirectionGrid::standard(2, M);
        ConvexBody ball_grid =
            ConvexBody::support_grid(grid, ConvexBody::ball(2, 1.0).support_values_on(*grid));
        double mu = mu_of_body(g2, ball_grid, opts_radial()).value;
        double exact = closed_form_mu(g2, ConvexBody::ball(2, 1.0))->value;
        CHECK(mu >= exact - 1e-12);
        CHECK(mu - exact < (M == 90 ? 5e-4 : 5e-5));
    }
}

TEST_CASE("monte carlo agrees with closed forms within 4 stderr") {
    Potential g2 = make_gaussian(2);
    Potential g3 = make_gaussian(3);
    struct Case {
        Potential p;
        ConvexBody k;
    };
    std::vector<Case> cases = {{g2, ConvexBody::ball(2, 1.0)},
                               {g2, ConvexBody::box({1.0, 2.0})},
                               {g3, ConvexBody::box({1.0, 1.0, 1.0})},
                               {make_diag_quadratic({1.0, 4.0}), ConvexBody::box({1.0, 1.0})}};
    int i = 0;
    for (const auto& cse : cases) {
        Estimate mc = mu_of_body(cse.p, cse.k, opts_mc(400000, 1000 + i++));
        double exact = closed_form_mu(cse.p, cse.k)->value;
        CHECK(std::abs(mc.value - exact) < 4.0 * mc.stderr_);
        CHECK(mc.stderr_ > 0.0);
    }
}

TEST_CASE("mc is bit-identical across exec policies (serial reference)") {
    Potential g3 = make_gaussian(3);
    ConvexBody k = random_origin_hpolytope(3, 99, 0);
    IntegrateOptions par = opts_mc(100000, 5);
    IntegrateOptions ser = par;
    ser.exec = ExecPolicy::Serial;
    Estimate a = mu_of_body(g3, k, par);
    Estimate b = mu_of_body(g3, k, ser);
    CHECK(a.value == b.value);
    CHECK(a.stderr_ == b.stderr_);

    // same for the radial engine
    Potential g2 = make_gaussian(2);
    ConvexBody kg = random_sym_grid_2d(99, 1, 240);
    IntegrateOptions rp = opts_radial();
    IntegrateOptions rs = rp;
    rs.exec = ExecPolicy::Serial;
    CHECK(mu_of_body(g2, kg, rp).value == mu_of_body(g2, kg, rs).value);
}

TEST_CASE("identical rng spec implies bit-identical estimates") {
    Potential g2 = make_gaussian(2);
    ConvexBody k = ConvexBody::ball(2, 1.0);
    Estimate a = mu_of_body(g2, k, opts_mc(200000, 42));
    Estimate b = mu_of_body(g2, k, opts_mc(200000, 42));
    CHECK(a.value == b.value);
    Estimate c = mu_of_body(g2, k, opts_mc(200000, 43));
    CHECK(a.value != c.value);
}

TEST_CASE("radial monotonicity under support dominance (property)") {
    Potential g2 = make_gaussian(2);
    for (int i = 0; i < 8; ++i) {
        ConvexBody k = random_sym_grid_2d(7, i, 240);
        // L dominates K on the grid by construction
        std::vector<double> hl = k.grid_values();
        for (double& v : hl) v *= 1.13;
        ConvexBody l = ConvexBody::support_grid(k.grid(), hl);
        double mk = mu_of_body(g2, k, opts_radial()).value;
        double ml = mu_of_body(g2, l, opts_radial()).value;
        CHECK(mk <= ml + 1e-10);
    }
}

TEST_CASE("moment examples: gaussian moments and the 0.298 integral") {
    Potential g2 = make_gaussian(2);
    ConvexBody plane = proxy_ball(2);
    // E|x|^2 = n
    Estimate m2 = moment(g2, plane, [](const Vec& x) { return norm2(x); }, opts_mc(400000, 3));
    CHECK(std::abs(m2.value - 2.0) < 3.0 * m2.stderr_);
    // E|x|^4 = n(n+2), cross-checked by radial quadrature
    auto f4 = [](const Vec& x) {
        double t = norm2(x);
        return t * t;
    };
    Estimate m4_mc = moment(g2, plane, f4, opts_mc(2000000, 4));
    Estimate m4_rad = moment(g2, plane, f4, opts_radial());
    CHECK(std::abs(m4_rad.value - 8.0) < 1e-8);
    CHECK(std::abs(m4_mc.value - m4_rad.value) < 4.0 * m4_mc.stderr_);
    // the normalized 1/(|x|^2+2) integral
    Estimate e = moment(g2, plane, [](const Vec& x) { return 1.0 / (norm2(x) + 2.0); },
                        opts_radial());
    CHECK(std::abs(e.value - 0.298) < 0.002);
    // oracle: e * E1(1) / 2 via the exponential-integral series
    double gamma_e = 0.57721566490153286;
    double e1 = -gamma_e - std::log(1.0);
    double term = 1.0;  // (-1)^k / k!
    for (int k = 1; k <= 30; ++k) {
        term *= -1.0 / k;
        e1 -= term / k;
    }
    double oracle = std::exp(1.0) * e1 / 2.0;
    CHECK(e.value == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("custom potentials: unnormalized measure through both engines") {
    // V = |x|^2/2 + 0.2 x0 x1: a tilted gaussian with Hessian [[1,.2],[.2,1]]
    auto v = [](const Vec& x) { return 0.5 * norm2(x) + 0.2 * x[0] * x[1]; };
    auto grad = [](const Vec& x) {
        return Vec{x[0] + 0.2 * x[1], x[1] + 0.2 * x[0]};
    };
    auto hess = [](const Vec&) {
        SymMat h(2);
        h.at(0, 0) = h.at(1, 1) = 1.0;
        h.at(0, 1) = h.at(1, 0) = 0.2;
        return h;
    };
    Potential p = make_custom(2, v, grad, hess, 0.8, 1.0, true);
    CHECK_FALSE(p.normalized);
    BoundsReport br = check_bounds(p, {Vec{0.3, -0.8}, Vec{1.0, 1.0}});
    CHECK(br.pass);
    CHECK(br.min_eigenvalue == doctest::Approx(0.8).epsilon(1e-9));

    ConvexBody k = ConvexBody::ball(2, 1.2);
    Estimate rad = mu_of_body(p, k, opts_radial());
    Estimate mc = mu_of_body(p, k, opts_mc(400000, 555));
    CHECK(rad.stderr_ == 0.0);
    CHECK(std::abs(mc.value - rad.value) < 4.0 * mc.stderr_);
    // sanity: between the masses of the c=1.2 and c=0.8 diagonal gaussians
    CHECK(rad.value < kTwoPi);
    CHECK(rad.value > 0.0);

    // the same potential without the tilt reproduces the gaussian ball mass
    auto v0 = [](const Vec& x) { return 0.5 * norm2(x); };
    auto grad0 = [](const Vec& x) { return x; };
    auto hess0 = [](const Vec&) {
        SymMat h(2);
        h.at(0, 0) = h.at(1, 1) = 1.0;
        return h;
    };
    Potential g0 = make_custom(2, v0, grad0, hess0, 1.0, 1.0, true);
    Estimate e0 = mu_of_body(g0, k, opts_radial());
    double want = kTwoPi * (-std::expm1(-0.5 * 1.2 * 1.2));  // unnormalized
    CHECK(e0.value == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("monte carlo radius prechecks never disagree with membership") {
    // the in/out quick tests are containment facts, not approximations
    UniformSequence u(RngSpec{88, 0});
    for (int i = 0; i < 4; ++i) {
        ConvexBody k = random_origin_grid_2d(88, i, 120);
        double r_in = k.inner_radius(), r_out = k.outer_radius();
        for (int t = 0; t < 400; ++t) {
            Vec x{u.next_in(-2.5, 2.5), u.next_in(-2.5, 2.5)};
            if (norm(x) <= r_in) CHECK(k.contains(x));
            if (k.contains(x)) CHECK(norm(x) <= r_out + 1e-12);
        }
    }
    ConvexBody poly = random_origin_hpolytope(3, 88, 0);
    double r_in = poly.inner_radius(), r_out = poly.outer_radius();
    for (int t = 0; t < 400; ++t) {
        Vec x{u.next_in(-2, 2), u.next_in(-2, 2), u.next_in(-2, 2)};
        if (norm(x) <= r_in) CHECK(poly.contains(x));
        if (poly.contains(x)) CHECK(norm(x) <= r_out + 1e-12);
    }
}

TEST_CASE("error paths") {
    Potential g3 = make_gaussian(3);
    IntegrateOptions o = opts_radial();
    CHECK_THROWS_AS(mu_of_body(g3, ConvexBody::ball(3, 1.0), o), precondition_error);
    IntegrateOptions tiny = opts_mc(50);
    CHECK_THROWS_AS(mu_of_body(make_gaussian(2), ConvexBody::ball(2, 1.0), tiny), input_error);
    CHECK_THROWS_AS(mu_of_body(make_gaussian(2), ConvexBody::ball(3, 1.0), opts_mc()),
                    input_error);
}
