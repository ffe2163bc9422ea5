#include <cmath>

#include "doctest.h"
#include "gz/quadrature.hpp"

using namespace gz;

TEST_CASE("polynomials are integrated exactly") {
    auto q = integrate([](double t) { return t * t * t - 2.0 * t + 1.0; }, -1.0, 3.0);
    // antiderivative t^4/4 - t^2 + t
    double want = (81.0 / 4.0 - 9.0 + 3.0) - (0.25 - 1.0 - 1.0);
    CHECK(q.value == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("gaussian mass against erf") {
    auto f = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * kPi); };
    for (double r : {0.5, 1.0, 2.5, 6.0}) {
        auto q = integrate(f, -r, r, 1e-13, 1e-13);
        CHECK(q.value == doctest::Approx(std::erf(r / std::sqrt(2.0))).epsilon(1e-12));
    }
}

TEST_CASE("adaptivity localizes a sharp peak") {
    auto f = [](double t) { return std::exp(-1000.0 * (t - 0.3) * (t - 0.3)); };
    auto q = integrate(f, 0.0, 50.0, 1e-12, 1e-12);
    double want = std::sqrt(kPi / 1000.0);  // whole-line mass; tails are negligible
    CHECK(q.value == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("kinks are handled by subdivision") {
    auto q = integrate([](double t) { return std::abs(t); }, -1.0, 2.0, 1e-12, 1e-12);
    CHECK(q.value == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("orientation flip negates the value") {
    auto f = [](double t) { return t * t; };
    CHECK(integrate(f, 2.0, 0.0).value == doctest::Approx(-8.0 / 3.0).epsilon(1e-13));
}
