#include "gz/quadrature.hpp"

#include <cmath>

namespace gz {

namespace {

// K15 abscissae on [-1,1] (positive half) and weights; G7 weights sit on the
// odd-index abscissae. Values from the usual QUADPACK tables.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double value;
    double error;
};

Panel k15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double k = kWgk[7] * fc;
    double g = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double fv = f(c - h * kXgk[i]) + f(c + h * kXgk[i]);
        k += kWgk[i] * fv;
        if (i % 2 == 1) g += kWg[i / 2] * fv;
    }
    k *= h;
    g *= h;
    // QUADPACK-style sharpened error estimate is overkill here; the plain
    // |K15-G7| difference is already conservative for our integrands.
    return {k, std::abs(k - g)};
}

void refine(const std::function<double(double)>& f, double a, double b, double atol, double rtol,
            int depth, int force, QuadResult& acc) {
    if (force <= 0) {
        Panel p = k15(f, a, b);
        acc.evals += 15;
        if (depth <= 0 || p.error <= atol || p.error <= rtol * std::abs(p.value)) {
            acc.value += p.value;
            acc.error += p.error;
            return;
        }
    }
    double m = 0.5 * (a + b);
    refine(f, a, m, 0.5 * atol, rtol, depth - 1, force - 1, acc);
    refine(f, m, b, 0.5 * atol, rtol, depth - 1, force - 1, acc);
}

}  // namespace

QuadResult gk15_panel(const std::function<double(double)>& f, double a, double b) {
    Panel p = k15(f, a, b);
    return {p.value, p.error, 15};
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double atol,
                     double rtol, int max_depth, int min_depth) {
    if (a == b) return {0.0, 0.0, 0};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    QuadResult acc;
    refine(f, a, b, atol, rtol, max_depth, min_depth, acc);
    acc.value *= sign;
    return acc;
}

}  // namespace gz
