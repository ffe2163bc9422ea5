// Benchmark of the OpenMP kernels against the serial reference paths.
// Both reduce fixed-size chunks in index order, so the outputs must match
// bit for bit; this binary prints the timings, the speedup, and that check.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gz/integrals.hpp"
#include "gz/random_bodies.hpp"

using namespace gz;

namespace {

template <typename F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (ms < best) best = ms;
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both paths run serially\n\n");
#endif

    // Monte Carlo mass of a 3-D polytope
    {
        Potential g3 = make_gaussian(3);
        ConvexBody k = random_origin_hpolytope(3, 1, 0);
        IntegrateOptions par;
        par.method = Method::MonteCarlo;
        par.budget = 4'000'000;
        par.rng = RngSpec{11, 0};
        IntegrateOptions ser = par;
        ser.exec = ExecPolicy::Serial;
        Estimate ep, es;
        double tp = time_ms([&] { ep = mu_of_body(g3, k, par); });
        double ts = time_ms([&] { es = mu_of_body(g3, k, ser); });
        report("mc mu(K), n=3, 4M samples", ts, tp, ep.value == es.value);
    }

    // Monte Carlo moment over the plane proxy
    {
        Potential g2 = make_gaussian(2);
        ConvexBody plane = proxy_ball(2);
        auto f = [](const Vec& x) { return 1.0 / (norm2(x) + 2.0); };
        IntegrateOptions par;
        par.method = Method::MonteCarlo;
        par.budget = 4'000'000;
        par.rng = RngSpec{12, 0};
        IntegrateOptions ser = par;
        ser.exec = ExecPolicy::Serial;
        Estimate ep, es;
        double tp = time_ms([&] { ep = moment(g2, plane, f, par); });
        double ts = time_ms([&] { es = moment(g2, plane, f, ser); });
        report("mc moment, n=2, 4M samples", ts, tp, ep.value == es.value);
    }

    // Radial quadrature over a 720-facet grid body
    {
        Potential g2 = make_gaussian(2);
        ConvexBody k = random_sym_grid_2d(2, 0, 720);
        IntegrateOptions par;
        par.method = Method::Radial;
        IntegrateOptions ser = par;
        ser.exec = ExecPolicy::Serial;
        Estimate ep, es;
        double tp = time_ms([&] { ep = mu_of_body(g2, k, par); }, 20);
        double ts = time_ms([&] { es = mu_of_body(g2, k, ser); }, 20);
        report("radial mu(K), 720 facets", ts, tp, ep.value == es.value);
    }

    // Radial moment (numeric inner integral)
    {
        Potential g2 = make_gaussian(2);
        ConvexBody k = random_sym_grid_2d(2, 1, 720);
        auto f = [](const Vec& x) { return norm2(x); };
        IntegrateOptions par;
        par.method = Method::Radial;
        IntegrateOptions ser = par;
        ser.exec = ExecPolicy::Serial;
        Estimate ep, es;
        double tp = time_ms([&] { ep = moment(g2, k, f, par); }, 5);
        double ts = time_ms([&] { es = moment(g2, k, f, ser); }, 5);
        report("radial moment, 720 facets", ts, tp, ep.value == es.value);
    }
    return 0;
}
