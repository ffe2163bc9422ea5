#include "gz/random_bodies.hpp"

#include <cmath>

#include "gz/rng.hpp"

namespace gz {

ConvexBody harmonic_body_2d(double a0, const std::vector<Harmonic>& terms, int M, double h_min,
                            double rho_floor) {
    if (M == 0) M = DirectionGrid::default_size(2);
    double floor_a0 = std::max(h_min, rho_floor) + 1e-6;
    if (a0 < floor_a0) a0 = floor_a0;
    auto grid = DirectionGrid::standard(2, M);

    std::vector<double> harm(M, 0.0);
    for (int j = 0; j < M; ++j) {
        double t = grid->angle(j);
        for (const Harmonic& hm : terms)
            harm[j] += hm.c * std::cos(hm.order * t) + hm.s * std::sin(hm.order * t);
    }
    // rho is linear in h, so the harmonic part scales linearly too.
    const double dt = grid->delta_theta();
    double scale = 1.0;
    for (int j = 0; j < M; ++j) {
        double rho_h = harm[j] + (harm[(j + 1) % M] - 2.0 * harm[j] + harm[(j + M - 1) % M]) /
                                     (dt * dt);
        if (rho_h < 0.0) scale = std::min(scale, (a0 - rho_floor) / (-rho_h));
        if (harm[j] < 0.0) scale = std::min(scale, (a0 - h_min) / (-harm[j]));
    }
    scale = std::max(0.0, scale * (1.0 - 1e-9));
    std::vector<double> h(M);
    for (int j = 0; j < M; ++j) h[j] = a0 + scale * harm[j];
    return ConvexBody::support_grid(grid, std::move(h));
}

namespace {

std::vector<Harmonic> draw_harmonics(UniformSequence& u, bool even_only, double amp) {
    std::vector<Harmonic> terms;
    for (int m = even_only ? 2 : 1; m <= 8; m += even_only ? 2 : 1) {
        double decay = amp / (1.0 + 0.5 * m);
        terms.push_back(Harmonic{m, u.next_in(-decay, decay), u.next_in(-decay, decay)});
    }
    return terms;
}

}  // namespace

ConvexBody random_sym_grid_2d(std::uint64_t seed, int index, int M) {
    UniformSequence u(derive_stream(RngSpec{seed, 0x5B0D1E5ull}, static_cast<std::uint64_t>(index)));
    double a0 = u.next_in(0.5, 1.6);
    auto terms = draw_harmonics(u, /*even_only=*/true, 0.5);
    return harmonic_body_2d(a0, terms, M);
}

ConvexBody random_origin_grid_2d(std::uint64_t seed, int index, int M) {
    UniformSequence u(derive_stream(RngSpec{seed, 0x0B0D1E5ull}, static_cast<std::uint64_t>(index)));
    double a0 = u.next_in(0.5, 1.6);
    auto terms = draw_harmonics(u, /*even_only=*/false, 0.5);
    return harmonic_body_2d(a0, terms, M);
}

ConvexBody random_sym_hpolytope(int n, std::uint64_t seed, int index, int facet_pairs) {
    if (facet_pairs == 0) facet_pairs = (n <= 2) ? 8 : 12;
    for (int attempt = 0; attempt < 64; ++attempt) {
        RngSpec spec = derive_stream(RngSpec{seed, 0x57A9B0Dull},
                                     static_cast<std::uint64_t>(index) * 64 + attempt);
        UniformSequence u(spec);
        std::vector<Vec> normals;
        std::vector<double> offsets;
        for (int i = 0; i < facet_pairs; ++i) {
            Vec g;
            gaussian_sample(spec, static_cast<std::uint64_t>(i), n, g);
            if (norm(g) < 1e-9) continue;
            g = normalized(g);
            double b = u.next_in(0.4, 1.6);
            normals.push_back(g);
            offsets.push_back(b);
            normals.push_back(-g);
            offsets.push_back(b);
        }
        ConvexBody body = ConvexBody::hpolytope(normals, offsets);
        if (body.bounded() && body.is_symmetric()) return body;
    }
    throw input_error("random_sym_hpolytope: could not draw a bounded body");
}

ConvexBody random_origin_hpolytope(int n, std::uint64_t seed, int index, int facets) {
    if (facets == 0) facets = (n <= 2) ? 14 : 22;
    for (int attempt = 0; attempt < 64; ++attempt) {
        RngSpec spec = derive_stream(RngSpec{seed, 0x07A9B0Dull},
                                     static_cast<std::uint64_t>(index) * 64 + attempt);
        UniformSequence u(spec);
        std::vector<Vec> normals;
        std::vector<double> offsets;
        for (int i = 0; i < facets; ++i) {
            Vec g;
            gaussian_sample(spec, static_cast<std::uint64_t>(i), n, g);
            if (norm(g) < 1e-9) continue;
            normals.push_back(normalized(g));
            offsets.push_back(u.next_in(0.3, 1.6));
        }
        ConvexBody body = ConvexBody::hpolytope(normals, offsets);
        if (body.bounded()) return body;
    }
    throw input_error("random_origin_hpolytope: could not draw a bounded body");
}

}  // namespace gz
