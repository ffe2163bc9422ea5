#include "gz/rng.hpp"

#include <cmath>

namespace gz {

namespace {

constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kPhiloxM0, c[0], lo0, hi0);
    mul_hi_lo(kPhiloxM1, c[2], lo1, hi1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
}

// splitmix64 finalizer; good avalanche for stream derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

RngSpec derive_stream(const RngSpec& base, std::uint64_t tag) {
    return RngSpec{base.seed, mix64(base.stream * 0x100000001B3ull + tag + 1)};
}

std::array<std::uint32_t, 4> philox4x32(std::uint64_t key, std::uint64_t ctr_lo,
                                        std::uint64_t ctr_hi) {
    std::array<std::uint32_t, 4> c = {
        static_cast<std::uint32_t>(ctr_lo), static_cast<std::uint32_t>(ctr_lo >> 32),
        static_cast<std::uint32_t>(ctr_hi), static_cast<std::uint32_t>(ctr_hi >> 32)};
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int r = 0; r < 10; ++r) {
        philox_round(c, k0, k1);
        if (r < 9) {
            k0 += kPhiloxW0;
            k1 += kPhiloxW1;
        }
    }
    return c;
}

void gaussian_sample(const RngSpec& rng, std::uint64_t sample_index, int n, Vec& out) {
    out.n = n;
    const int blocks = (n + 1) / 2;
    for (int b = 0; b < blocks; ++b) {
        auto w = philox4x32(rng.seed, sample_index * static_cast<std::uint64_t>(blocks) + b,
                            rng.stream);
        double u1 = uniform_open01(w[0], w[1]);
        double u2 = uniform_open01(w[2], w[3]);
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = kTwoPi * u2;
        out.x[2 * b] = r * std::cos(a);
        if (2 * b + 1 < n) out.x[2 * b + 1] = r * std::sin(a);
    }
}

double UniformSequence::at(std::uint64_t i) const {
    auto w = philox4x32(spec_.seed, i / 2, spec_.stream ^ 0x5CA1AB1Eull);
    return (i % 2 == 0) ? uniform_open01(w[0], w[1]) : uniform_open01(w[2], w[3]);
}

}  // namespace gz
