#pragma once

#include <array>
#include <cstdint>

#include "gz/common.hpp"

namespace gz {

/// Identifies a reproducible random stream. Together with a sample index it
/// fully determines every variate ever drawn, so results are bit-identical
/// across thread counts and machines.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// Derives a child stream deterministically; used to give the three measures
/// of a gap check (and each search candidate) independent streams.
RngSpec derive_stream(const RngSpec& base, std::uint64_t tag);

/// One 128-bit Philox4x32-10 block: pure function of (key, counter).
std::array<std::uint32_t, 4> philox4x32(std::uint64_t key, std::uint64_t ctr_lo,
                                        std::uint64_t ctr_hi);

/// Uniform double in the open interval (0,1) from two 32-bit words.
inline double uniform_open01(std::uint32_t hi, std::uint32_t lo) {
    std::uint64_t u = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(u >> 11) + 0.5) * 0x1.0p-53;
}

/// Writes the n-dimensional standard Gaussian variate with the given sample
/// index into `out` (Box-Muller over Philox blocks). Counter layout:
/// low word = sample_index * blocks_per_sample + block, high word = stream.
void gaussian_sample(const RngSpec& rng, std::uint64_t sample_index, int n, Vec& out);

/// Scalar uniforms for non-sampling uses (body generators, optimizers).
/// Indexed draws from a dedicated stream; still counter-based.
class UniformSequence {
public:
    explicit UniformSequence(RngSpec spec) : spec_(spec) {}
    /// i-th uniform in (0,1) of this sequence.
    double at(std::uint64_t i) const;
    /// Convenience stateful draw.
    double next() { return at(cursor_++); }
    double next_in(double a, double b) { return a + (b - a) * next(); }

private:
    RngSpec spec_;
    std::uint64_t cursor_ = 0;
};

}  // namespace gz
