// generate.hpp — deterministic, splittable random generation of
// hypothesis-satisfying inputs.
//
// The generator core is SplitMix64. Substreams are derived by hashing
// (seed, purpose tag, index), so any draw is a pure function of its GenConfig
// and shape arguments, independent of call order or threading.

#pragma once

#include "gruss/types.hpp"

#include <cstdint>
#include <string_view>

namespace gruss {

struct GenConfig {
    std::uint64_t seed = 0;
    double scale = 1.0;        // half-width of the entry distribution
    std::size_t retry_limit = 64;
};

// SplitMix64 stream (Steele, Lea, Flood 2014). Stable across platforms.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    // Uniform in [0, 1), 53 random bits.
    double next_unit();

    // Uniform in [-half_width, half_width].
    double next_symmetric(double half_width);

    // Uniform integer in [lo, hi] inclusive.
    std::uint64_t next_range(std::uint64_t lo, std::uint64_t hi);

private:
    std::uint64_t state_;
};

// Child config with seed mixed from (base seed, tag, index); scale and
// retry_limit are inherited.
GenConfig substream(const GenConfig& base, std::string_view tag, std::uint64_t index);

// Entries with real and imaginary parts uniform in [-scale, scale].
Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, const GenConfig& cfg);

// Real version of the above (imaginary parts zero).
Matrix random_real_matrix(Eigen::Index rows, Eigen::Index cols, const GenConfig& cfg);

// e = U diag(1,...,1,0,...) V* from the SVD of a random matrix; <e,e> is then
// an orthogonal projection of the requested rank.
Matrix random_partial_isometry(Eigen::Index rows, Eigen::Index cols,
                               Eigen::Index rank, const GenConfig& cfg);

// Normalized positive draws; the sum is corrected to 1 up to a few ulp.
ProbabilityVector random_probability_vector(std::size_t n, const GenConfig& cfg);

// Independent complex scalars, parts uniform in [-scale, scale].
std::vector<Complex> random_scalars(std::size_t n, const GenConfig& cfg);

// n elements with ||x_i - center|| <= radius, by rescaling random offsets.
// The first element is placed at distance >= 0.9*radius so the ball is not
// sampled only near its center.
ModuleTuple ball_tuple(const Matrix& center, double radius, std::size_t n,
                       const GenConfig& cfg);

// Element x = e(a+b)/2 + delta with <delta,delta> strictly below
// (1/4)|e(a-b)|^2 in the Loewner order, so the Hermitian part of
// <x - ea, eb - x> is PSD: x lies in the midpoint ball of ea and eb.
Matrix midpoint_ball_element(const Matrix& e, const Matrix& a, const Matrix& b,
                             const GenConfig& cfg);

// The extremal two-point configuration: x = (a + r e, a - r e),
// y = (b + s e, b - s e), uniform weights, e a rank-one partial isometry.
struct SharpnessInstance {
    ModuleTuple xs;
    ModuleTuple ys;
    ProbabilityVector p;
    Matrix e;
};

SharpnessInstance sharpness_pair(const Matrix& a, const Matrix& b, double r,
                                 double s, const GenConfig& cfg);

}  // namespace gruss
