#pragma once

#include <cstdint>
#include <random>

namespace qwm {

/// Deterministic seed splitting. Child streams depend only on
/// (master, stream, index), never on evaluation order, so independent
/// attempts/rotations can run in parallel and stay reproducible.
/// Convention used throughout: per-attempt seed = derive_seed(master_seed, stream_tag, attempt_index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index = 0);

/// Stream tags for derive_seed. Distinct tags keep unrelated draws decoupled
/// even when they share a master seed.
namespace seed_stream {
inline constexpr std::uint64_t kBmStart = 1;
inline constexpr std::uint64_t kProjection = 2;
inline constexpr std::uint64_t kRotation = 3;
inline constexpr std::uint64_t kRounding = 4;
inline constexpr std::uint64_t kOptimizerStart = 5;
inline constexpr std::uint64_t kSampling = 6;
inline constexpr std::uint64_t kGraphGen = 7;
inline constexpr std::uint64_t kRun = 8;
}  // namespace seed_stream

/// mt19937_64 engine with hand-rolled variate transforms so that streams do
/// not depend on the standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard Gaussian via Box-Muller (fixed consumption of two uniforms).
    double normal();

    /// Uniform integer in [0, n), rejection-sampled (no modulo bias).
    std::uint32_t below(std::uint32_t n);

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qwm
