#ifndef DRROOTS_RNG_HPP
#define DRROOTS_RNG_HPP

#include <cstdint>

namespace drroots {

/// SplitMix64 — seedable, portable 64-bit generator (Steele/Lea/Flood).
/// Bit-identical output on every platform, which is what makes seeded
/// experiment reruns and per-trial parallel streams reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

private:
    std::uint64_t state_;
};

/// Independent stream for one trial.  Derived by hashing (seed, index) so a
/// run over trials [0, N) gives the same per-trial sequences whether the
/// trials execute serially or in parallel, and a longer run extends a
/// shorter one with the same seed.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
    SplitMix64 mix(seed ^ (0xA0761D6478BD642FULL * (trial_index + 1)));
    return SplitMix64(mix.next());
}

} // namespace drroots

#endif
