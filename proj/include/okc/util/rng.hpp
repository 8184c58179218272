#pragma once
// Seeded generator behind the randomized suites. The raw stream is
// mt19937_64 (fully specified by the standard) and bounded draws use
// rejection sampling, so a seed gives the same configurations on every
// platform and standard library.

#include <cstdint>
#include <random>

namespace okc {

/// Bumped whenever a change would alter the configs drawn for a seed.
inline constexpr int kGeneratorVersion = 1;

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace okc
