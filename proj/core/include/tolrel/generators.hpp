#ifndef TOLREL_GENERATORS_HPP
#define TOLREL_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "tolrel/relation.hpp"

namespace tolrel {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed here as the project-wide
/// pseudorandom generator because its output is identical on every
/// platform, which the standard library engines do not guarantee once a
/// distribution is involved. All seeded corpora in the tools and tests
/// run through this.
struct SplitMix64 {
    std::uint64_t state;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 significant bits.
    constexpr double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound).
    constexpr std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

/// One numeric attribute per state plus a perceptual limit: states whose
/// values differ by at most epsilon cannot be told apart.
struct ThresholdSpec {
    std::vector<double> values;
    double epsilon;
};

/// w_i ~ w_j  iff  |values[i] - values[j]| <= epsilon (closed interval).
/// Adjacent values within the limit chain together, so a wide-enough
/// spread of close values yields a non-transitive relation. Throws
/// LengthMismatch when |values| != n, std::invalid_argument on non-finite
/// values or negative epsilon.
IndistinguishabilityRelation threshold_relation(StateSpace space, const ThresholdSpec& spec);

/// Each unordered off-diagonal pair is indistinguishable independently
/// with probability edge_probability, drawn from SplitMix64(seed) in
/// lexicographic pair order. Identical (space size, probability, seed)
/// give identical relations on every platform and run.
IndistinguishabilityRelation random_relation(StateSpace space, double edge_probability,
                                             std::uint64_t seed);

}  // namespace tolrel

#endif
