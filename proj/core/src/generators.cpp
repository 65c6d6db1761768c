#include "tolrel/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "tolrel/errors.hpp"

namespace tolrel {

IndistinguishabilityRelation threshold_relation(StateSpace space, const ThresholdSpec& spec) {
    std::size_t n = space.size();
    if (spec.values.size() != n)
        throw LengthMismatch("expected " + std::to_string(n) + " values, got " +
                             std::to_string(spec.values.size()));
    for (double v : spec.values)
        if (!std::isfinite(v)) throw std::invalid_argument("threshold values must be finite");
    if (!(spec.epsilon >= 0.0))
        throw std::invalid_argument("epsilon must be non-negative");

    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(spec.values[i] - spec.values[j]) <= spec.epsilon)
                pairs.emplace_back(space.label(i), space.label(j));
    return IndistinguishabilityRelation::from_pairs(std::move(space), pairs);
}

IndistinguishabilityRelation random_relation(StateSpace space, double edge_probability,
                                             std::uint64_t seed) {
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");

    std::size_t n = space.size();
    SplitMix64 rng(seed);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // p = 1 must force every edge; next_unit() < 1 always holds.
            double u = rng.next_unit();
            bool edge = edge_probability >= 1.0 || u < edge_probability;
            if (edge) pairs.emplace_back(space.label(i), space.label(j));
        }
    return IndistinguishabilityRelation::from_pairs(std::move(space), pairs);
}

}  // namespace tolrel
