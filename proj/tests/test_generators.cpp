#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracle.hpp"
#include "tolrel/errors.hpp"
#include "tolrel/generators.hpp"

using namespace tolrel;

namespace {

StateSpace abc() { return StateSpace({"a", "b", "c"}); }

}  // namespace

TEST_CASE("threshold relation on the canonical value vectors") {
    auto chain = threshold_relation(abc(), {{0, 1, 2}, 1});
    CHECK(chain == IndistinguishabilityRelation::from_pairs(abc(), {{"a", "b"}, {"b", "c"}}));

    CHECK(threshold_relation(abc(), {{0, 1, 2}, 2}) ==
          IndistinguishabilityRelation::complete(abc()));
    CHECK(threshold_relation(abc(), {{0, 10, 20}, 1}) ==
          IndistinguishabilityRelation::identity(abc()));
    // comparison is closed: a gap of exactly epsilon stays indistinguishable
    CHECK(threshold_relation(StateSpace({"x", "y"}), {{0, 1}, 1})
              .indistinguishable("x", "y"));
}

TEST_CASE("threshold relation input validation") {
    CHECK_THROWS_AS(threshold_relation(abc(), {{0, 1}, 1}), LengthMismatch);
    CHECK_THROWS_AS(threshold_relation(abc(), {{0, 1, 2}, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(
        threshold_relation(abc(), {{0, std::numeric_limits<double>::quiet_NaN(), 2}, 1}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        threshold_relation(abc(), {{0, std::numeric_limits<double>::infinity(), 2}, 1}),
        std::invalid_argument);
}

TEST_CASE("random relation endpoints and determinism") {
    for (std::uint64_t seed : {0ull, 7ull, 42ull}) {
        CHECK(random_relation(StateSpace::numbered(5), 0.0, seed) ==
              IndistinguishabilityRelation::identity(StateSpace::numbered(5)));
        CHECK(random_relation(StateSpace::numbered(5), 1.0, seed) ==
              IndistinguishabilityRelation::complete(StateSpace::numbered(5)));
    }
    CHECK(random_relation(StateSpace::numbered(6), 0.5, 42) ==
          random_relation(StateSpace::numbered(6), 0.5, 42));
    CHECK(random_relation(StateSpace::numbered(6), 0.5, 42) !=
          random_relation(StateSpace::numbered(6), 0.5, 43));
    CHECK_THROWS_AS(random_relation(abc(), 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_relation(abc(), -0.1, 1), std::invalid_argument);
}

TEST_CASE("splitmix64 reference outputs") {
    // published sequence for seed 1234567
    SplitMix64 g(1234567);
    CHECK(g.next() == 6457827717110365317ull);
    CHECK(g.next() == 3203168211198807973ull);
    CHECK(g.next() == 9817491932198370423ull);
}

TEST_CASE("threshold non-transitivity matches the gap-pattern witness") {
    SplitMix64 rng(321);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 1 + rng.next_below(10);
        std::vector<double> values;
        for (std::size_t i = 0; i < n; ++i)
            values.push_back(3.0 * rng.next_unit());
        double epsilon = rng.next_unit();

        auto rel = threshold_relation(StateSpace::numbered(n), {values, epsilon});

        // witness computed straight from the values, not from the relation
        bool witness = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (std::abs(values[i] - values[j]) <= epsilon &&
                        std::abs(values[j] - values[k]) <= epsilon &&
                        std::abs(values[i] - values[k]) > epsilon)
                        witness = true;

        CHECK((rel.classify_knowledge().kind == KnowledgeKind::Vague) == witness);
        CHECK(!oracle::is_transitive(rel) == witness);
    }
}

TEST_CASE("sorted threshold values give interval-structured relations") {
    SplitMix64 rng(654);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 2 + rng.next_below(9);
        std::vector<double> values;
        for (std::size_t i = 0; i < n; ++i) values.push_back(2.0 * rng.next_unit());
        std::sort(values.begin(), values.end());
        double epsilon = 0.5 * rng.next_unit();

        auto rel = threshold_relation(StateSpace::numbered(n), {values, epsilon});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i + 1; k < n; ++k) {
                if (!rel.indistinguishable(i, k)) continue;
                for (std::size_t j = i + 1; j < k; ++j) {
                    CHECK(rel.indistinguishable(i, j));
                    CHECK(rel.indistinguishable(j, k));
                }
            }
    }
}
