#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "tolrel/boundaries.hpp"
#include "tolrel/errors.hpp"
#include "tolrel/harness.hpp"
#include "tolrel/tolerance.hpp"

using namespace tolrel;

TEST_CASE("pair indexing is lexicographic") {
    CHECK(pair_count(1) == 0);
    CHECK(pair_count(4) == 6);
    CHECK(pair_index(0, 1, 4) == 0);
    CHECK(pair_index(0, 3, 4) == 2);
    CHECK(pair_index(1, 2, 4) == 3);
    CHECK(pair_index(2, 3, 4) == 5);
}

TEST_CASE("encoding round-trips and enumeration is exact") {
    for (std::size_t n = 1; n <= 4; ++n) {
        RelationEnumerator e(n);
        CHECK(e.total() == std::uint64_t{1} << pair_count(n));
        std::uint64_t expected = 0;
        std::set<std::uint64_t> seen;
        while (auto rel = e.next()) {
            std::uint64_t enc = relation_encoding(*rel);
            CHECK(enc == expected);  // increasing encoding order
            CHECK(relation_from_encoding(n, enc) == *rel);
            seen.insert(enc);
            ++expected;
        }
        CHECK(seen.size() == e.total());
    }
}

TEST_CASE("enumeration counts") {
    CHECK(RelationEnumerator(1).total() == 1);
    CHECK(RelationEnumerator(3).total() == 8);
    CHECK(RelationEnumerator(5).total() == 1024);
    CHECK(RelationEnumerator(6).total() == 32768);
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(RelationEnumerator(7), CapExceeded);
    CHECK_THROWS_AS(census(7), CapExceeded);
    CHECK_THROWS_AS(verify_proposition(1, 9), CapExceeded);
    CHECK_THROWS_AS(RelationEnumerator(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_proposition(3, 3), std::invalid_argument);
}

TEST_CASE("bell numbers") {
    CHECK(bell_number(1) == 1);
    CHECK(bell_number(2) == 2);
    CHECK(bell_number(3) == 5);
    CHECK(bell_number(4) == 15);
    CHECK(bell_number(5) == 52);
    CHECK(bell_number(6) == 203);
}

TEST_CASE("census at n = 3, frozen and recomputed") {
    auto report = census(3);
    CHECK(report.n == 3);
    CHECK(report.total_relations == 8);
    CHECK(report.transitive_count == 5);
    CHECK(report.vague_count == 3);
    CHECK(report.cover_count == 3);
    CHECK(report.max_boundary_region == 1);
}

TEST_CASE("census counts recomputed with the oracle for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        CensusReport expected;
        expected.n = n;
        for_each_relation(n, [&](const IndistinguishabilityRelation& rel) {
            ++expected.total_relations;
            if (oracle::is_transitive(rel))
                ++expected.transitive_count;
            else
                ++expected.vague_count;
            auto cliques = oracle::maximal_cliques(rel);
            bool overlap = false;
            for (std::size_t i = 0; i < cliques.size(); ++i)
                for (std::size_t j = i + 1; j < cliques.size(); ++j)
                    if (!(cliques[i] & cliques[j]).empty()) overlap = true;
            if (overlap) ++expected.cover_count;
            for (StateSet clique : cliques)
                expected.max_boundary_region = std::max<std::uint64_t>(
                    expected.max_boundary_region,
                    (oracle::upper(rel, clique) - clique).size());
        });
        CHECK(census(n) == expected);
    }
}

TEST_CASE("census transitive counts equal the Bell numbers") {
    auto bells = oracle::bell_numbers(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        auto report = census(n);
        CHECK(report.transitive_count == bells[n - 1]);
        CHECK(report.transitive_count == bell_number(n));
        CHECK(report.transitive_count + report.vague_count == report.total_relations);
        CHECK(report.total_relations == std::uint64_t{1} << pair_count(n));
    }
}

TEST_CASE("verification finds zero violations up to n = 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto one = verify_proposition(1, n);
        CHECK(one.proposition == 1);
        CHECK(one.relations_checked == std::uint64_t{1} << pair_count(n));
        CHECK(one.violations.empty());
        CHECK(one.information_sets_checked > 0);

        auto two = verify_proposition(2, n);
        CHECK(two.proposition == 2);
        CHECK(two.relations_checked == one.relations_checked);
        CHECK(two.violations.empty());
        CHECK(two.preconditions_unmet == 0);
    }
}

TEST_CASE("single-state trivialities") {
    auto report = verify_proposition(2, 1);
    CHECK(report.relations_checked == 1);
    CHECK(report.information_sets_checked == 1);
    CHECK(report.violations.empty());

    // the only core is the whole space, so proposition 1 never fires
    auto one = verify_proposition(1, 1);
    CHECK(one.preconditions_unmet == one.information_sets_checked);
}

TEST_CASE("range partitioning and worker counts do not change the report") {
    for (int prop : {1, 2}) {
        auto full = verify_proposition(prop, 4);

        auto left = verify_proposition_range(prop, 4, 0, 20);
        auto right = verify_proposition_range(prop, 4, 20, 64);
        CHECK(merge_reports(left, right) == full);

        CHECK(verify_proposition(prop, 4, 3) == full);
        CHECK(verify_proposition(prop, 4, 8) == full);

        // reproducibility: a second run is bit-identical
        CHECK(verify_proposition(prop, 4) == full);
    }
    CHECK_THROWS_AS(merge_reports(verify_proposition(1, 2), verify_proposition(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("prop-1 body sampling stays inside the sandwich") {
    // indirect but complete: information sets checked lies between one and
    // three bodies per core, and never fewer than the core count
    for (std::size_t n = 2; n <= 4; ++n) {
        std::uint64_t core_total = 0;
        for_each_relation(n, [&](const IndistinguishabilityRelation& rel) {
            core_total += cores(rel).size();
        });
        auto report = verify_proposition(1, n);
        CHECK(report.information_sets_checked >= core_total);
        CHECK(report.information_sets_checked <= 3 * core_total);
    }
}

TEST_CASE("report JSON is key-sorted and stable") {
    CHECK(to_json_text(verify_proposition(2, 1)) ==
          R"({"information_sets_checked":1,"n":1,"preconditions_unmet":0,)"
          R"("proposition":2,"relations_checked":1,"violations":[]})");
    CHECK(to_json_text(census(1)) ==
          R"({"cover_count":0,"max_boundary_region":0,"n":1,"total_relations":1,)"
          R"("transitive_count":1,"vague_count":0})");
    CHECK(to_json_text(verify_proposition(1, 3)) == to_json_text(verify_proposition(1, 3)));
}

TEST_CASE("violations serialize with replayable encodings") {
    VerificationReport report;
    report.proposition = 1;
    report.n = 3;
    report.relations_checked = 1;
    report.violations.push_back({5, "example detail"});
    CHECK(to_json_text(report) ==
          R"({"information_sets_checked":0,"n":3,"preconditions_unmet":0,)"
          R"("proposition":1,"relations_checked":1,)"
          R"("violations":[{"detail":"example detail","encoding":5}]})");
}
