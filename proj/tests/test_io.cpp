#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "tolrel/errors.hpp"
#include "tolrel/generators.hpp"
#include "tolrel/relation_io.hpp"

using namespace tolrel;

namespace {

IndistinguishabilityRelation chain3() {
    return IndistinguishabilityRelation::from_pairs(StateSpace({"a", "b", "c"}),
                                                    {{"a", "b"}, {"b", "c"}});
}

}  // namespace

TEST_CASE("parse the documented format") {
    auto rel = parse_relation_text(
        "# three states, two indistinguishable pairs\n"
        "\n"
        "states: a b c\n"
        "a b\n"
        "\n"
        "# mirror image and duplicate below are idempotent\n"
        "b a\n"
        "b c\n");
    CHECK(rel == chain3());
}

TEST_CASE("parse errors carry 1-based line numbers") {
    // pair line before the states line
    try {
        parse_relation_text("# comment\na b\nstates: a b\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    // wrong token count on a pair line
    try {
        parse_relation_text("states: a b c\na b c\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    // unknown label, with the label named
    try {
        parse_relation_text("states: a b c\n\na d\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("d") != std::string::npos);
    }

    // duplicate state labels
    CHECK_THROWS_AS(parse_relation_text("states: a a\n"), ParseError);
    // no states line at all
    CHECK_THROWS_AS(parse_relation_text("# nothing here\n"), ParseError);
    CHECK_THROWS_AS(parse_relation_text(""), ParseError);
    // bare "states:" with no labels
    CHECK_THROWS_AS(parse_relation_text("states:\n"), ParseError);
}

TEST_CASE("parser rejects more than 64 states") {
    std::string line = "states:";
    for (int i = 0; i < 65; ++i) line += " s" + std::to_string(i);
    CHECK_THROWS_AS(parse_relation_text(line + "\n"), ParseError);
}

TEST_CASE("single state, no pairs") {
    auto rel = parse_relation_text("states: only\n");
    CHECK(rel.size() == 1);
    CHECK(rel.distinguishable_pair_count() == 0);
}

TEST_CASE("format_relation output is stable") {
    CHECK(format_relation(chain3()) == "states: a b c\na b\nb c\n");
    CHECK(format_relation(IndistinguishabilityRelation::identity(StateSpace({"x", "y"}))) ==
          "states: x y\n");
}

TEST_CASE("parse-format round trip on a seeded corpus") {
    SplitMix64 rng(11);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 1 + rng.next_below(12);
        double p = rng.next_unit();
        auto rel = random_relation(StateSpace::numbered(n), p, rng.next());
        auto text = format_relation(rel);
        CHECK(parse_relation_text(text) == rel);
        CHECK(format_relation(parse_relation_text(text)) == text);
    }
}

TEST_CASE("parse_relation_file") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "tolrel_io_test.rel";
    {
        std::ofstream out(path);
        out << "states: a b c\nb c\n";
    }
    auto rel = parse_relation_file(path.string());
    CHECK(rel.indistinguishable("b", "c"));
    CHECK(!rel.indistinguishable("a", "b"));
    fs::remove(path);

    try {
        parse_relation_file((fs::temp_directory_path() / "missing_tolrel.rel").string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 0);
    }
}
