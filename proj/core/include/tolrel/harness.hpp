#ifndef TOLREL_HARNESS_HPP
#define TOLREL_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tolrel/relation.hpp"

namespace tolrel {

/// Exhaustive enumeration is capped here: n = 6 already means 2^15
/// relations and each added state multiplies the universe by 2^n.
inline constexpr std::size_t kMaxEnumerationStates = 6;

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Lexicographic rank of the unordered pair (i, j), i < j:
/// (0,1) -> 0, (0,2) -> 1, ..., (1,2) -> n-1, ...
constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Off-diagonal bitmask of a relation: bit k set iff pair k (in
/// lexicographic order) is indistinguishable. Together with the state
/// count this replays any relation, which is how verification reports
/// reference counterexamples.
std::uint64_t relation_encoding(const IndistinguishabilityRelation& rel);

/// Inverse of relation_encoding over the given space.
IndistinguishabilityRelation relation_from_encoding(StateSpace space, std::uint64_t encoding);

/// Same on the auto-labeled space s0..s{n-1}.
IndistinguishabilityRelation relation_from_encoding(std::size_t n, std::uint64_t encoding);

/// Streams every reflexive-symmetric relation on n states exactly once,
/// in increasing encoding order. Throws CapExceeded for n > 6.
class RelationEnumerator {
public:
    explicit RelationEnumerator(std::size_t n);

    std::uint64_t total() const { return total_; }

    /// Next relation, or nullopt when exhausted.
    std::optional<IndistinguishabilityRelation> next();

private:
    StateSpace space_;
    std::uint64_t cursor_ = 0;
    std::uint64_t total_;
};

template <typename Fn>
void for_each_relation(std::size_t n, Fn&& fn) {
    RelationEnumerator e(n);
    while (auto rel = e.next()) fn(*rel);
}

/// Universe-wide classification counts for all relations on n states.
struct CensusReport {
    std::size_t n = 0;
    std::uint64_t total_relations = 0;
    std::uint64_t transitive_count = 0;
    std::uint64_t vague_count = 0;
    /// Relations whose tolerance classes overlap somewhere.
    std::uint64_t cover_count = 0;
    /// Largest |upper - lower| over all cores of all relations.
    std::uint64_t max_boundary_region = 0;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

CensusReport census(std::size_t n);

/// Replayable counterexample: the relation's encoding plus a description
/// of what failed.
struct Violation {
    std::uint64_t encoding;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    int proposition = 0;
    std::size_t n = 0;
    std::uint64_t relations_checked = 0;
    std::uint64_t information_sets_checked = 0;
    std::vector<Violation> violations;
    std::uint64_t preconditions_unmet = 0;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Checks proposition 1 or 2 over every relation with encoding in
/// [begin, end). For proposition 1 each core is tried with three bodies
/// (lower, upper, one seeded intermediate; duplicates collapsed); for
/// proposition 2 the whole-relation check runs once per relation.
/// Ranges partition the work: merging the per-range reports of any
/// partition of [0, total) reproduces the full run bit for bit.
VerificationReport verify_proposition_range(int proposition, std::size_t n,
                                            std::uint64_t begin, std::uint64_t end);

/// Order-independent combination of two partial reports (counts add,
/// violation lists merge sorted). Throws std::invalid_argument when the
/// reports disagree on proposition or n.
VerificationReport merge_reports(VerificationReport a, const VerificationReport& b);

/// Full run over all relations on n states, optionally split across
/// worker threads; the report is identical for every worker count.
VerificationReport verify_proposition(int proposition, std::size_t n, unsigned workers = 1);

/// Number of equivalence relations on n labeled states, via the Bell
/// triangle recurrence. Independent cross-check for census transitive
/// counts.
std::uint64_t bell_number(std::size_t n);

/// Stable key-sorted single-line JSON for the reports.
std::string to_json_text(const VerificationReport& report);
std::string to_json_text(const CensusReport& report);

}  // namespace tolrel

#endif
