#ifndef TOLREL_RELATION_HPP
#define TOLREL_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tolrel/state_set.hpp"
#include "tolrel/state_space.hpp"

namespace tolrel {

enum class KnowledgeKind { Precise, Vague };

/// A triple (a, b, c) of state indices with a ~ b and b ~ c but not a ~ c.
/// Such a triple is exactly a failure of transitivity.
struct ViolationTriple {
    std::size_t a, b, c;

    friend bool operator==(const ViolationTriple&, const ViolationTriple&) = default;
};

/// Knowledge is precise when the relation is transitive (an equivalence
/// relation) and vague otherwise; in the vague case `witness` holds the
/// lexicographically smallest violation triple.
struct KnowledgeClassification {
    KnowledgeKind kind;
    std::optional<ViolationTriple> witness;
};

/// Ordered list of observed differences between pairs of distinct states.
class ObservationLog {
public:
    using Entry = std::pair<std::string, std::string>;

    ObservationLog() = default;

    /// Throws SelfDistinction if any entry pairs a state with itself.
    explicit ObservationLog(std::vector<Entry> entries);
    ObservationLog(std::initializer_list<Entry> entries)
        : ObservationLog(std::vector<Entry>(entries)) {}

    /// Throws SelfDistinction if a == b.
    void add(std::string a, std::string b);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<Entry> entries_;
};

/// Reflexive symmetric boolean relation over a finite state space, stored
/// as one 64-bit adjacency row per state. Values are immutable: observing
/// a difference returns a new relation. Transitivity is deliberately not
/// an invariant; whether it holds is what classify_knowledge reports.
class IndistinguishabilityRelation {
public:
    /// Every pair indistinguishable: the no-knowledge baseline.
    static IndistinguishabilityRelation complete(StateSpace space);

    /// Only each state with itself: the maximal-knowledge endpoint.
    static IndistinguishabilityRelation identity(StateSpace space);

    /// Identity plus the given label pairs and their mirror images.
    /// Duplicate and diagonal pairs are idempotent. Throws UnknownLabel.
    static IndistinguishabilityRelation from_pairs(
        StateSpace space, const std::vector<std::pair<std::string, std::string>>& pairs);

    /// Same, with pairs given as state indices.
    static IndistinguishabilityRelation from_index_pairs(
        StateSpace space, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    const StateSpace& space() const { return space_; }
    std::size_t size() const { return rows_.size(); }

    bool indistinguishable(std::size_t i, std::size_t j) const;
    bool indistinguishable(std::string_view a, std::string_view b) const;

    /// { w | state i ~ w }; always contains i itself.
    StateSet neighborhood(std::size_t i) const;
    StateSet neighborhood(std::string_view label) const;

    /// Pure: returns a copy with the pair (a, b) made distinguishable.
    /// Throws SelfDistinction if a == b, UnknownLabel if either label is
    /// not in the space. Idempotent.
    IndistinguishabilityRelation observe_difference(std::string_view a,
                                                    std::string_view b) const;
    IndistinguishabilityRelation observe_difference(std::size_t i, std::size_t j) const;

    /// Left fold of observe_difference over the log. The result does not
    /// depend on the order of entries.
    IndistinguishabilityRelation apply_observations(const ObservationLog& log) const;

    /// Number of ordered distinguishable pairs, |Omega x Omega| - |U|.
    /// Always even; zero exactly for the complete relation.
    std::size_t distinguishable_pair_count() const;

    bool is_transitive() const;

    /// Precise/Vague with the smallest witness triple in lexicographic
    /// (a, b, c) index order, constrained to a < c.
    KnowledgeClassification classify_knowledge() const;

    /// All triples (a, b, c) with a < c, a ~ b, b ~ c, a !~ c, in
    /// lexicographic order. Empty exactly when transitive.
    std::vector<ViolationTriple> transitivity_violations() const;

    /// Unordered indistinguishable off-diagonal pairs (i, j), i < j.
    std::vector<std::pair<std::size_t, std::size_t>> indistinguishable_pairs() const;

    friend bool operator==(const IndistinguishabilityRelation& a,
                           const IndistinguishabilityRelation& b) {
        return a.space_ == b.space_ && a.rows_ == b.rows_;
    }

private:
    IndistinguishabilityRelation(StateSpace space, std::vector<std::uint64_t> rows)
        : space_(std::move(space)), rows_(std::move(rows)) {}

    /// Diagonal-only rows; throws CapExceeded when the space has more
    /// than 64 states.
    static std::vector<std::uint64_t> diagonal_rows(const StateSpace& space);

    std::size_t checked_index(std::string_view label) const;
    std::optional<ViolationTriple> first_violation() const;

    StateSpace space_;
    std::vector<std::uint64_t> rows_;
};

}  // namespace tolrel

#endif
