#include "tolrel/relation.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

#include "tolrel/errors.hpp"

namespace tolrel {

ObservationLog::ObservationLog(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (const auto& [a, b] : entries_)
        if (a == b) throw SelfDistinction(a);
}

void ObservationLog::add(std::string a, std::string b) {
    if (a == b) throw SelfDistinction(a);
    entries_.emplace_back(std::move(a), std::move(b));
}

std::vector<std::uint64_t> IndistinguishabilityRelation::diagonal_rows(const StateSpace& space) {
    std::size_t n = space.size();
    if (n > 64)
        throw CapExceeded("state count " + std::to_string(n) +
                          " exceeds the 64-state bit-row representation");
    std::vector<std::uint64_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;
    return rows;
}

IndistinguishabilityRelation IndistinguishabilityRelation::complete(StateSpace space) {
    auto rows = diagonal_rows(space);
    std::uint64_t all = StateSet::full(rows.size()).bits();
    for (auto& row : rows) row = all;
    return IndistinguishabilityRelation(std::move(space), std::move(rows));
}

IndistinguishabilityRelation IndistinguishabilityRelation::identity(StateSpace space) {
    auto rows = diagonal_rows(space);
    return IndistinguishabilityRelation(std::move(space), std::move(rows));
}

IndistinguishabilityRelation IndistinguishabilityRelation::from_pairs(
    StateSpace space, const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto rows = diagonal_rows(space);
    for (const auto& [a, b] : pairs) {
        std::size_t i = space.index_of(a);
        std::size_t j = space.index_of(b);
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
    }
    return IndistinguishabilityRelation(std::move(space), std::move(rows));
}

IndistinguishabilityRelation IndistinguishabilityRelation::from_index_pairs(
    StateSpace space, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    auto rows = diagonal_rows(space);
    for (auto [i, j] : pairs) {
        if (i >= rows.size() || j >= rows.size())
            throw UnknownLabel("state index " + std::to_string(i >= rows.size() ? i : j));
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
    }
    return IndistinguishabilityRelation(std::move(space), std::move(rows));
}

std::size_t IndistinguishabilityRelation::checked_index(std::string_view label) const {
    return space_.index_of(label);
}

bool IndistinguishabilityRelation::indistinguishable(std::size_t i, std::size_t j) const {
    assert(i < size() && j < size());
    return (rows_[i] >> j) & 1u;
}

bool IndistinguishabilityRelation::indistinguishable(std::string_view a,
                                                     std::string_view b) const {
    return indistinguishable(checked_index(a), checked_index(b));
}

StateSet IndistinguishabilityRelation::neighborhood(std::size_t i) const {
    assert(i < size());
    return StateSet::from_bits(rows_[i]);
}

StateSet IndistinguishabilityRelation::neighborhood(std::string_view label) const {
    return neighborhood(checked_index(label));
}

IndistinguishabilityRelation IndistinguishabilityRelation::observe_difference(
    std::size_t i, std::size_t j) const {
    assert(i < size() && j < size());
    if (i == j) throw SelfDistinction(space_.label(i));
    auto rows = rows_;
    rows[i] &= ~(std::uint64_t{1} << j);
    rows[j] &= ~(std::uint64_t{1} << i);
    return IndistinguishabilityRelation(space_, std::move(rows));
}

IndistinguishabilityRelation IndistinguishabilityRelation::observe_difference(
    std::string_view a, std::string_view b) const {
    return observe_difference(checked_index(a), checked_index(b));
}

IndistinguishabilityRelation IndistinguishabilityRelation::apply_observations(
    const ObservationLog& log) const {
    IndistinguishabilityRelation rel = *this;
    for (const auto& [a, b] : log.entries()) rel = rel.observe_difference(a, b);
    return rel;
}

std::size_t IndistinguishabilityRelation::distinguishable_pair_count() const {
    std::size_t related = 0;
    for (std::uint64_t row : rows_) related += static_cast<std::size_t>(std::popcount(row));
    return size() * size() - related;
}

std::optional<ViolationTriple> IndistinguishabilityRelation::first_violation() const {
    std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!indistinguishable(a, b)) continue;
            // candidates c > a with b ~ c and a !~ c
            std::uint64_t bad = rows_[b] & ~rows_[a] & ~(StateSet::full(a + 1).bits());
            if (bad != 0)
                return ViolationTriple{a, b, static_cast<std::size_t>(std::countr_zero(bad))};
        }
    return std::nullopt;
}

bool IndistinguishabilityRelation::is_transitive() const { return !first_violation(); }

KnowledgeClassification IndistinguishabilityRelation::classify_knowledge() const {
    if (auto w = first_violation())
        return {KnowledgeKind::Vague, w};
    return {KnowledgeKind::Precise, std::nullopt};
}

std::vector<ViolationTriple> IndistinguishabilityRelation::transitivity_violations() const {
    std::vector<ViolationTriple> out;
    std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!indistinguishable(a, b)) continue;
            std::uint64_t bad = rows_[b] & ~rows_[a] & ~(StateSet::full(a + 1).bits());
            for (; bad != 0; bad &= bad - 1)
                out.push_back({a, b, static_cast<std::size_t>(std::countr_zero(bad))});
        }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
IndistinguishabilityRelation::indistinguishable_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (indistinguishable(i, j)) out.emplace_back(i, j);
    return out;
}

}  // namespace tolrel
