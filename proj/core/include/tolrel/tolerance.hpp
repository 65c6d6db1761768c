#ifndef TOLREL_TOLERANCE_HPP
#define TOLREL_TOLERANCE_HPP

#include <cstddef>
#include <vector>

#include "tolrel/relation.hpp"
#include "tolrel/state_set.hpp"

namespace tolrel {

enum class StructureKind { Partition, Cover };

/// States that belong to more than one tolerance class, with the indices
/// of the classes containing them. Empty exactly for a partition.
struct Overlap {
    std::size_t state;
    std::vector<std::size_t> class_indices;

    friend bool operator==(const Overlap&, const Overlap&) = default;
};

struct StructureReport {
    StructureKind kind;
    std::vector<Overlap> overlaps;
};

/// Aggregate vagueness metrics for one relation.
struct VaguenessReport {
    std::size_t violation_count;         // transitivity violations
    std::size_t borderline_state_count;  // states in >= 2 tolerance classes
    std::size_t class_count;
    StructureKind kind;
};

/// All tolerance classes (maximal cliques of the indistinguishability
/// graph), sorted lexicographically by member indices. Every state lies
/// in at least one class; classes overlap exactly when the relation is
/// non-transitive.
std::vector<StateSet> tolerance_classes(const IndistinguishabilityRelation& rel);

/// Quotient partition by ~, one class per state, ordered by smallest
/// member. Throws NotTransitive (with witness triple) when the relation
/// is vague — tolerance_classes is the fallback.
std::vector<StateSet> equivalence_classes(const IndistinguishabilityRelation& rel);

/// Partition / Cover decision for a class list over a space of n states.
StructureReport structure_kind(const std::vector<StateSet>& classes, std::size_t n);

VaguenessReport vagueness_report(const IndistinguishabilityRelation& rel);

}  // namespace tolrel

#endif
