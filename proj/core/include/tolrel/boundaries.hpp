#ifndef TOLREL_BOUNDARIES_HPP
#define TOLREL_BOUNDARIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tolrel/relation.hpp"
#include "tolrel/state_set.hpp"

namespace tolrel {

/// { w in Omega | w ~ every member of set }. The cores of a relation are
/// exactly the non-empty fixed points of this operator, which coincide
/// with the maximal cliques: a fixed point is a clique because the
/// membership condition applies to its own elements, and maximal because
/// any outside state related to all members would be in the closure.
StateSet closure(const IndistinguishabilityRelation& rel, StateSet set);

/// True iff set is non-empty and closure(set) == set. Throws UnknownLabel
/// if set has bits outside the space.
bool is_core(const IndistinguishabilityRelation& rel, StateSet set);

/// All cores, sorted lexicographically. Same member sets as
/// tolerance_classes; cross-checked against a subset-enumeration oracle
/// in the test suite.
std::vector<StateSet> cores(const IndistinguishabilityRelation& rel);

/// Single-layer extension: every state indistinguishable from at least
/// one core member. Always a superset of the core. Throws NotACore.
StateSet upper_boundary(const IndistinguishabilityRelation& rel, StateSet core);

/// Rough description of a set of states: lower <= body <= upper, where
/// lower is a core and upper its single-layer extension. The body is what
/// an expression literally names; lower/upper are what it certainly and
/// possibly describes.
struct InformationSet {
    StateSet lower;
    StateSet body;
    StateSet upper;

    friend bool operator==(const InformationSet&, const InformationSet&) = default;
};

enum class ExpressionKind { Precise, Vague };

/// Precise exactly when the boundary region (upper - lower) is empty.
struct ExpressionClassification {
    ExpressionKind kind;
    StateSet boundary_region;
};

/// Builds an information set around a core. Without a body the faithful
/// expression is used: body = upper boundary (every state that cannot be
/// told apart from the core is included, every other state excluded).
/// Throws NotACore, or BodyOutOfBounds when an explicit body breaks the
/// lower <= body <= upper sandwich (or reaches outside the space).
InformationSet make_information_set(const IndistinguishabilityRelation& rel, StateSet core,
                                    std::optional<StateSet> body = std::nullopt);

ExpressionClassification classify_expression(const InformationSet& info);

/// Informative-value check for one information set.
///
/// When the core is non-empty and the upper boundary is not the whole
/// space, every core state must be distinguishable from every state
/// outside the upper boundary; `witness` then exhibits one such pair
/// (a state inside the body, a state outside it, distinguishable).
/// A related pair across that divide would be a Violated result.
struct Proposition1Result {
    enum class Status { Holds, PreconditionNotMet, Violated };

    Status status;
    /// Holds: (state in body, state outside body) with the two
    /// distinguishable. Violated: the offending related pair.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    /// PreconditionNotMet: which precondition failed.
    std::string unmet_reason;
    /// Number of (core state, outside-upper state) pairs verified.
    std::size_t pairs_checked = 0;
};

Proposition1Result check_proposition1(const IndistinguishabilityRelation& rel,
                                      const InformationSet& info);

/// Expression-sharpness check for a whole relation.
///
/// Transitive relations must have lower == upper for the faithful
/// expression of every core (TransitiveAllSharp); a sharp-breaking core
/// would be Violated. Non-transitive relations are searched for a core
/// whose faithful expression has a strict boundary region
/// (NonTransitiveWitness); NoWitnessFound signals the search failed and
/// is treated as a violation by the verification harness.
struct Proposition2Result {
    enum class Status { TransitiveAllSharp, NonTransitiveWitness, NoWitnessFound, Violated };

    Status status;
    std::optional<StateSet> core;  // witness (NonTransitiveWitness) or offender (Violated)
    StateSet boundary_region;      // of the witness core
    std::size_t cores_checked = 0;
};

Proposition2Result check_proposition2(const IndistinguishabilityRelation& rel);

}  // namespace tolrel

#endif
