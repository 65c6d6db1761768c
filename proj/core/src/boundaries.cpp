#include "tolrel/boundaries.hpp"

#include <string>

#include "tolrel/errors.hpp"
#include "tolrel/tolerance.hpp"

namespace tolrel {

namespace {

void require_in_space(const IndistinguishabilityRelation& rel, StateSet set) {
    StateSet stray = set - rel.space().all();
    if (!stray.empty())
        throw UnknownLabel("state index " + std::to_string(stray.lowest()));
}

}  // namespace

StateSet closure(const IndistinguishabilityRelation& rel, StateSet set) {
    StateSet closed = rel.space().all();
    for (std::size_t i : set.indices()) closed &= rel.neighborhood(i);
    return closed;
}

bool is_core(const IndistinguishabilityRelation& rel, StateSet set) {
    require_in_space(rel, set);
    return !set.empty() && closure(rel, set) == set;
}

std::vector<StateSet> cores(const IndistinguishabilityRelation& rel) {
    // Maximal cliques and closure fixed points are the same sets; share
    // the enumerator and let the oracle tests keep it honest.
    return tolerance_classes(rel);
}

StateSet upper_boundary(const IndistinguishabilityRelation& rel, StateSet core) {
    if (!is_core(rel, core))
        throw NotACore(rel.space().format_set(core) + " is not a core: closure gives " +
                       rel.space().format_set(closure(rel, core)));
    StateSet upper;
    for (std::size_t i : core.indices()) upper |= rel.neighborhood(i);
    return upper;
}

InformationSet make_information_set(const IndistinguishabilityRelation& rel, StateSet core,
                                    std::optional<StateSet> body) {
    StateSet upper = upper_boundary(rel, core);  // validates the core
    StateSet chosen = body.value_or(upper);
    if (!(chosen - rel.space().all()).empty() || !core.subset_of(chosen) ||
        !chosen.subset_of(upper))
        throw BodyOutOfBounds("body " + rel.space().format_set(chosen & rel.space().all()) +
                              " does not satisfy lower <= body <= upper for lower " +
                              rel.space().format_set(core) + ", upper " +
                              rel.space().format_set(upper));
    return InformationSet{core, chosen, upper};
}

ExpressionClassification classify_expression(const InformationSet& info) {
    StateSet region = info.upper - info.lower;
    return {region.empty() ? ExpressionKind::Precise : ExpressionKind::Vague, region};
}

Proposition1Result check_proposition1(const IndistinguishabilityRelation& rel,
                                      const InformationSet& info) {
    Proposition1Result result{Proposition1Result::Status::Holds, std::nullopt, "", 0};
    StateSet outside = rel.space().all() - info.upper;
    if (info.lower.empty()) {
        result.status = Proposition1Result::Status::PreconditionNotMet;
        result.unmet_reason = "lower boundary is empty";
        return result;
    }
    if (outside.empty()) {
        result.status = Proposition1Result::Status::PreconditionNotMet;
        result.unmet_reason = "upper boundary covers the whole space";
        return result;
    }
    // The universal claim: every core state is distinguishable from every
    // state outside the upper boundary.
    for (std::size_t inside : info.lower.indices()) {
        StateSet related = rel.neighborhood(inside) & outside;
        result.pairs_checked += outside.size();
        if (!related.empty()) {
            result.status = Proposition1Result::Status::Violated;
            result.witness = {inside, related.lowest()};
            return result;
        }
    }
    // Exhibit one concrete pair: body member vs non-member, distinguishable.
    result.witness = {info.lower.lowest(), outside.lowest()};
    return result;
}

Proposition2Result check_proposition2(const IndistinguishabilityRelation& rel) {
    Proposition2Result result{Proposition2Result::Status::TransitiveAllSharp, std::nullopt,
                              StateSet{}, 0};
    bool transitive = rel.is_transitive();
    std::optional<StateSet> witness;
    StateSet witness_region;

    for (StateSet core : cores(rel)) {
        ++result.cores_checked;
        StateSet upper;
        for (std::size_t i : core.indices()) upper |= rel.neighborhood(i);
        StateSet region = upper - core;
        if (transitive) {
            if (!region.empty()) {
                result.status = Proposition2Result::Status::Violated;
                result.core = core;
                result.boundary_region = region;
                return result;
            }
        } else if (!witness && !region.empty()) {
            witness = core;
            witness_region = region;
        }
    }

    if (transitive) return result;  // all cores sharp

    if (witness) {
        result.status = Proposition2Result::Status::NonTransitiveWitness;
        result.core = witness;
        result.boundary_region = witness_region;
    } else {
        result.status = Proposition2Result::Status::NoWitnessFound;
    }
    return result;
}

}  // namespace tolrel
