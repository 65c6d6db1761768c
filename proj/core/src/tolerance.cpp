#include "tolrel/tolerance.hpp"

#include <algorithm>
#include <bit>

#include "tolrel/errors.hpp"

namespace tolrel {

namespace {

struct CliqueEnumerator {
    const IndistinguishabilityRelation& rel;
    std::vector<StateSet> out;

    // Off-diagonal neighbor mask; the diagonal would make every vertex
    // its own neighbor and break the pivot bound.
    StateSet nbr(std::size_t v) const {
        return rel.neighborhood(v).erase(v);
    }

    // Bron-Kerbosch with Tomita pivoting. grown: current clique;
    // candidates: vertices adjacent to all of grown, still to try;
    // excluded: vertices adjacent to all of grown already covered.
    void expand(StateSet grown, StateSet candidates, StateSet excluded) {
        if (candidates.empty() && excluded.empty()) {
            out.push_back(grown);
            return;
        }
        // Pivot: vertex of candidates|excluded with most neighbors in
        // candidates. Only non-neighbors of the pivot need expanding.
        StateSet pool = candidates | excluded;
        std::size_t pivot = 0, best = 0;
        bool have = false;
        for (std::size_t u : pool.indices()) {
            std::size_t k = (candidates & nbr(u)).size();
            if (!have || k > best) {
                pivot = u;
                best = k;
                have = true;
            }
        }
        StateSet tries = candidates - nbr(pivot);
        for (std::size_t v : tries.indices()) {
            StateSet nv = nbr(v);
            expand(grown | StateSet::single(v), candidates & nv, excluded & nv);
            candidates.erase(v);
            excluded.insert(v);
        }
    }
};

}  // namespace

std::vector<StateSet> tolerance_classes(const IndistinguishabilityRelation& rel) {
    CliqueEnumerator e{rel, {}};
    e.expand(StateSet{}, rel.space().all(), StateSet{});
    std::sort(e.out.begin(), e.out.end(), lex_less);
    return e.out;
}

std::vector<StateSet> equivalence_classes(const IndistinguishabilityRelation& rel) {
    auto classification = rel.classify_knowledge();
    if (classification.kind == KnowledgeKind::Vague) {
        const auto& w = *classification.witness;
        const StateSpace& sp = rel.space();
        throw NotTransitive({w.a, w.b, w.c},
                            "relation is not transitive: " + sp.label(w.a) + " ~ " +
                                sp.label(w.b) + " and " + sp.label(w.b) + " ~ " +
                                sp.label(w.c) + " but " + sp.label(w.a) + " !~ " +
                                sp.label(w.c));
    }
    // Transitive, reflexive and symmetric: the class of i is exactly its
    // neighborhood.
    std::vector<StateSet> classes;
    StateSet seen;
    for (std::size_t i = 0; i < rel.size(); ++i) {
        if (seen.contains(i)) continue;
        StateSet cls = rel.neighborhood(i);
        classes.push_back(cls);
        seen |= cls;
    }
    return classes;
}

StructureReport structure_kind(const std::vector<StateSet>& classes, std::size_t n) {
    StructureReport report{StructureKind::Partition, {}};
    for (std::size_t state = 0; state < n; ++state) {
        std::vector<std::size_t> in;
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (classes[c].contains(state)) in.push_back(c);
        if (in.size() >= 2) report.overlaps.push_back({state, std::move(in)});
    }
    if (!report.overlaps.empty()) report.kind = StructureKind::Cover;
    return report;
}

VaguenessReport vagueness_report(const IndistinguishabilityRelation& rel) {
    auto classes = tolerance_classes(rel);
    auto structure = structure_kind(classes, rel.size());
    return VaguenessReport{
        rel.transitivity_violations().size(),
        structure.overlaps.size(),
        classes.size(),
        structure.kind,
    };
}

}  // namespace tolrel
