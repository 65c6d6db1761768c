#include "tolrel/harness.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "tolrel/boundaries.hpp"
#include "tolrel/errors.hpp"
#include "tolrel/generators.hpp"
#include "tolrel/tolerance.hpp"

namespace tolrel {

namespace {

void check_enumeration_size(std::size_t n) {
    if (n < 1) throw std::invalid_argument("need at least one state");
    if (n > kMaxEnumerationStates)
        throw CapExceeded("enumeration is capped at " +
                          std::to_string(kMaxEnumerationStates) + " states, got " +
                          std::to_string(n));
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of_encoding(std::size_t n,
                                                                   std::uint64_t encoding) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++k)
            if ((encoding >> k) & 1u) pairs.emplace_back(i, j);
    return pairs;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (b + 0x9E3779B97F4A7C15ull));
    return g.next();
}

/// Deterministic per-(relation, core) seed for the intermediate body, so
/// the sampled information sets do not depend on enumeration order or
/// worker partitioning.
std::uint64_t body_seed(std::size_t n, std::uint64_t encoding, std::size_t core_rank) {
    return mix(mix(mix(0x746F6C72656C3154ull, n), encoding), core_rank);
}

std::string describe_info_set(const IndistinguishabilityRelation& rel,
                              const InformationSet& info) {
    const StateSpace& sp = rel.space();
    return "lower " + sp.format_set(info.lower) + " body " + sp.format_set(info.body) +
           " upper " + sp.format_set(info.upper);
}

void verify_prop1_on(const IndistinguishabilityRelation& rel, std::uint64_t encoding,
                     VerificationReport& report) {
    auto all_cores = cores(rel);
    for (std::size_t rank = 0; rank < all_cores.size(); ++rank) {
        StateSet lower = all_cores[rank];
        StateSet upper = upper_boundary(rel, lower);

        StateSet middle = lower;
        SplitMix64 g(body_seed(rel.size(), encoding, rank));
        for (std::size_t i : (upper - lower).indices())
            if (g.next() & 1u) middle.insert(i);

        std::vector<StateSet> bodies{lower, upper, middle};
        std::sort(bodies.begin(), bodies.end(), lex_less);
        bodies.erase(std::unique(bodies.begin(), bodies.end()), bodies.end());

        for (StateSet body : bodies) {
            InformationSet info{lower, body, upper};
            ++report.information_sets_checked;
            auto result = check_proposition1(rel, info);
            switch (result.status) {
                case Proposition1Result::Status::Holds:
                    break;
                case Proposition1Result::Status::PreconditionNotMet:
                    ++report.preconditions_unmet;
                    break;
                case Proposition1Result::Status::Violated: {
                    auto [inside, outside] = *result.witness;
                    report.violations.push_back(
                        {encoding, describe_info_set(rel, info) + ": core state " +
                                       rel.space().label(inside) +
                                       " indistinguishable from outside state " +
                                       rel.space().label(outside)});
                    break;
                }
            }
        }
    }
}

void verify_prop2_on(const IndistinguishabilityRelation& rel, std::uint64_t encoding,
                     VerificationReport& report) {
    auto result = check_proposition2(rel);
    report.information_sets_checked += result.cores_checked;
    switch (result.status) {
        case Proposition2Result::Status::TransitiveAllSharp:
        case Proposition2Result::Status::NonTransitiveWitness:
            break;
        case Proposition2Result::Status::Violated:
            report.violations.push_back(
                {encoding, "transitive relation but core " +
                               rel.space().format_set(*result.core) +
                               " has boundary region " +
                               rel.space().format_set(result.boundary_region)});
            break;
        case Proposition2Result::Status::NoWitnessFound:
            report.violations.push_back(
                {encoding,
                 "non-transitive relation but no core has a strict boundary region"});
            break;
    }
}

}  // namespace

std::uint64_t relation_encoding(const IndistinguishabilityRelation& rel) {
    std::size_t n = rel.size();
    std::uint64_t encoding = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rel.indistinguishable(i, j))
                encoding |= std::uint64_t{1} << pair_index(i, j, n);
    return encoding;
}

IndistinguishabilityRelation relation_from_encoding(StateSpace space, std::uint64_t encoding) {
    std::size_t n = space.size();
    return IndistinguishabilityRelation::from_index_pairs(std::move(space),
                                                          pairs_of_encoding(n, encoding));
}

IndistinguishabilityRelation relation_from_encoding(std::size_t n, std::uint64_t encoding) {
    return relation_from_encoding(StateSpace::numbered(n), encoding);
}

RelationEnumerator::RelationEnumerator(std::size_t n)
    : space_((check_enumeration_size(n), StateSpace::numbered(n))),
      total_(std::uint64_t{1} << pair_count(n)) {}

std::optional<IndistinguishabilityRelation> RelationEnumerator::next() {
    if (cursor_ >= total_) return std::nullopt;
    return relation_from_encoding(space_, cursor_++);
}

CensusReport census(std::size_t n) {
    check_enumeration_size(n);
    CensusReport report;
    report.n = n;
    for_each_relation(n, [&](const IndistinguishabilityRelation& rel) {
        ++report.total_relations;
        if (rel.is_transitive())
            ++report.transitive_count;
        else
            ++report.vague_count;

        auto classes = tolerance_classes(rel);
        if (structure_kind(classes, n).kind == StructureKind::Cover) ++report.cover_count;
        for (StateSet core : classes) {
            StateSet upper = upper_boundary(rel, core);
            report.max_boundary_region =
                std::max<std::uint64_t>(report.max_boundary_region, (upper - core).size());
        }
    });
    return report;
}

VerificationReport verify_proposition_range(int proposition, std::size_t n,
                                            std::uint64_t begin, std::uint64_t end) {
    if (proposition != 1 && proposition != 2)
        throw std::invalid_argument("proposition must be 1 or 2");
    check_enumeration_size(n);

    VerificationReport report;
    report.proposition = proposition;
    report.n = n;
    StateSpace space = StateSpace::numbered(n);
    for (std::uint64_t encoding = begin; encoding < end; ++encoding) {
        auto rel = relation_from_encoding(space, encoding);
        ++report.relations_checked;
        if (proposition == 1)
            verify_prop1_on(rel, encoding, report);
        else
            verify_prop2_on(rel, encoding, report);
    }
    return report;
}

VerificationReport merge_reports(VerificationReport a, const VerificationReport& b) {
    if (a.proposition != b.proposition || a.n != b.n)
        throw std::invalid_argument("cannot merge reports for different runs");
    a.relations_checked += b.relations_checked;
    a.information_sets_checked += b.information_sets_checked;
    a.preconditions_unmet += b.preconditions_unmet;
    a.violations.insert(a.violations.end(), b.violations.begin(), b.violations.end());
    std::sort(a.violations.begin(), a.violations.end());
    return a;
}

VerificationReport verify_proposition(int proposition, std::size_t n, unsigned workers) {
    check_enumeration_size(n);
    std::uint64_t total = std::uint64_t{1} << pair_count(n);
    if (workers <= 1) {
        auto report = verify_proposition_range(proposition, n, 0, total);
        std::sort(report.violations.begin(), report.violations.end());
        return report;
    }

    std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<VerificationReport> parts(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        threads.emplace_back([&parts, w, proposition, n, lo, hi] {
            parts[w] = verify_proposition_range(proposition, n, lo, hi);
        });
    }
    for (auto& t : threads) t.join();

    VerificationReport merged = std::move(parts[0]);
    for (unsigned w = 1; w < workers; ++w) merged = merge_reports(std::move(merged), parts[w]);
    std::sort(merged.violations.begin(), merged.violations.end());
    return merged;
}

std::uint64_t bell_number(std::size_t n) {
    // Bell triangle: row starts with the previous row's last entry, each
    // entry adds its left neighbor and the entry above it.
    if (n == 0) return 1;
    std::vector<std::uint64_t> row{1};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t entry : row) next.push_back(next.back() + entry);
        row = std::move(next);
    }
    return row.back();
}

std::string to_json_text(const VerificationReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"detail", v.detail}, {"encoding", v.encoding}});
    nlohmann::json doc{
        {"information_sets_checked", report.information_sets_checked},
        {"n", report.n},
        {"preconditions_unmet", report.preconditions_unmet},
        {"proposition", report.proposition},
        {"relations_checked", report.relations_checked},
        {"violations", violations},
    };
    return doc.dump();
}

std::string to_json_text(const CensusReport& report) {
    nlohmann::json doc{
        {"cover_count", report.cover_count},
        {"max_boundary_region", report.max_boundary_region},
        {"n", report.n},
        {"total_relations", report.total_relations},
        {"transitive_count", report.transitive_count},
        {"vague_count", report.vague_count},
    };
    return doc.dump();
}

}  // namespace tolrel
