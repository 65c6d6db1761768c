// tolrel command-line tool: classify relation files, list tolerance
// classes, compute rough boundaries, exhaustively verify the two
// propositions at small n, and generate or export relations.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tolrel/boundaries.hpp"
#include "tolrel/errors.hpp"
#include "tolrel/generators.hpp"
#include "tolrel/harness.hpp"
#include "tolrel/relation.hpp"
#include "tolrel/relation_io.hpp"
#include "tolrel/tolerance.hpp"

namespace {

using nlohmann::json;
using namespace tolrel;

// Exit codes shared by all subcommands.
constexpr int kOk = 0;
constexpr int kInternalError = 1;
constexpr int kInputError = 2;
constexpr int kPreconditionError = 3;
constexpr int kViolationFound = 4;

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

struct InputSelector {
    std::string flag_path;
    std::string positional_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", flag_path, "relation file to read");
        cmd->add_option("file", positional_path, "relation file to read");
    }

    // Exactly one source per invocation.
    std::string path() const {
        if (flag_path.empty() == positional_path.empty())
            throw std::invalid_argument(
                "give the relation file either as --input or positionally");
        return flag_path.empty() ? positional_path : flag_path;
    }
};

std::vector<std::string> labels_json(const StateSpace& space, StateSet set) {
    std::vector<std::string> out;
    for (std::size_t i : set.indices()) out.push_back(space.label(i));
    return out;
}

// ---- classify ----

int cmd_classify(const std::string& path, bool as_json) {
    auto rel = parse_relation_file(path);
    auto classification = rel.classify_knowledge();
    bool vague = classification.kind == KnowledgeKind::Vague;
    const StateSpace& sp = rel.space();

    if (as_json) {
        json doc{
            {"distinguishable_pairs", rel.distinguishable_pair_count()},
            {"knowledge", vague ? "Vague" : "Precise"},
        };
        if (vague) {
            const auto& w = *classification.witness;
            doc["witness"] = {sp.label(w.a), sp.label(w.b), sp.label(w.c)};
        }
        std::cout << doc.dump() << "\n";
        return kOk;
    }

    std::cout << "knowledge: " << (vague ? "Vague" : "Precise") << "\n";
    if (vague) {
        const auto& w = *classification.witness;
        std::cout << "witness: " << sp.label(w.a) << " ~ " << sp.label(w.b) << ", "
                  << sp.label(w.b) << " ~ " << sp.label(w.c) << ", " << sp.label(w.a)
                  << " !~ " << sp.label(w.c) << "\n";
    }
    std::cout << "distinguishable pairs: " << rel.distinguishable_pair_count() << "\n";
    return kOk;
}

// ---- classes ----

int cmd_classes(const std::string& path, bool as_json) {
    auto rel = parse_relation_file(path);
    auto classes = tolerance_classes(rel);
    auto structure = structure_kind(classes, rel.size());
    const StateSpace& sp = rel.space();
    bool cover = structure.kind == StructureKind::Cover;

    if (as_json) {
        json class_list = json::array();
        for (StateSet cls : classes) class_list.push_back(labels_json(sp, cls));
        json borderline = json::array();
        for (const auto& overlap : structure.overlaps)
            borderline.push_back(
                {{"classes", overlap.class_indices}, {"state", sp.label(overlap.state)}});
        json doc{
            {"borderline", borderline},
            {"classes", class_list},
            {"structure", cover ? "Cover" : "Partition"},
        };
        std::cout << doc.dump() << "\n";
        return kOk;
    }

    for (std::size_t i = 0; i < classes.size(); ++i)
        std::cout << "class " << i << ": " << sp.format_set(classes[i]) << "\n";
    std::cout << "structure: " << (cover ? "Cover" : "Partition") << "\n";
    for (const auto& overlap : structure.overlaps) {
        std::cout << "borderline " << sp.label(overlap.state) << ": classes";
        for (std::size_t c : overlap.class_indices) std::cout << " " << c;
        std::cout << "\n";
    }
    return kOk;
}

// ---- boundary ----

json prop1_json(const StateSpace& sp, const Proposition1Result& result) {
    switch (result.status) {
        case Proposition1Result::Status::Holds:
            return json{{"status", "Holds"},
                        {"witness",
                         {sp.label(result.witness->first), sp.label(result.witness->second)}}};
        case Proposition1Result::Status::PreconditionNotMet:
            return json{{"reason", result.unmet_reason}, {"status", "PreconditionNotMet"}};
        case Proposition1Result::Status::Violated:
        default:
            return json{{"status", "Violated"},
                        {"witness",
                         {sp.label(result.witness->first), sp.label(result.witness->second)}}};
    }
}

int cmd_boundary(const std::string& path, const std::string& core_csv,
                 const std::string& body_csv, bool as_json) {
    auto rel = parse_relation_file(path);
    const StateSpace& sp = rel.space();

    // Core labels must exist (input error); body labels outside the space
    // just fail the body sandwich (precondition error).
    StateSet core = sp.set_of(split_commas(core_csv));
    std::optional<StateSet> body;
    if (!body_csv.empty()) {
        StateSet b;
        for (const auto& label : split_commas(body_csv)) {
            auto idx = sp.find(label);
            if (!idx)
                throw BodyOutOfBounds("body state '" + label + "' is not in the space");
            b.insert(*idx);
        }
        body = b;
    }

    auto info = make_information_set(rel, core, body);
    auto expression = classify_expression(info);
    auto prop1 = check_proposition1(rel, info);
    bool vague = expression.kind == ExpressionKind::Vague;

    if (as_json) {
        json doc{
            {"body", labels_json(sp, info.body)},
            {"boundary_region", labels_json(sp, expression.boundary_region)},
            {"expression", vague ? "Vague" : "Precise"},
            {"lower", labels_json(sp, info.lower)},
            {"proposition1", prop1_json(sp, prop1)},
            {"upper", labels_json(sp, info.upper)},
        };
        std::cout << doc.dump() << "\n";
        return kOk;
    }

    std::cout << "lower: " << sp.format_set(info.lower) << "\n";
    std::cout << "body: " << sp.format_set(info.body) << "\n";
    std::cout << "upper: " << sp.format_set(info.upper) << "\n";
    std::cout << "boundary region: " << sp.format_set(expression.boundary_region) << "\n";
    std::cout << "expression: " << (vague ? "Vague" : "Precise") << "\n";
    std::cout << "proposition 1: ";
    switch (prop1.status) {
        case Proposition1Result::Status::Holds:
            std::cout << "Holds (witness: " << sp.label(prop1.witness->first) << " !~ "
                      << sp.label(prop1.witness->second) << ")\n";
            break;
        case Proposition1Result::Status::PreconditionNotMet:
            std::cout << "PreconditionNotMet (" << prop1.unmet_reason << ")\n";
            break;
        case Proposition1Result::Status::Violated:
            std::cout << "Violated (" << sp.label(prop1.witness->first) << " ~ "
                      << sp.label(prop1.witness->second) << ")\n";
            break;
    }
    return kOk;
}

// ---- verify ----

void print_report(const VerificationReport& report) {
    std::cout << "proposition: " << report.proposition << "\n"
              << "n: " << report.n << "\n"
              << "relations checked: " << report.relations_checked << "\n"
              << "information sets checked: " << report.information_sets_checked << "\n"
              << "preconditions unmet: " << report.preconditions_unmet << "\n"
              << "violations: " << report.violations.size() << "\n";
    for (const auto& v : report.violations)
        std::cout << "  encoding " << v.encoding << ": " << v.detail << "\n";
}

int cmd_verify(const std::string& prop, std::size_t n, bool as_json) {
    std::vector<int> props;
    if (prop == "all")
        props = {1, 2};
    else if (prop == "1" || prop == "2")
        props = {prop[0] - '0'};
    else
        throw std::invalid_argument("--prop must be 1, 2 or all");

    std::vector<VerificationReport> reports;
    for (int p : props) reports.push_back(verify_proposition(p, n));

    bool violated = false;
    for (const auto& r : reports) violated = violated || !r.violations.empty();

    if (as_json) {
        if (reports.size() == 1) {
            std::cout << to_json_text(reports[0]) << "\n";
        } else {
            json docs = json::array();
            for (const auto& r : reports) docs.push_back(json::parse(to_json_text(r)));
            std::cout << json{{"reports", docs}}.dump() << "\n";
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i > 0) std::cout << "\n";
            print_report(reports[i]);
        }
    }
    return violated ? kViolationFound : kOk;
}

// ---- census ----

int cmd_census(std::size_t n, bool as_json) {
    auto report = census(n);
    std::uint64_t bell = bell_number(n);
    bool bell_ok = report.transitive_count == bell;

    if (as_json)
        std::cout << to_json_text(report) << "\n";
    else
        std::cout << "n: " << report.n << "\n"
                  << "total relations: " << report.total_relations << "\n"
                  << "transitive: " << report.transitive_count << "\n"
                  << "vague: " << report.vague_count << "\n"
                  << "cover: " << report.cover_count << "\n"
                  << "max boundary region: " << report.max_boundary_region << "\n"
                  << "bell cross-check: "
                  << (bell_ok ? "ok (" + std::to_string(bell) + ")"
                              : "MISMATCH (expected " + std::to_string(bell) + ", counted " +
                                    std::to_string(report.transitive_count) + ")")
                  << "\n";

    if (!bell_ok) {
        std::cerr << "census transitive count " << report.transitive_count
                  << " does not match the Bell number " << bell << " for n = " << n << "\n";
        return kViolationFound;
    }
    return kOk;
}

// ---- generate ----

StateSpace generate_space(std::size_t n, const std::string& labels_csv) {
    if (labels_csv.empty()) return StateSpace::numbered(n);
    auto labels = split_commas(labels_csv);
    if (labels.size() != n)
        throw std::invalid_argument("--labels lists " + std::to_string(labels.size()) +
                                    " labels but " + std::to_string(n) +
                                    " states are needed");
    return StateSpace(labels);
}

int emit_relation(const IndistinguishabilityRelation& rel, bool as_json) {
    if (as_json) {
        json pairs = json::array();
        for (auto [i, j] : rel.indistinguishable_pairs())
            pairs.push_back({rel.space().label(i), rel.space().label(j)});
        json doc{
            {"pairs", pairs},
            {"states", rel.space().labels()},
        };
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << format_relation(rel);
    }
    return kOk;
}

// ---- export-dot ----

int cmd_export_dot(const std::string& path, bool with_classes, bool as_json) {
    auto rel = parse_relation_file(path);
    const StateSpace& sp = rel.space();

    // Edges with endpoints normalized and sorted label-lexicographically.
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [i, j] : rel.indistinguishable_pairs()) {
        std::string a = sp.label(i), b = sp.label(j);
        if (b < a) std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(edges.begin(), edges.end());

    std::ostringstream dot;
    dot << "graph {\n";
    if (with_classes) {
        auto classes = tolerance_classes(rel);
        auto structure = structure_kind(classes, rel.size());
        // DOT clusters cannot share nodes: each state goes to its first
        // class, borderline states carry the full membership list.
        std::vector<std::string> annotation(rel.size());
        for (const auto& overlap : structure.overlaps) {
            std::string classes_text;
            for (std::size_t c : overlap.class_indices)
                classes_text += (classes_text.empty() ? "" : ", ") + std::to_string(c);
            annotation[overlap.state] =
                " [label=\"" + sp.label(overlap.state) + " (classes " + classes_text + ")\"]";
        }
        StateSet placed;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            dot << "  subgraph cluster_" << c << " {\n";
            dot << "    label = \"class " << c << "\";\n";
            for (std::size_t i : (classes[c] - placed).indices())
                dot << "    \"" << sp.label(i) << "\"" << annotation[i] << ";\n";
            placed |= classes[c];
            dot << "  }\n";
        }
    } else {
        for (const auto& label : sp.labels()) dot << "  \"" << label << "\";\n";
    }
    for (const auto& [a, b] : edges) dot << "  \"" << a << "\" -- \"" << b << "\";\n";
    dot << "}\n";

    if (as_json)
        std::cout << json{{"dot", dot.str()}}.dump() << "\n";
    else
        std::cout << dot.str();
    return kOk;
}

int run(int argc, char** argv) {
    CLI::App app{"tolerance relations, rough boundaries and vagueness diagnostics"};
    app.require_subcommand(1);

    // classify
    auto* classify = app.add_subcommand(
        "classify", "precise/vague knowledge classification of a relation file");
    InputSelector classify_input;
    classify_input.attach(classify);
    bool classify_json = false;
    classify->add_flag("--json", classify_json, "emit JSON");

    // classes
    auto* classes = app.add_subcommand(
        "classes", "tolerance classes, partition/cover structure, borderline states");
    InputSelector classes_input;
    classes_input.attach(classes);
    bool classes_json = false;
    classes->add_flag("--json", classes_json, "emit JSON");

    // boundary
    auto* boundary = app.add_subcommand(
        "boundary", "lower/upper boundaries and expression classification for a core");
    InputSelector boundary_input;
    boundary_input.attach(boundary);
    std::string core_csv, body_csv;
    bool boundary_json = false;
    boundary->add_option("--core", core_csv, "comma-separated core states")->required();
    boundary->add_option("--body", body_csv,
                         "comma-separated body states (default: faithful body = upper)");
    boundary->add_flag("--json", boundary_json, "emit JSON");

    // verify
    auto* verify =
        app.add_subcommand("verify", "exhaustively verify proposition 1, 2 or all at size n");
    std::string prop;
    std::size_t verify_n = 0;
    bool verify_json = false;
    verify->add_option("--prop", prop, "1, 2 or all")->required();
    verify->add_option("--n", verify_n, "state count (1..6)")->required();
    verify->add_flag("--json", verify_json, "emit JSON");

    // census
    auto* census_cmd =
        app.add_subcommand("census", "classification census over all relations at size n");
    std::size_t census_n = 0;
    bool census_json = false;
    census_cmd->add_option("--n", census_n, "state count (1..6)")->required();
    census_cmd->add_flag("--json", census_json, "emit JSON");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a relation file on stdout");
    generate->require_subcommand(1);

    auto* threshold = generate->add_subcommand(
        "threshold", "indistinguishable when attribute values differ by at most epsilon");
    std::vector<double> values;
    double epsilon = 0.0;
    std::string threshold_labels;
    bool threshold_json = false;
    threshold->add_option("--values", values, "comma-separated attribute values")
        ->required()
        ->delimiter(',');
    threshold->add_option("--epsilon", epsilon, "perceptual limit (>= 0)")->required();
    threshold->add_option("--labels", threshold_labels, "comma-separated state labels");
    threshold->add_flag("--json", threshold_json, "emit JSON");

    auto* random = generate->add_subcommand(
        "random", "each pair indistinguishable independently with probability p");
    std::size_t random_n = 0;
    double probability = 0.0;
    std::uint64_t seed = 0;
    std::string random_labels;
    bool random_json = false;
    random->add_option("--n", random_n, "state count")->required();
    random->add_option("--p", probability, "edge probability in [0, 1]")->required();
    random->add_option("--seed", seed, "PRNG seed (explicit for reproducibility)")->required();
    random->add_option("--labels", random_labels, "comma-separated state labels");
    random->add_flag("--json", random_json, "emit JSON");

    // export-dot
    auto* export_dot =
        app.add_subcommand("export-dot", "emit the indistinguishability graph in DOT syntax");
    InputSelector dot_input;
    dot_input.attach(export_dot);
    bool dot_classes = false, dot_json = false;
    export_dot->add_flag("--classes", dot_classes, "cluster nodes by tolerance class");
    export_dot->add_flag("--json", dot_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }

    if (classify->parsed()) return cmd_classify(classify_input.path(), classify_json);
    if (classes->parsed()) return cmd_classes(classes_input.path(), classes_json);
    if (boundary->parsed())
        return cmd_boundary(boundary_input.path(), core_csv, body_csv, boundary_json);
    if (verify->parsed()) return cmd_verify(prop, verify_n, verify_json);
    if (census_cmd->parsed()) return cmd_census(census_n, census_json);
    if (generate->parsed()) {
        if (threshold->parsed()) {
            StateSpace space = generate_space(values.size(), threshold_labels);
            return emit_relation(threshold_relation(std::move(space), {values, epsilon}),
                                 threshold_json);
        }
        StateSpace space = generate_space(random_n, random_labels);
        return emit_relation(random_relation(std::move(space), probability, seed),
                             random_json);
    }
    if (export_dot->parsed())
        return cmd_export_dot(dot_input.path(), dot_classes, dot_json);

    std::cerr << "no subcommand given\n";
    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NotACore& e) {
        std::cerr << e.what() << "\n";
        return kPreconditionError;
    } catch (const BodyOutOfBounds& e) {
        std::cerr << e.what() << "\n";
        return kPreconditionError;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const UnknownLabel& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const LengthMismatch& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const SelfDistinction& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}
