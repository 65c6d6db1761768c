#include "tolrel/relation_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "tolrel/errors.hpp"

namespace tolrel {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream s(line);
    std::vector<std::string> out;
    std::string tok;
    while (s >> tok) out.push_back(tok);
    return out;
}

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

}  // namespace

IndistinguishabilityRelation parse_relation(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    std::vector<std::string> labels;
    std::size_t states_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        auto toks = tokens(line);
        if (toks.empty() || toks[0] != "states:")
            throw ParseError(lineno, "expected 'states: <label> ...' before any pair line");
        labels.assign(toks.begin() + 1, toks.end());
        states_line = lineno;
        break;
    }
    if (labels.empty())
        throw ParseError(states_line ? states_line : lineno + 1,
                         "missing 'states:' declaration with at least one label");
    if (labels.size() > 64)
        throw ParseError(states_line, "more than 64 states are not supported");

    StateSpace space = [&] {
        try {
            return StateSpace(labels);
        } catch (const std::invalid_argument& e) {
            throw ParseError(states_line, e.what());
        }
    }();

    std::vector<std::pair<std::string, std::string>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        auto toks = tokens(line);
        if (toks.size() != 2)
            throw ParseError(lineno, "expected exactly two labels per pair line, got " +
                                         std::to_string(toks.size()));
        for (const auto& tok : toks)
            if (!space.contains(tok))
                throw ParseError(lineno, "unknown state label: " + tok);
        pairs.emplace_back(toks[0], toks[1]);
    }

    return IndistinguishabilityRelation::from_pairs(std::move(space), pairs);
}

IndistinguishabilityRelation parse_relation_text(const std::string& text) {
    std::istringstream in(text);
    return parse_relation(in);
}

IndistinguishabilityRelation parse_relation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open relation file: " + path);
    return parse_relation(in);
}

std::string format_relation(const IndistinguishabilityRelation& rel) {
    std::string out = "states:";
    for (const auto& label : rel.space().labels()) {
        out += ' ';
        out += label;
    }
    out += '\n';
    for (auto [i, j] : rel.indistinguishable_pairs()) {
        out += rel.space().label(i);
        out += ' ';
        out += rel.space().label(j);
        out += '\n';
    }
    return out;
}

}  // namespace tolrel
