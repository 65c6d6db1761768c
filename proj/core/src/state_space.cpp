#include "tolrel/state_space.hpp"

#include <cctype>
#include <stdexcept>

#include "tolrel/errors.hpp"

namespace tolrel {

namespace {

bool valid_label(const std::string& label) {
    if (label.empty() || label.front() == '#') return false;
    for (unsigned char c : label)
        if (std::isspace(c)) return false;
    return true;
}

}  // namespace

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
        throw std::invalid_argument("state space needs at least one state");
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const std::string& label = labels_[i];
        if (!valid_label(label))
            throw std::invalid_argument(
                "bad state label '" + label +
                "': labels are non-empty, contain no whitespace and do not start with '#'");
        if (!index_.emplace(label, i).second)
            throw std::invalid_argument("duplicate state label '" + label + "'");
    }
}

std::optional<std::size_t> StateSpace::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t StateSpace::index_of(std::string_view label) const {
    auto i = find(label);
    if (!i) throw UnknownLabel(std::string(label));
    return *i;
}

StateSet StateSpace::set_of(const std::vector<std::string>& labels) const {
    StateSet set;
    for (const auto& label : labels) set.insert(index_of(label));
    return set;
}

std::string StateSpace::format_set(StateSet set) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : set.indices()) {
        if (!first) out += ", ";
        out += label(i);
        first = false;
    }
    out += "}";
    return out;
}

StateSpace StateSpace::numbered(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    return StateSpace(std::move(labels));
}

}  // namespace tolrel
