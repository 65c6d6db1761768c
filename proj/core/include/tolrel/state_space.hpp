#ifndef TOLREL_STATE_SPACE_HPP
#define TOLREL_STATE_SPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tolrel/state_set.hpp"

namespace tolrel {

/// Ordered finite set of labeled states. Labels are distinct non-empty
/// tokens without whitespace and may not start with '#', so every space
/// can be written in the line-oriented relation file format.
class StateSpace {
public:
    /// Throws std::invalid_argument on an empty list or a bad label.
    explicit StateSpace(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> find(std::string_view label) const;

    /// Throws UnknownLabel.
    std::size_t index_of(std::string_view label) const;

    bool contains(std::string_view label) const { return find(label).has_value(); }

    /// All states as a set; requires size() <= 64.
    StateSet all() const { return StateSet::full(size()); }

    /// Resolve a list of labels to a set. Throws UnknownLabel.
    StateSet set_of(const std::vector<std::string>& labels) const;

    /// Render a set as "{a, b, c}" in index order.
    std::string format_set(StateSet set) const;

    friend bool operator==(const StateSpace& a, const StateSpace& b) {
        return a.labels_ == b.labels_;
    }

    /// Auto-labeled space s0, s1, ..., s{n-1}.
    static StateSpace numbered(std::size_t n);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace tolrel

#endif
