#ifndef TOLREL_ERRORS_HPP
#define TOLREL_ERRORS_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace tolrel {

/// A label was used that is not a state of the space at hand.
class UnknownLabel : public std::runtime_error {
public:
    explicit UnknownLabel(std::string label)
        : std::runtime_error("unknown state label: " + label),
          label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

/// A state was declared distinguishable from itself. Reflexivity of the
/// indistinguishability relation is definitional, so this is always a
/// caller error rather than a no-op.
class SelfDistinction : public std::runtime_error {
public:
    explicit SelfDistinction(const std::string& label)
        : std::runtime_error("cannot distinguish state '" + label +
                             "' from itself") {}
};

/// Raised by equivalence_classes when the relation is not transitive.
/// Carries the witness triple (a, b, c): a ~ b and b ~ c hold but a ~ c
/// does not, so no quotient partition exists and the caller must fall
/// back to tolerance classes.
class NotTransitive : public std::runtime_error {
public:
    NotTransitive(std::array<std::size_t, 3> witness, const std::string& what)
        : std::runtime_error(what), witness_(witness) {}

    const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

private:
    std::array<std::size_t, 3> witness_;
};

/// The given state set is not a fixed point of the closure operator
/// S -> { w | w ~ every member of S }, i.e. not a maximal clique.
class NotACore : public std::runtime_error {
public:
    explicit NotACore(const std::string& what) : std::runtime_error(what) {}
};

/// A requested information-set body violates lower <= body <= upper.
class BodyOutOfBounds : public std::runtime_error {
public:
    explicit BodyOutOfBounds(const std::string& what) : std::runtime_error(what) {}
};

/// A size cap was exceeded: 64 states for the bit-row relation
/// representation, 6 states for exhaustive relation enumeration.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Threshold generator was given a value vector whose length differs
/// from the state count.
class LengthMismatch : public std::runtime_error {
public:
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed relation file. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace tolrel

#endif
