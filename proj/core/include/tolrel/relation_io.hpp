#ifndef TOLREL_RELATION_IO_HPP
#define TOLREL_RELATION_IO_HPP

#include <iosfwd>
#include <string>

#include "tolrel/relation.hpp"

namespace tolrel {

/// Line-oriented relation text format:
///
///   # comment
///   states: a b c
///   a b
///   b c
///
/// The first non-comment line declares the states (unique whitespace-free
/// labels); each following line declares one indistinguishable pair.
/// The diagonal is implicit, pairs are symmetric and duplicates are
/// idempotent. Blank lines and lines starting with '#' are ignored.
/// Throws ParseError (with 1-based line number) on malformed input and
/// on more than 64 states.
IndistinguishabilityRelation parse_relation(std::istream& in);
IndistinguishabilityRelation parse_relation_text(const std::string& text);

/// Read and parse a file; file-open failures become ParseError on line 0.
IndistinguishabilityRelation parse_relation_file(const std::string& path);

/// Inverse of parse_relation: states line followed by the off-diagonal
/// pairs in index order. parse(format(r)) == r and the output is stable.
std::string format_relation(const IndistinguishabilityRelation& rel);

}  // namespace tolrel

#endif
