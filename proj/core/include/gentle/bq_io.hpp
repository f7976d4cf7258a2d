#ifndef GENTLE_BQ_IO_HPP
#define GENTLE_BQ_IO_HPP

#include <iosfwd>
#include <string>

#include "gentle/bound_quiver.hpp"

namespace gentle {

// Line-oriented text format.  '#' starts a comment, blank lines are ignored,
// tokens are separated by spaces or tabs.  Directives:
//
//   vertex <name>
//   arrow <name> <source> <target>
//   relation <a1> <a2> ... <al>
//
// Relation arrows appear in composition order: each arrow's source is the
// next arrow's target, and "relation a b" forbids traversing b then a.
// Names must be declared before they are referenced.  Syntax and reference
// errors raise ParseError with a 1-based position; whole-structure problems
// (no vertices, isolated vertex, inadmissible relation set) surface as the
// constructors' own InputError.
BoundQuiver read_bq(std::istream& in);
BoundQuiver read_bq_string(const std::string& text);
BoundQuiver read_bq_file(const std::string& path);

// Canonical form: sorted vertices, then sorted arrows, then sorted relations,
// under a header comment restating the composition-order convention.
// Reading the output back yields an equal bound quiver.
void write_bq(std::ostream& out, const BoundQuiver& bq);
std::string write_bq_string(const BoundQuiver& bq);
void write_bq_file(const std::string& path, const BoundQuiver& bq);

}  // namespace gentle

#endif  // GENTLE_BQ_IO_HPP
