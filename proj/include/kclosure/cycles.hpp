#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kclosure/perm_group.hpp"

namespace kclosure {

// Cycle notation, 1-based at this boundary: "(1 2 3)(4 5 6)" with
// whitespace-separated points, "()" for the identity. Points absent from
// every cycle are fixed. Throws ParseError on syntax errors, out-of-range
// points and repeated points.
Permutation parse_cycles(const std::string& text, unsigned degree);

// Canonical disjoint-cycle form: cycles ordered by smallest member, each
// written starting from it, fixed points omitted, "()" for the identity.
// parse_cycles(emit_cycles(g), g.degree()) == g.
std::string emit_cycles(const Permutation& g);

// Hand-editable group description. The degree is explicit because cycle
// notation cannot express trailing fixed points.
struct GroupSpec {
  std::string name;                     // empty when anonymous
  unsigned degree = 0;
  std::vector<std::string> generators;  // cycle notation, 1-based

  bool operator==(const GroupSpec&) const = default;
};

PermGroup to_group(const GroupSpec& spec);
GroupSpec from_group(std::string name, const PermGroup& g);

// Text format, line-oriented:
//   # name: <name>        optional; other # comments and blank lines skipped
//   degree N              required, first directive
//   gen <cycle-notation>  zero or more
std::string emit_group_spec(const GroupSpec& spec);
GroupSpec parse_group_spec(std::istream& in);
GroupSpec parse_group_spec(const std::string& text);
GroupSpec load_group_spec(const std::string& path);  // ParseError with path

}  // namespace kclosure
