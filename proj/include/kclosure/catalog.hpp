#pragma once

#include <string_view>
#include <vector>

#include "kclosure/cycles.hpp"
#include "kclosure/perm_group.hpp"

namespace kclosure {

enum class Tag {
  nilpotent,
  p_group,
  abelian,
  transitive,
  regular,
  non_nilpotent,
};

const char* to_string(Tag t);

// Tags a group actually has, sorted by enum value. p_group means a prime
// power order > 1; the trivial group is nilpotent but not a p-group.
std::vector<Tag> computed_tags(const PermGroup& g);

struct CatalogEntry {
  GroupSpec spec;
  PermGroup group;
  std::vector<Tag> tags;  // sorted

  bool has(Tag t) const;
};

// The named test groups: small cyclic, elementary abelian, dihedral,
// quaternion and wreath examples plus sums, a product action and
// non-nilpotent controls. Built once; every entry's declared tags are
// re-derived from the group on first use and a mismatch throws
// InternalContradiction.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_entry(std::string_view name);  // nullptr if absent

}  // namespace kclosure
