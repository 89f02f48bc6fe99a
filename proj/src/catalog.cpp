#include "kclosure/catalog.hpp"

#include <algorithm>

#include "kclosure/errors.hpp"
#include "kclosure/group_structure.hpp"

namespace kclosure {

const char* to_string(Tag t) {
  switch (t) {
    case Tag::nilpotent: return "nilpotent";
    case Tag::p_group: return "p-group";
    case Tag::abelian: return "abelian";
    case Tag::transitive: return "transitive";
    case Tag::regular: return "regular";
    case Tag::non_nilpotent: return "non-nilpotent";
  }
  return "?";
}

std::vector<Tag> computed_tags(const PermGroup& g) {
  std::vector<Tag> tags;
  if (is_nilpotent(g).first)
    tags.push_back(Tag::nilpotent);
  else
    tags.push_back(Tag::non_nilpotent);
  if (factorize(g.order()).size() == 1) tags.push_back(Tag::p_group);
  if (g.is_abelian()) tags.push_back(Tag::abelian);
  if (g.is_transitive()) tags.push_back(Tag::transitive);
  if (g.is_regular()) tags.push_back(Tag::regular);
  std::sort(tags.begin(), tags.end());
  return tags;
}

bool CatalogEntry::has(Tag t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

struct RawEntry {
  const char* name;
  unsigned degree;
  std::vector<const char*> gens;
  std::vector<Tag> tags;
};

std::vector<CatalogEntry> build_catalog() {
  using enum Tag;
  const std::vector<RawEntry> raws{
      {"trivial-1", 1, {}, {nilpotent, abelian, transitive, regular}},
      {"trivial-4", 4, {}, {nilpotent, abelian}},
      {"C2-regular", 2, {"(1 2)"},
       {nilpotent, p_group, abelian, transitive, regular}},
      {"C3-regular", 3, {"(1 2 3)"},
       {nilpotent, p_group, abelian, transitive, regular}},
      {"C4-regular", 4, {"(1 2 3 4)"},
       {nilpotent, p_group, abelian, transitive, regular}},
      {"C5-regular", 5, {"(1 2 3 4 5)"},
       {nilpotent, p_group, abelian, transitive, regular}},
      {"C6-regular", 6, {"(1 2 3 4 5 6)"},
       {nilpotent, abelian, transitive, regular}},
      {"C8-regular", 8, {"(1 2 3 4 5 6 7 8)"},
       {nilpotent, p_group, abelian, transitive, regular}},
      {"C12-regular", 12, {"(1 2 3 4 5 6 7 8 9 10 11 12)"},
       {nilpotent, abelian, transitive, regular}},
      {"E4-regular", 4, {"(1 2)(3 4)", "(1 3)(2 4)"},
       {nilpotent, p_group, abelian, transitive, regular}},
      {"C2^3-intransitive", 6, {"(1 2)", "(3 4)", "(5 6)"},
       {nilpotent, p_group, abelian}},
      {"C3-diagonal", 6, {"(1 2 3)(4 5 6)"}, {nilpotent, p_group, abelian}},
      {"D4-natural", 4, {"(1 2 3 4)", "(1 3)"},
       {nilpotent, p_group, transitive}},
      {"Q8-regular", 8, {"(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"},
       {nilpotent, p_group, transitive, regular}},
      {"C2wrC2-regular", 8, {"(1 2 3 4)(5 8 7 6)", "(1 5)(2 6)(3 7)(4 8)"},
       {nilpotent, p_group, transitive, regular}},
      {"C2xC3-product", 6, {"(1 4)(2 5)(3 6)", "(1 2 3)(4 5 6)"},
       {nilpotent, abelian, transitive, regular}},
      {"C4+C3-sum", 7, {"(1 2 3 4)", "(5 6 7)"}, {nilpotent, abelian}},
      {"Q8+C3-sum", 11,
       {"(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)", "(9 10 11)"},
       {nilpotent}},
      {"S3-natural", 3, {"(1 2)", "(1 2 3)"}, {non_nilpotent, transitive}},
      {"D5-natural", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"},
       {non_nilpotent, transitive}},
  };

  std::vector<CatalogEntry> entries;
  entries.reserve(raws.size());
  for (const auto& raw : raws) {
    GroupSpec spec;
    spec.name = raw.name;
    spec.degree = raw.degree;
    for (const char* s : raw.gens) spec.generators.emplace_back(s);
    PermGroup g = to_group(spec);
    std::vector<Tag> declared = raw.tags;
    std::sort(declared.begin(), declared.end());
    if (computed_tags(g) != declared)
      throw InternalContradiction(std::string("catalog entry ") + raw.name +
                                  ": declared tags disagree with the group");
    entries.push_back(CatalogEntry{std::move(spec), std::move(g),
                                   std::move(declared)});
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.spec.name == name) return &e;
  return nullptr;
}

}  // namespace kclosure
