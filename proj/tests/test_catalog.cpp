#include <doctest.h>

#include <set>

#include "kclosure/catalog.hpp"
#include "kclosure/group_structure.hpp"

using namespace kclosure;

TEST_CASE("catalog loads with verified tags") {
  const auto& entries = catalog();
  CHECK(entries.size() >= 19);
  std::set<std::string> names;
  for (const auto& e : entries) {
    CHECK(names.insert(e.spec.name).second);  // unique names
    CHECK(e.group.degree() == e.spec.degree);
    CHECK(computed_tags(e.group) == e.tags);
    CHECK(parse_group_spec(emit_group_spec(e.spec)) == e.spec);
  }
}

TEST_CASE("expected entries and orders") {
  struct Expect {
    const char* name;
    unsigned degree;
    std::uint64_t order;
  };
  const std::vector<Expect> expected{
      {"trivial-1", 1, 1},    {"trivial-4", 4, 1},
      {"C2-regular", 2, 2},   {"C3-regular", 3, 3},
      {"C4-regular", 4, 4},   {"C5-regular", 5, 5},
      {"C6-regular", 6, 6},   {"C8-regular", 8, 8},
      {"C12-regular", 12, 12}, {"E4-regular", 4, 4},
      {"C2^3-intransitive", 6, 8}, {"C3-diagonal", 6, 3},
      {"D4-natural", 4, 8},   {"Q8-regular", 8, 8},
      {"C2wrC2-regular", 8, 8}, {"C2xC3-product", 6, 6},
      {"C4+C3-sum", 7, 12},   {"Q8+C3-sum", 11, 24},
      {"S3-natural", 3, 6},   {"D5-natural", 5, 10},
  };
  for (const auto& ex : expected) {
    const CatalogEntry* e = find_entry(ex.name);
    REQUIRE_MESSAGE(e != nullptr, ex.name);
    CHECK(e->spec.degree == ex.degree);
    CHECK(e->group.order() == ex.order);
  }
  CHECK(find_entry("no-such-group") == nullptr);
}

TEST_CASE("tag examples") {
  const CatalogEntry* c6 = find_entry("C6-regular");
  REQUIRE(c6 != nullptr);
  CHECK(c6->has(Tag::nilpotent));
  CHECK(c6->has(Tag::abelian));
  CHECK(c6->has(Tag::transitive));
  CHECK(c6->has(Tag::regular));
  CHECK_FALSE(c6->has(Tag::p_group));  // order 6 is not a prime power

  const CatalogEntry* s3 = find_entry("S3-natural");
  REQUIRE(s3 != nullptr);
  CHECK(s3->has(Tag::non_nilpotent));
  CHECK(s3->has(Tag::transitive));
  CHECK_FALSE(s3->has(Tag::nilpotent));

  const CatalogEntry* q8 = find_entry("Q8-regular");
  REQUIRE(q8 != nullptr);
  CHECK(q8->has(Tag::nilpotent));
  CHECK(q8->has(Tag::p_group));
  CHECK(q8->has(Tag::regular));
  CHECK_FALSE(q8->has(Tag::abelian));
}

TEST_CASE("the two order-8 regular degree-8 entries are not isomorphic") {
  // Q8 has a unique involution; the wreath group has five.
  auto count_involutions = [](const PermGroup& g) {
    int n = 0;
    for (const auto& e : g.elements())
      if (e.element_order() == 2) ++n;
    return n;
  };
  CHECK(count_involutions(find_entry("Q8-regular")->group) == 1);
  CHECK(count_involutions(find_entry("C2wrC2-regular")->group) == 5);
}

TEST_CASE("the product-action entry is the regular C6 in another dress") {
  const CatalogEntry* prod = find_entry("C2xC3-product");
  REQUIRE(prod != nullptr);
  CHECK(prod->group.order() == 6);
  CHECK(prod->group.is_regular());
  // Same cycle type as a 6-cycle generator exists: some element has order 6.
  bool has_order_6 = false;
  for (const auto& e : prod->group.elements())
    has_order_6 = has_order_6 || e.element_order() == 6;
  CHECK(has_order_6);
}
