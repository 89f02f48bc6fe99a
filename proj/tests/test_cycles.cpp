#include <doctest.h>

#include "kclosure/cycles.hpp"
#include "kclosure/errors.hpp"

using namespace kclosure;

TEST_CASE("parse_cycles reads 1-based disjoint cycles") {
  CHECK(parse_cycles("(1 2 3)(4 5 6)", 6).images() ==
        std::vector<Point>{1, 2, 0, 4, 5, 3});
  CHECK(parse_cycles("()", 4) == Permutation(4));
  CHECK(parse_cycles("(2 5)", 5).images() ==
        std::vector<Point>{0, 4, 2, 3, 1});
  CHECK(parse_cycles("  (1 2)  (3 4) ", 4).images() ==
        std::vector<Point>{1, 0, 3, 2});
  CHECK(parse_cycles("(3)", 3) == Permutation(3));  // explicit fixed point
}

TEST_CASE("parse_cycles rejects malformed input") {
  CHECK_THROWS_AS(parse_cycles("(1 1 2)", 3), ParseError);   // repeated
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), ParseError);     // 1-based
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), ParseError);     // out of range
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);      // unclosed
  CHECK_THROWS_AS(parse_cycles("1 2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 x)", 3), ParseError);
}

TEST_CASE("emit_cycles writes the canonical form") {
  CHECK(emit_cycles(Permutation({1, 2, 0, 4, 5, 3})) == "(1 2 3)(4 5 6)");
  CHECK(emit_cycles(Permutation(4)) == "()");
  CHECK(emit_cycles(Permutation({0, 4, 2, 3, 1})) == "(2 5)");
  // Cycles start at their smallest member and are ordered by it.
  CHECK(emit_cycles(Permutation({2, 3, 0, 1})) == "(1 3)(2 4)");
}

TEST_CASE("cycle notation round-trips") {
  std::vector<Permutation> perms{
      Permutation(5),
      Permutation({1, 2, 3, 4, 0}),
      Permutation({4, 3, 2, 1, 0}),
      Permutation({2, 3, 1, 0, 7, 6, 4, 5}),
  };
  for (const auto& g : perms)
    CHECK(parse_cycles(emit_cycles(g), g.degree()) == g);
}

TEST_CASE("group spec parse and emit") {
  const std::string text =
      "# a comment\n"
      "# name: C6-regular\n"
      "\n"
      "degree 6\n"
      "gen (1 2 3 4 5 6)\n";
  GroupSpec spec = parse_group_spec(text);
  CHECK(spec.name == "C6-regular");
  CHECK(spec.degree == 6);
  REQUIRE(spec.generators.size() == 1);
  CHECK(spec.generators[0] == "(1 2 3 4 5 6)");
  CHECK(to_group(spec).order() == 6);

  CHECK(parse_group_spec(emit_group_spec(spec)) == spec);

  GroupSpec anon = parse_group_spec("degree 4\n");
  CHECK(anon.name.empty());
  CHECK(anon.generators.empty());
  CHECK(to_group(anon).is_trivial());
  CHECK(parse_group_spec(emit_group_spec(anon)) == anon);
}

TEST_CASE("group spec errors") {
  CHECK_THROWS_AS(parse_group_spec("gen (1 2)\ndegree 3\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 3\ndegree 3\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 0\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree -2\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 3 extra\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 3\ngen\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 3\ngen (1 4)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("order 6\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(""), ParseError);
  CHECK_THROWS_AS(load_group_spec("/nonexistent/path.grp"), ParseError);
}

TEST_CASE("from_group emits parseable generators") {
  PermGroup d4(4, {Permutation({1, 2, 3, 0}), Permutation({2, 1, 0, 3})});
  GroupSpec spec = from_group("D4-natural", d4);
  CHECK(spec.degree == 4);
  CHECK(spec.generators == std::vector<std::string>{"(1 2 3 4)", "(1 3)"});
  CHECK(to_group(spec).same_element_set(d4));
  CHECK(parse_group_spec(emit_group_spec(spec)) == spec);
}
