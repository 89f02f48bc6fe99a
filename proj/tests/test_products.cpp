#include <doctest.h>

#include <algorithm>

#include "kclosure/products.hpp"

using namespace kclosure;

TEST_CASE("embed_sum shifts the right factor") {
  Permutation a({1, 0});           // swap on 2 points
  Permutation b({1, 2, 0});        // 3-cycle
  Permutation s = embed_sum(a, b);
  CHECK(s.degree() == 5);
  CHECK(s.images() == std::vector<Point>{1, 0, 3, 4, 2});
}

TEST_CASE("direct_sum acts independently on each block") {
  PermGroup g = direct_sum(PermGroup::cyclic(2), PermGroup::cyclic(3));
  CHECK(g.degree() == 5);
  CHECK(g.order() == 6);
  auto orbits = g.orbits();
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].members == std::vector<Point>{0, 1});
  CHECK(orbits[1].members == std::vector<Point>{2, 3, 4});
  CHECK(g.is_abelian());
  CHECK_FALSE(g.is_transitive());
}

TEST_CASE("product action encodes pairs coordinatewise") {
  ProductAction pa = direct_product_action(PermGroup::cyclic(4),
                                           PermGroup::cyclic(3));
  CHECK(pa.left_degree == 4);
  CHECK(pa.right_degree == 3);
  CHECK(pa.group.degree() == 12);
  CHECK(pa.group.order() == 12);
  CHECK(pa.group.is_transitive());
  CHECK(pa.group.is_regular());
  for (Point alpha = 0; alpha < 4; ++alpha)
    for (Point beta = 0; beta < 3; ++beta) {
      Point t = pa.encode(alpha, beta);
      CHECK(pa.decode(t) == std::pair<Point, Point>{alpha, beta});
    }
  // The embedded pair (a, b) sends (alpha, beta) to (alpha^a, beta^b).
  Permutation a({1, 2, 3, 0});
  Permutation b({1, 2, 0});
  Permutation e = embed_product(a, b);
  CHECK(e.degree() == 12);
  for (Point alpha = 0; alpha < 4; ++alpha)
    for (Point beta = 0; beta < 3; ++beta)
      CHECK(e[pa.encode(alpha, beta)] == pa.encode(a[alpha], b[beta]));
}

TEST_CASE("induced_permutation maps blocks to blocks") {
  Permutation shift({1, 2, 3, 4, 5, 0});
  std::vector<PointSet> blocks{{6, {0, 2, 4}}, {6, {1, 3, 5}}};
  Permutation ind = induced_permutation(shift, blocks);
  CHECK(ind.images() == std::vector<Point>{1, 0});

  std::vector<PointSet> bad{{6, {0, 1}}, {6, {2, 3}}};
  CHECK_THROWS_AS(induced_permutation(shift, bad), InvalidBlockSystem);
}

TEST_CASE("induced_action on the parity blocks of C6") {
  PermGroup c6 = PermGroup::cyclic(6);
  std::vector<PointSet> blocks{{6, {0, 2, 4}}, {6, {1, 3, 5}}};
  InducedAction act = induced_action(c6, blocks);
  CHECK(act.group.degree() == 2);
  CHECK(act.group.order() == 2);
  REQUIRE(act.generator_images.size() == c6.generators().size());
  CHECK(act.generator_images[0].images() == std::vector<Point>{1, 0});
}

TEST_CASE("restriction to an invariant orbit") {
  PermGroup g(6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation({0, 1, 3, 2, 4, 5}),
                  Permutation({0, 1, 2, 3, 5, 4})});
  PointSet mid{6, {2, 3}};
  CHECK(restrict_to(g.generators()[1], mid).images() ==
        std::vector<Point>{1, 0});
  CHECK(restrict_to(g.generators()[0], mid).images() ==
        std::vector<Point>{0, 1});
  PermGroup r = restrict_group(g, mid);
  CHECK(r.degree() == 2);
  CHECK(r.order() == 2);
}

TEST_CASE("setwise stabilizer inside a cyclic group") {
  PermGroup c6 = PermGroup::cyclic(6);
  PermGroup stab = setwise_stabilizer(c6, PointSet{6, {0, 3}});
  // Only the identity and the half-turn fix {0, 3} as a set.
  CHECK(stab.order() == 2);
  CHECK(stab.contains(Permutation({3, 4, 5, 0, 1, 2})));

  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup stab2 = setwise_stabilizer(s3, PointSet{3, {0, 1}});
  CHECK(stab2.order() == 2);
  CHECK(stab2.contains(Permutation({1, 0, 2})));
}
