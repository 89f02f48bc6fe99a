#include <doctest.h>

#include "kclosure/perm.hpp"

using namespace kclosure;

TEST_CASE("compose applies left argument first") {
  // p = (0 1), q = (1 2) on 3 points: 0 ->p 1 ->q 2.
  Permutation p({1, 0, 2});
  Permutation q({0, 2, 1});
  Permutation pq = compose(p, q);
  CHECK(pq.images() == std::vector<Point>{2, 0, 1});
  CHECK(compose(q, p).images() == std::vector<Point>{1, 2, 0});
}

TEST_CASE("identity laws and inverse") {
  Permutation id(5);
  Permutation g({1, 2, 3, 4, 0});
  CHECK(compose(id, g) == g);
  CHECK(compose(g, id) == g);
  CHECK(compose(g, g.inverse()).is_identity());
  CHECK(compose(g.inverse(), g).is_identity());
  CHECK(id.is_identity());
  CHECK_FALSE(g.is_identity());
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("degree mismatch throws") {
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), DegreeMismatch);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(Permutation({1, 2, 3, 4, 5, 0}).element_order() == 6);
  CHECK(Permutation({1, 0, 3, 4, 2}).element_order() == 6);  // 2-cycle * 3-cycle
  CHECK(Permutation(4).element_order() == 1);
}

TEST_CASE("power by repeated squaring") {
  Permutation g({1, 2, 3, 4, 5, 0});
  CHECK(power(g, 0).is_identity());
  CHECK(power(g, 1) == g);
  CHECK(power(g, 6).is_identity());
  CHECK(power(g, 3) == compose(g, compose(g, g)));
  CHECK(power(g, 7) == g);
}

TEST_CASE("point sets sort and search") {
  PointSet s{6, {0, 3, 5}};
  CHECK(s.contains(0));
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(1));
  Permutation g({1, 2, 3, 4, 5, 0});
  CHECK(image_of(s, g).members == std::vector<Point>{0, 1, 4});
  CHECK(image_of(s, g).degree == 6);
}
