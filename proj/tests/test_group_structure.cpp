#include <doctest.h>

#include <algorithm>

#include "kclosure/group_structure.hpp"

using namespace kclosure;

namespace {

PermGroup q8_regular() {
  return PermGroup(8, {Permutation({2, 3, 1, 0, 7, 6, 4, 5}),
                       Permutation({4, 5, 6, 7, 1, 0, 3, 2})});
}

PermGroup s3_natural() {
  return PermGroup(3, {Permutation({1, 0, 2}), Permutation({1, 2, 0})});
}

}  // namespace

TEST_CASE("prime arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7 * 13

  using F = std::vector<std::pair<unsigned, unsigned>>;
  CHECK(factorize(1) == F{});
  CHECK(factorize(12) == F{{2, 2}, {3, 1}});
  CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});

  CHECK(prime_support(40320).primes() == std::vector<unsigned>{2, 3, 5, 7});
  CHECK_THROWS_AS(PrimeSet({4}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSet({2, 1}), std::invalid_argument);

  PrimeSet two_three({3, 2});  // order normalized
  CHECK(two_three.primes() == std::vector<unsigned>{2, 3});
  CHECK(n_pi(360, two_three) == 72);
  CHECK(n_pi(12, PrimeSet({5})) == 1);
  CHECK(n_pi(12, PrimeSet{}) == 1);
  CHECK(n_pi(12, PrimeSet({2, 3, 7})) == 12);
}

TEST_CASE("p_part splits an element by prime") {
  Permutation g({1, 2, 3, 4, 5, 0});  // order 6
  Permutation g2 = p_part(g, 2);
  Permutation g3 = p_part(g, 3);
  CHECK(g2.element_order() == 2);
  CHECK(g3.element_order() == 3);
  CHECK(compose(g2, g3) == g);          // parts commute and recompose
  CHECK(compose(g3, g2) == g);
  CHECK(p_part(g, 5) == Permutation(6));  // 5 does not divide 6
  CHECK_THROWS_AS(p_part(g, 6), std::invalid_argument);
}

TEST_CASE("sylow subgroups of nilpotent groups") {
  PermGroup c6 = PermGroup::cyclic(6);
  CHECK(sylow_subgroup(c6, 2).order() == 2);
  CHECK(sylow_subgroup(c6, 3).order() == 3);
  CHECK(sylow_subgroup(c6, 5).order() == 1);

  PermGroup q8 = q8_regular();
  PermGroup syl2 = sylow_subgroup(q8, 2);
  CHECK(syl2.order() == 8);
  CHECK(syl2.same_element_set(q8));

  CHECK_THROWS_AS(sylow_subgroup(s3_natural(), 2), NotNilpotent);
}

TEST_CASE("nilpotency via the Sylow product criterion") {
  auto [ok6, dec6] = is_nilpotent(PermGroup::cyclic(6));
  CHECK(ok6);
  REQUIRE(dec6.has_value());
  REQUIRE(dec6->parts.size() == 2);
  CHECK(dec6->parts[0].first == 2);
  CHECK(dec6->parts[0].second.order() == 2);
  CHECK(dec6->parts[1].first == 3);
  CHECK(dec6->parts[1].second.order() == 3);
  CHECK(dec6->part(3)->order() == 3);
  CHECK(dec6->part(5) == nullptr);

  auto [ok_q8, dec_q8] = is_nilpotent(q8_regular());
  CHECK(ok_q8);
  REQUIRE(dec_q8.has_value());
  CHECK(dec_q8->parts.size() == 1);

  auto [ok_s3, dec_s3] = is_nilpotent(s3_natural());
  CHECK_FALSE(ok_s3);
  CHECK_FALSE(dec_s3.has_value());

  auto [ok_triv, dec_triv] = is_nilpotent(PermGroup(4));
  CHECK(ok_triv);
  REQUIRE(dec_triv.has_value());
  CHECK(dec_triv->parts.empty());

  // D5 has a non-normal Sylow 2-subgroup.
  PermGroup d5(5, {Permutation({1, 2, 3, 4, 0}), Permutation({0, 4, 3, 2, 1})});
  CHECK_FALSE(is_nilpotent(d5).first);
}

TEST_CASE("hall subgroups multiply out of the decomposition") {
  PermGroup c12 = PermGroup::cyclic(12);
  auto [ok, dec] = is_nilpotent(c12);
  REQUIRE(ok);
  CHECK(hall_subgroup(c12, PrimeSet({2}), *dec).order() == 4);
  CHECK(hall_subgroup(c12, PrimeSet({3}), *dec).order() == 3);
  CHECK(hall_subgroup(c12, PrimeSet({2, 3}), *dec).order() == 12);
  CHECK(hall_subgroup(c12, PrimeSet({5}), *dec).order() == 1);
  CHECK(hall_subgroup(c12, PrimeSet{}, *dec).is_trivial());
}

TEST_CASE("hall orbit sizes and kernel property") {
  PermGroup c12 = PermGroup::cyclic(12);
  auto dec = is_nilpotent(c12).second;
  REQUIRE(dec.has_value());
  std::vector<std::vector<unsigned>> prime_sets{{2}, {3}, {2, 3}};
  for (const auto& primes : prime_sets) {
    PrimeSet pi(primes);
    PermGroup h = hall_subgroup(c12, pi, *dec);
    CheckReport rep = check_hall_orbits(c12, h, pi);
    CHECK(rep.passed());
    for (const auto& orbit : h.orbits())
      CHECK(orbit.members.size() == n_pi(12, pi));
  }
}

TEST_CASE("conjugation by a relabeling") {
  Permutation x({1, 0, 2});    // (0 1)
  Permutation rho({1, 2, 0});  // 0->1->2->0
  CHECK(conjugate(x, rho).images() == std::vector<Point>{0, 2, 1});
  CHECK(conjugate(x, Permutation(3)) == x);
  CHECK_THROWS_AS(conjugate(x, Permutation(4)), DegreeMismatch);
}

TEST_CASE("transitive decomposition of C6 over 2") {
  PermGroup c6 = PermGroup::cyclic(6);
  TransitiveDecomposition dec = transitive_decompose(c6, 2);
  CHECK(dec.prime == 2);
  REQUIRE(dec.p_orbits.size() == 3);
  REQUIRE(dec.h_orbits.size() == 2);
  CHECK(dec.p_orbits[0].members == std::vector<Point>{0, 3});
  CHECK(dec.h_orbits[0].members == std::vector<Point>{0, 2, 4});
  CHECK(dec.p_prime.degree() == 2);
  CHECK(dec.p_prime.order() == 2);
  CHECK(dec.h_prime.degree() == 3);
  CHECK(dec.h_prime.order() == 3);
  CHECK(dec.rho.size() == 6);
  CHECK(dec.rho[0] == std::pair<Point, Point>{0, 0});

  // The conjugated group really is the coordinatewise product.
  ProductAction pa = direct_product_action(dec.p_prime, dec.h_prime);
  for (const auto& gen : c6.generators())
    CHECK(pa.group.contains(conjugate(gen, dec.conjugator)));
}

TEST_CASE("transitive decomposition of C12 over both primes") {
  PermGroup c12 = PermGroup::cyclic(12);
  for (unsigned p : {2u, 3u}) {
    TransitiveDecomposition dec = transitive_decompose(c12, p);
    std::uint64_t np = (p == 2) ? 4 : 3;
    CHECK(dec.p_orbits.size() == 12 / np);
    for (const auto& orbit : dec.p_orbits) CHECK(orbit.members.size() == np);
    CHECK(dec.p_prime.order() == np);
    CHECK(dec.h_prime.order() == 12 / np);
    ProductAction pa = direct_product_action(dec.p_prime, dec.h_prime);
    std::vector<Permutation> gens;
    for (const auto& g : c12.generators())
      gens.push_back(conjugate(g, dec.conjugator));
    CHECK(PermGroup(12, gens).same_element_set(pa.group));
  }
}

TEST_CASE("transitive decomposition of the regular quaternion group") {
  TransitiveDecomposition dec = transitive_decompose(q8_regular(), 2);
  CHECK(dec.p_orbits.size() == 1);
  CHECK(dec.h_orbits.size() == 8);
  CHECK(dec.p_prime.order() == 8);
  CHECK(dec.h_prime.order() == 1);
}

TEST_CASE("transitive decomposition rejects bad inputs") {
  CHECK_THROWS_AS(transitive_decompose(s3_natural(), 2), NotNilpotent);
  PermGroup intrans(6, {Permutation({1, 2, 0, 3, 4, 5})});
  CHECK_THROWS_AS(transitive_decompose(intrans, 3), std::invalid_argument);
  CHECK_THROWS_AS(transitive_decompose(PermGroup::cyclic(6), 5),
                  std::invalid_argument);
}
