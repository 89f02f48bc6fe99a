#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "kclosure/perm.hpp"

namespace kclosure {

inline constexpr std::uint64_t kDefaultElementBudget = 1u << 20;

// Permutation group given by generators, with a stabilizer chain built
// eagerly at construction (base 0, 1, ..., n-1), so all queries on a
// constructed group are const and safe to share across threads.
class PermGroup {
 public:
  explicit PermGroup(unsigned degree);  // trivial group
  PermGroup(unsigned degree, std::vector<Permutation> generators);

  unsigned degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Permutation& x) const;
  bool is_trivial() const { return order() == 1; }

  // All elements, sorted lexicographically by image vector.
  // Throws BudgetExceeded when order() > budget.
  std::vector<Permutation> elements(
      std::uint64_t budget = kDefaultElementBudget) const;

  // Orbits as sorted point sets, ordered by smallest member.
  std::vector<PointSet> orbits() const;
  bool is_transitive() const;
  bool is_regular() const;   // transitive with order == degree
  bool is_abelian() const;   // generators pairwise commute

  // Same subgroup of Sym(degree)? (equal orders + mutual containment)
  bool same_element_set(const PermGroup& other) const;

  static PermGroup symmetric(unsigned degree);
  static PermGroup cyclic(unsigned degree);  // <(0 1 ... n-1)>

 private:
  unsigned degree_;
  std::vector<Permutation> gens_;
  struct Chain;
  std::shared_ptr<const Chain> chain_;
};

// Greedy generating set for a full element list (which must be closed under
// the group operations): scan in sorted order, keep elements that grow the
// generated subgroup, stop at full order. Deterministic.
std::vector<Permutation> reduce_generators(
    unsigned degree, const std::vector<Permutation>& elements);

// Right-regular representation: points are the elements of g in sorted
// order, acted on by right multiplication; the new generators correspond
// one-to-one with g.generators().
PermGroup right_regular(const PermGroup& g,
                        std::uint64_t budget = kDefaultElementBudget);

}  // namespace kclosure
