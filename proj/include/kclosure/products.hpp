#pragma once

#include <utility>
#include <vector>

#include "kclosure/perm_group.hpp"

namespace kclosure {

// Disjoint-union action on n1 + n2 points: a's points keep their labels,
// b's points are shifted by n1.
Permutation embed_sum(const Permutation& a, const Permutation& b);
PermGroup direct_sum(const PermGroup& a, const PermGroup& b);

// Coordinatewise action on n1 * n2 points with the fixed pair encoding
// (alpha, beta) -> alpha * n2 + beta.
struct ProductAction {
  PermGroup group;
  unsigned left_degree;
  unsigned right_degree;

  Point encode(Point alpha, Point beta) const {
    return alpha * right_degree + beta;
  }
  std::pair<Point, Point> decode(Point t) const {
    return {t / right_degree, t % right_degree};
  }
};

Permutation embed_product(const Permutation& a, const Permutation& b);
ProductAction direct_product_action(const PermGroup& a, const PermGroup& b);

// Action induced on a block list: block i maps to the block equal to its
// setwise image. Throws InvalidBlockSystem when an image is not a listed
// block. Blocks need not cover the domain but must not overlap.
Permutation induced_permutation(const Permutation& g,
                                const std::vector<PointSet>& blocks);

struct InducedAction {
  PermGroup group;                            // acts on block indices
  std::vector<Permutation> generator_images;  // aligned with the source gens
};

InducedAction induced_action(const PermGroup& g,
                             const std::vector<PointSet>& blocks);

// Restriction of g to an invariant point set, relabeled by position.
Permutation restrict_to(const Permutation& g, const PointSet& domain);
PermGroup restrict_group(const PermGroup& g, const PointSet& domain);

// Elements stabilizing delta setwise, as a group. Enumerates g, hence the
// budget.
PermGroup setwise_stabilizer(const PermGroup& g, const PointSet& delta,
                             std::uint64_t budget = kDefaultElementBudget);

}  // namespace kclosure
