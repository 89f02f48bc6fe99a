#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kclosure/perm_group.hpp"

namespace kclosure {

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

// Partition of the n^k tuples over {0..n-1} into group orbits, stored as a
// flat id table over the mixed-radix encoding
//   encode(t) = sum_i t[i] * n^(k-1-i).
// Orbit ids are assigned in increasing order of the orbit's lexicographically
// least tuple (its representative).
class TupleOrbitPartition {
 public:
  TupleOrbitPartition(unsigned degree, unsigned arity,
                      std::vector<std::int32_t> ids);

  unsigned degree() const { return degree_; }
  unsigned arity() const { return arity_; }
  std::uint64_t tuple_count() const { return ids_.size(); }
  std::int32_t orbit_count() const { return count_; }

  std::uint64_t encode(std::span<const Point> tuple) const;
  std::vector<Point> decode(std::uint64_t t) const;

  std::int32_t orbit_of(std::uint64_t encoded) const { return ids_[encoded]; }
  std::int32_t orbit_of(std::span<const Point> tuple) const {
    return ids_[encode(tuple)];
  }

  const std::vector<std::int32_t>& ids() const { return ids_; }
  // Lexicographically least tuple of each orbit, indexed by orbit id.
  const std::vector<std::vector<Point>>& representatives() const {
    return reps_;
  }
  const std::vector<std::uint64_t>& orbit_sizes() const { return sizes_; }

  bool operator==(const TupleOrbitPartition& other) const {
    return degree_ == other.degree_ && arity_ == other.arity_ &&
           ids_ == other.ids_;
  }

 private:
  unsigned degree_;
  unsigned arity_;
  std::vector<std::int32_t> ids_;
  std::int32_t count_ = 0;
  std::vector<std::vector<Point>> reps_;
  std::vector<std::uint64_t> sizes_;
};

// Orbits of g on ordered k-tuples. Throws BudgetExceeded when n^k would
// exceed the budget.
TupleOrbitPartition k_orbits(const PermGroup& g, unsigned k,
                             std::uint64_t tuple_budget = kDefaultTupleBudget);

// True iff x maps every orbit of the partition onto itself.
bool preserves_partition(const Permutation& x, const TupleOrbitPartition& part);

// Membership in the k-closure per the tuple-wise criterion: for every
// k-tuple t there is some g in the group with t^x = t^g. Checked directly
// against the enumerated elements, independent of any orbit table.
bool wielandt_member(const PermGroup& g, unsigned k, const Permutation& x,
                     std::uint64_t tuple_budget = kDefaultTupleBudget,
                     std::uint64_t element_budget = kDefaultElementBudget);

}  // namespace kclosure
