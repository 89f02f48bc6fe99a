#include "kclosure/korbit.hpp"

#include <algorithm>

#include "kclosure/kernels.hpp"

namespace kclosure {

namespace {

std::uint64_t checked_pow(unsigned n, unsigned k, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (total > budget / n)
      throw BudgetExceeded("tuple table over budget: " + std::to_string(n) +
                           "^" + std::to_string(k));
    total *= n;
  }
  return total;
}

}  // namespace

TupleOrbitPartition::TupleOrbitPartition(unsigned degree, unsigned arity,
                                         std::vector<std::int32_t> ids)
    : degree_(degree), arity_(arity), ids_(std::move(ids)) {
  count_ = ids_.empty() ? 0 : *std::max_element(ids_.begin(), ids_.end()) + 1;
  reps_.resize(count_);
  sizes_.assign(count_, 0);
  std::vector<bool> seen(count_, false);
  for (std::uint64_t t = 0; t < ids_.size(); ++t) {
    auto id = ids_[t];
    ++sizes_[id];
    if (!seen[id]) {
      seen[id] = true;
      reps_[id] = decode(t);  // ascending scan: first hit is lex-least
    }
  }
}

std::uint64_t TupleOrbitPartition::encode(std::span<const Point> tuple) const {
  std::uint64_t t = 0;
  for (Point a : tuple) t = t * degree_ + a;
  return t;
}

std::vector<Point> TupleOrbitPartition::decode(std::uint64_t t) const {
  std::vector<Point> tuple(arity_);
  for (unsigned i = arity_; i-- > 0;) {
    tuple[i] = static_cast<Point>(t % degree_);
    t /= degree_;
  }
  return tuple;
}

TupleOrbitPartition k_orbits(const PermGroup& g, unsigned k,
                             std::uint64_t tuple_budget) {
  if (k == 0) throw std::invalid_argument("k_orbits: k must be positive");
  const unsigned n = g.degree();
  const std::uint64_t total = checked_pow(n, k, tuple_budget);

  std::vector<std::int32_t> ids(total, -1);
  std::vector<std::uint64_t> stack;
  std::vector<Point> digits(k);
  std::int32_t next_id = 0;

  for (std::uint64_t t0 = 0; t0 < total; ++t0) {
    if (ids[t0] >= 0) continue;
    ids[t0] = next_id;
    stack.push_back(t0);
    while (!stack.empty()) {
      std::uint64_t t = stack.back();
      stack.pop_back();
      std::uint64_t tt = t;
      for (unsigned i = k; i-- > 0;) {
        digits[i] = static_cast<Point>(tt % n);
        tt /= n;
      }
      for (const auto& s : g.generators()) {
        std::uint64_t u = 0;
        for (unsigned i = 0; i < k; ++i) u = u * n + s[digits[i]];
        if (ids[u] < 0) {
          ids[u] = next_id;
          stack.push_back(u);
        }
      }
    }
    ++next_id;
  }
  return TupleOrbitPartition(n, k, std::move(ids));
}

bool preserves_partition(const Permutation& x,
                         const TupleOrbitPartition& part) {
  if (x.degree() != part.degree())
    throw DegreeMismatch("preserves_partition: degree differs");
  return kernels::active_kernels().partition_preserved(
      part.ids().data(), part.degree(), part.arity(), x.images().data());
}

bool wielandt_member(const PermGroup& g, unsigned k, const Permutation& x,
                     std::uint64_t tuple_budget,
                     std::uint64_t element_budget) {
  if (x.degree() != g.degree())
    throw DegreeMismatch("wielandt_member: degree differs");
  if (k == 0) throw std::invalid_argument("wielandt_member: k must be positive");
  const unsigned n = g.degree();
  const std::uint64_t total = checked_pow(n, k, tuple_budget);
  const auto elems = g.elements(element_budget);

  std::vector<Point> digits(k, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    bool matched = false;
    for (const auto& e : elems) {
      bool agrees = true;
      for (unsigned i = 0; i < k; ++i)
        if (x[digits[i]] != e[digits[i]]) {
          agrees = false;
          break;
        }
      if (agrees) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
    for (unsigned i = k; i-- > 0;) {
      if (++digits[i] < n) break;
      digits[i] = 0;
    }
  }
  return true;
}

}  // namespace kclosure
