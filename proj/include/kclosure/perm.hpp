#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "kclosure/errors.hpp"

namespace kclosure {

using Point = std::uint32_t;

// Permutation of {0, ..., n-1}, stored as the image vector.
// Right action throughout: the image of a under g is g[a], and
// compose(p, q) applies p first, so a^(pq) = q[p[a]].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(unsigned degree);             // identity
  explicit Permutation(std::vector<Point> images);   // must be a bijection

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator[](Point a) const { return images_[a]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Order as a group element: lcm of cycle lengths.
  std::uint64_t element_order() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

// p first, then q. Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation power(const Permutation& p, std::uint64_t e);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

// Sorted subset of {0, ..., degree-1}.
struct PointSet {
  unsigned degree = 0;
  std::vector<Point> members;  // strictly increasing

  bool contains(Point a) const;
  std::size_t size() const { return members.size(); }

  bool operator==(const PointSet&) const = default;
  auto operator<=>(const PointSet&) const = default;
};

// Image of a set under g, re-sorted.
PointSet image_of(const PointSet& s, const Permutation& g);

}  // namespace kclosure
