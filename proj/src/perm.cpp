#include "kclosure/perm.hpp"

#include <algorithm>
#include <numeric>

#include "kclosure/kernels.hpp"

namespace kclosure {

Permutation::Permutation(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  const auto n = images_.size();
  std::vector<bool> seen(n, false);
  for (Point a : images_) {
    if (a >= n || seen[a])
      throw std::invalid_argument("image vector is not a permutation");
    seen[a] = true;
  }
}

bool Permutation::is_identity() const {
  for (Point a = 0; a < images_.size(); ++a)
    if (images_[a] != a) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point a = 0; a < images_.size(); ++a) inv[images_[a]] = a;
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::element_order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Point a = 0; a < images_.size(); ++a) {
    if (seen[a]) continue;
    std::uint64_t len = 0;
    for (Point b = a; !seen[b]; b = images_[b]) {
      seen[b] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees differ");
  std::vector<Point> out(p.degree());
  kernels::active_kernels().compose(out.data(), p.images().data(),
                                    q.images().data(), p.degree());
  return Permutation(std::move(out));
}

Permutation power(const Permutation& p, std::uint64_t e) {
  Permutation acc(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

bool PointSet::contains(Point a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

PointSet image_of(const PointSet& s, const Permutation& g) {
  if (s.degree != g.degree())
    throw DegreeMismatch("image_of: degrees differ");
  PointSet out;
  out.degree = s.degree;
  out.members.reserve(s.members.size());
  for (Point a : s.members) out.members.push_back(g[a]);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace kclosure
