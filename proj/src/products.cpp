#include "kclosure/products.hpp"

#include <algorithm>
#include <map>

namespace kclosure {

Permutation embed_sum(const Permutation& a, const Permutation& b) {
  const unsigned n1 = a.degree(), n2 = b.degree();
  std::vector<Point> img(n1 + n2);
  for (Point x = 0; x < n1; ++x) img[x] = a[x];
  for (Point x = 0; x < n2; ++x) img[n1 + x] = n1 + b[x];
  return Permutation(std::move(img));
}

PermGroup direct_sum(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens;
  const Permutation id1(a.degree()), id2(b.degree());
  for (const auto& g : a.generators()) gens.push_back(embed_sum(g, id2));
  for (const auto& g : b.generators()) gens.push_back(embed_sum(id1, g));
  return PermGroup(a.degree() + b.degree(), std::move(gens));
}

Permutation embed_product(const Permutation& a, const Permutation& b) {
  const unsigned n1 = a.degree(), n2 = b.degree();
  std::vector<Point> img(static_cast<std::size_t>(n1) * n2);
  for (Point x = 0; x < n1; ++x)
    for (Point y = 0; y < n2; ++y) img[x * n2 + y] = a[x] * n2 + b[y];
  return Permutation(std::move(img));
}

ProductAction direct_product_action(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens;
  const Permutation id1(a.degree()), id2(b.degree());
  for (const auto& g : a.generators()) gens.push_back(embed_product(g, id2));
  for (const auto& g : b.generators()) gens.push_back(embed_product(id1, g));
  PermGroup grp(a.degree() * b.degree(), std::move(gens));
  return ProductAction{std::move(grp), a.degree(), b.degree()};
}

Permutation induced_permutation(const Permutation& g,
                                const std::vector<PointSet>& blocks) {
  std::map<std::vector<Point>, Point> index;
  for (Point i = 0; i < blocks.size(); ++i) {
    if (blocks[i].degree != g.degree())
      throw DegreeMismatch("induced_permutation: block degree differs");
    if (!index.emplace(blocks[i].members, i).second)
      throw InvalidBlockSystem("duplicate block");
  }
  std::vector<Point> img(blocks.size());
  for (Point i = 0; i < blocks.size(); ++i) {
    auto it = index.find(image_of(blocks[i], g).members);
    if (it == index.end())
      throw InvalidBlockSystem("block image is not a listed block");
    img[i] = it->second;
  }
  return Permutation(std::move(img));
}

InducedAction induced_action(const PermGroup& g,
                             const std::vector<PointSet>& blocks) {
  std::vector<Permutation> images;
  images.reserve(g.generators().size());
  for (const auto& s : g.generators())
    images.push_back(induced_permutation(s, blocks));
  PermGroup grp(static_cast<unsigned>(blocks.size()), images);
  return InducedAction{std::move(grp), std::move(images)};
}

Permutation restrict_to(const Permutation& g, const PointSet& domain) {
  if (domain.degree != g.degree())
    throw DegreeMismatch("restrict_to: degree differs");
  std::vector<Point> img(domain.members.size());
  for (std::size_t i = 0; i < domain.members.size(); ++i) {
    Point b = g[domain.members[i]];
    auto it = std::lower_bound(domain.members.begin(), domain.members.end(), b);
    if (it == domain.members.end() || *it != b)
      throw InvalidBlockSystem("point set is not invariant");
    img[i] = static_cast<Point>(it - domain.members.begin());
  }
  return Permutation(std::move(img));
}

PermGroup restrict_group(const PermGroup& g, const PointSet& domain) {
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (const auto& s : g.generators()) gens.push_back(restrict_to(s, domain));
  return PermGroup(static_cast<unsigned>(domain.members.size()), std::move(gens));
}

PermGroup setwise_stabilizer(const PermGroup& g, const PointSet& delta,
                             std::uint64_t budget) {
  if (delta.degree != g.degree())
    throw DegreeMismatch("setwise_stabilizer: degree differs");
  std::vector<Permutation> fixing;
  for (const auto& e : g.elements(budget))
    if (image_of(delta, e).members == delta.members) fixing.push_back(e);
  return PermGroup(g.degree(), reduce_generators(g.degree(), fixing));
}

}  // namespace kclosure
