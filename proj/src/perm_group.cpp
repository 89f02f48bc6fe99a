#include "kclosure/perm_group.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace kclosure {

// Deterministic Schreier-Sims with the full base 0, 1, ..., n-1. Levels with
// a trivial orbit cost nothing at these degrees and keep sifting uniform.
struct PermGroup::Chain {
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;       // strong generators fixing 0..base-1
    std::vector<Point> orbit;            // BFS order from base
    std::vector<std::int32_t> where;     // point -> index into orbit, -1 if out
    std::vector<Permutation> transversal;  // u with base^u = orbit[i]
  };

  unsigned degree;
  std::vector<Level> levels;

  explicit Chain(unsigned n, const std::vector<Permutation>& input) : degree(n) {
    levels.resize(n);
    for (unsigned i = 0; i < n; ++i) levels[i].base = i;

    std::vector<Permutation> strong;
    for (const auto& g : input)
      if (!g.is_identity()) strong.push_back(g);
    for (unsigned i = 0; i < n; ++i) {
      for (const auto& g : strong)
        if (fixes_prefix(g, i)) levels[i].gens.push_back(g);
      rebuild_orbit(i);
    }

    // Verify deepest level first; a new strong generator at level j restarts
    // the scan there, so every level below a verified one stays consistent.
    if (n == 0) return;
    long long i = static_cast<long long>(n) - 1;
    while (i >= 0) {
      auto stuck = verify_level(static_cast<unsigned>(i));
      if (!stuck) {
        --i;
        continue;
      }
      auto [h, j] = *stuck;
      for (unsigned l = 0; l <= j; ++l)
        if (fixes_prefix(h, l)) {
          levels[l].gens.push_back(h);
          rebuild_orbit(l);
        }
      i = static_cast<long long>(j);
    }
  }

  static bool fixes_prefix(const Permutation& g, unsigned level) {
    for (Point a = 0; a < level; ++a)
      if (g[a] != a) return false;
    return true;
  }

  void rebuild_orbit(unsigned i) {
    Level& L = levels[i];
    L.orbit.clear();
    L.where.assign(degree, -1);
    L.transversal.clear();
    L.orbit.push_back(L.base);
    L.where[L.base] = 0;
    L.transversal.push_back(Permutation(degree));
    for (std::size_t q = 0; q < L.orbit.size(); ++q) {
      for (const auto& g : L.gens) {
        Point b = g[L.orbit[q]];
        if (L.where[b] < 0) {
          L.where[b] = static_cast<std::int32_t>(L.orbit.size());
          L.orbit.push_back(b);
          L.transversal.push_back(compose(L.transversal[q], g));
        }
      }
    }
  }

  // Schreier generators of level i must sift to identity through deeper
  // levels; returns the residue and the level it belongs to otherwise.
  std::optional<std::pair<Permutation, unsigned>> verify_level(unsigned i) const {
    const Level& L = levels[i];
    for (std::size_t q = 0; q < L.orbit.size(); ++q) {
      for (const auto& x : L.gens) {
        Point b = x[L.orbit[q]];
        Permutation s = compose(compose(L.transversal[q], x),
                                L.transversal[L.where[b]].inverse());
        auto [h, j] = sift(s, i + 1);
        if (!h.is_identity())
          return std::make_pair(std::move(h), j);
      }
    }
    return std::nullopt;
  }

  // Strips g through levels from..n-1. Returns (residue, level) where the
  // residue could not be matched; a full strip yields the identity and a
  // non-identity residue always gets stuck before running out of levels.
  std::pair<Permutation, unsigned> sift(Permutation g, unsigned from) const {
    for (unsigned j = from; j < levels.size(); ++j) {
      const Level& L = levels[j];
      Point a = g[L.base];
      if (a == L.base) continue;
      if (L.where[a] < 0) return {std::move(g), j};
      g = compose(g, L.transversal[L.where[a]].inverse());
    }
    return {std::move(g), static_cast<unsigned>(levels.size())};
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& L : levels) o *= L.orbit.size();
    return o;
  }

  bool contains(const Permutation& x) const {
    auto [h, j] = sift(x, 0);
    (void)j;
    return h.is_identity();
  }
};

PermGroup::PermGroup(unsigned degree) : PermGroup(degree, {}) {}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw DegreeMismatch("generator degree differs from group degree");
  chain_ = std::make_shared<const Chain>(degree_, gens_);
}

std::uint64_t PermGroup::order() const { return chain_->order(); }

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree_)
    throw DegreeMismatch("contains: element degree differs");
  return chain_->contains(x);
}

std::vector<Permutation> PermGroup::elements(std::uint64_t budget) const {
  if (order() > budget)
    throw BudgetExceeded("element enumeration over budget");
  std::vector<Permutation> out{Permutation(degree_)};
  // Left-to-right product of transversal elements: every group element
  // factors uniquely as (deeper part) * u_level.
  for (std::size_t lvl = chain_->levels.size(); lvl-- > 0;) {
    const auto& L = chain_->levels[lvl];
    if (L.orbit.size() == 1) continue;
    std::vector<Permutation> next;
    next.reserve(out.size() * L.orbit.size());
    for (const auto& h : out)
      for (const auto& u : L.transversal) next.push_back(compose(h, u));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InternalContradiction("stabilizer chain produced duplicate elements");
  return out;
}

std::vector<PointSet> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<PointSet> out;
  for (Point a = 0; a < degree_; ++a) {
    if (seen[a]) continue;
    std::vector<Point> orbit{a};
    seen[a] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (const auto& g : gens_) {
        Point b = g[orbit[q]];
        if (!seen[b]) {
          seen[b] = true;
          orbit.push_back(b);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(PointSet{degree_, std::move(orbit)});
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

bool PermGroup::is_regular() const {
  return is_transitive() && order() == degree_;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i]))
        return false;
  return true;
}

bool PermGroup::same_element_set(const PermGroup& other) const {
  if (degree_ != other.degree_ || order() != other.order()) return false;
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

PermGroup PermGroup::symmetric(unsigned degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<Point> t(degree);
    for (Point a = 0; a < degree; ++a) t[a] = a;
    std::swap(t[0], t[1]);
    gens.emplace_back(std::move(t));
  }
  if (degree >= 3) {
    std::vector<Point> c(degree);
    for (Point a = 0; a < degree; ++a) c[a] = (a + 1) % degree;
    gens.emplace_back(std::move(c));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(unsigned degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<Point> c(degree);
    for (Point a = 0; a < degree; ++a) c[a] = (a + 1) % degree;
    gens.emplace_back(std::move(c));
  }
  return PermGroup(degree, std::move(gens));
}

std::vector<Permutation> reduce_generators(
    unsigned degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  const std::uint64_t target = sorted.size();
  std::vector<Permutation> gens;
  PermGroup current(degree);
  for (const auto& e : sorted) {
    if (e.is_identity() || current.contains(e)) continue;
    gens.push_back(e);
    current = PermGroup(degree, gens);
    if (current.order() == target) break;
  }
  if (current.order() != target)
    throw InternalContradiction("element list is not a subgroup");
  return gens;
}

PermGroup right_regular(const PermGroup& g, std::uint64_t budget) {
  const auto elems = g.elements(budget);
  std::map<Permutation, Point> index;
  for (Point i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(elems.size());
    for (Point i = 0; i < elems.size(); ++i)
      img[i] = index.at(compose(elems[i], s));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(static_cast<unsigned>(elems.size()), std::move(gens));
}

}  // namespace kclosure
