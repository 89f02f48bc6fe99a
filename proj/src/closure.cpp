#include "kclosure/closure.hpp"

#include <algorithm>
#include <numeric>

#include "kclosure/kernels.hpp"
#include "kclosure/products.hpp"

namespace kclosure {

const char* to_string(ClosureMethod m) {
  switch (m) {
    case ClosureMethod::oracle: return "oracle";
    case ClosureMethod::backtrack: return "backtrack";
    case ClosureMethod::nilpotent: return "nilpotent";
    case ClosureMethod::k1: return "k1";
  }
  return "?";
}

namespace {

void check_k(unsigned k, const Budgets& budgets) {
  if (k == 0) throw std::invalid_argument("closure: k must be positive");
  if (k > budgets.max_k)
    throw BudgetExceeded("k=" + std::to_string(k) + " exceeds max k " +
                         std::to_string(budgets.max_k));
}

ClosureResult finish_enumerated(const PermGroup& g,
                                std::vector<Permutation> elems,
                                ClosureMethod method) {
  std::sort(elems.begin(), elems.end());
  PermGroup closed(g.degree(), reduce_generators(g.degree(), elems));
  if (closed.order() != elems.size())
    throw InternalContradiction("collected closure elements are not a group");
  ClosureResult out{std::move(closed), method, elems.size(), std::move(elems)};
  return out;
}

}  // namespace

ClosureResult closure_oracle(const PermGroup& g, unsigned k,
                             const Budgets& budgets) {
  check_k(k, budgets);
  const unsigned n = g.degree();
  if (n > budgets.max_oracle_degree)
    throw BudgetExceeded("oracle degree " + std::to_string(n) + " over limit " +
                         std::to_string(budgets.max_oracle_degree));
  const TupleOrbitPartition part = k_orbits(g, k, budgets.tuple_budget);
  const auto& kern = kernels::active_kernels();

  std::vector<Permutation> kept;
  std::vector<Point> img(n);
  for (Point a = 0; a < n; ++a) img[a] = a;
  do {
    if (kern.partition_preserved(part.ids().data(), n, k, img.data()))
      kept.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));

  return finish_enumerated(g, std::move(kept), ClosureMethod::oracle);
}

namespace {

// Image assignment search. Points get images in increasing point order;
// a partial map is kept only while every fully assigned k-tuple keeps its
// orbit id and images stay inside the point's 1-orbit class.
class BacktrackSearch {
 public:
  BacktrackSearch(const PermGroup& g, unsigned k, const Budgets& budgets)
      : n_(g.degree()), k_(k), part_(k_orbits(g, k, budgets.tuple_budget)) {
    orb1_.assign(n_, 0);
    auto orbits = g.orbits();
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (Point a : orbits[i].members) orb1_[a] = static_cast<Point>(i);
  }

  std::vector<Permutation> run() {
    found_.clear();
    img_.assign(n_, 0);
    used_.assign(n_, false);
    descend(0);
    return std::move(found_);
  }

 private:
  // Every k-tuple over {0..m} that mentions m, checked against the partial
  // image map. Tuples whose entries all lie below m were checked earlier.
  bool new_tuples_ok(Point m) const {
    std::vector<Point> t(k_, 0);
    while (true) {
      bool mentions_m = false;
      for (Point a : t)
        if (a == m) {
          mentions_m = true;
          break;
        }
      if (mentions_m) {
        std::uint64_t enc = 0, enc_img = 0;
        for (Point a : t) {
          enc = enc * n_ + a;
          enc_img = enc_img * n_ + img_[a];
        }
        if (part_.orbit_of(enc) != part_.orbit_of(enc_img)) return false;
      }
      bool advanced = false;
      for (unsigned i = k_; i-- > 0;) {
        if (t[i] < m) {
          ++t[i];
          advanced = true;
          break;
        }
        t[i] = 0;
      }
      if (!advanced) break;
    }
    return true;
  }

  void descend(Point next) {
    if (next == n_) {
      found_.push_back(Permutation(img_));
      return;
    }
    for (Point candidate = 0; candidate < n_; ++candidate) {
      if (used_[candidate] || orb1_[candidate] != orb1_[next]) continue;
      img_[next] = candidate;
      used_[candidate] = true;
      if (new_tuples_ok(next)) descend(next + 1);
      used_[candidate] = false;
    }
  }

  unsigned n_;
  unsigned k_;
  TupleOrbitPartition part_;
  std::vector<Point> orb1_;
  std::vector<Point> img_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

ClosureResult closure_backtrack(const PermGroup& g, unsigned k,
                                const Budgets& budgets) {
  check_k(k, budgets);
  if (g.degree() > budgets.max_backtrack_degree)
    throw BudgetExceeded("backtrack degree " + std::to_string(g.degree()) +
                         " over limit " +
                         std::to_string(budgets.max_backtrack_degree));
  BacktrackSearch search(g, k, budgets);
  return finish_enumerated(g, search.run(), ClosureMethod::backtrack);
}

ClosureResult closure_nilpotent(const PermGroup& g, unsigned k,
                                const Budgets& budgets) {
  if (k < 2)
    throw KLessThanTwo(
        "the Sylow split requires k >= 2, got k=" + std::to_string(k) +
        " (for k=1 the product formula can fail: a transitive group has "
        "G^(1) = Sym(Omega) while the Sylow parts multiply to less)");
  check_k(k, budgets);
  auto [nilp, decomp] = is_nilpotent(g);
  if (!nilp) throw NotNilpotent("closure_nilpotent: group is not nilpotent");

  std::vector<Permutation> gens;
  std::uint64_t expected = 1;
  for (const auto& [p, part] : decomp->parts) {
    (void)p;
    ClosureResult part_closure = closure_backtrack(part, k, budgets);
    expected *= part_closure.element_count;
    for (const auto& s : part_closure.group.generators()) gens.push_back(s);
  }
  PermGroup combined(g.degree(), std::move(gens));
  if (combined.order() != expected)
    throw InternalContradiction(
        "combined closure order differs from the product of the Sylow "
        "closure orders");

  const TupleOrbitPartition part = k_orbits(g, k, budgets.tuple_budget);
  for (const auto& s : combined.generators())
    if (!preserves_partition(s, part))
      throw InternalContradiction(
          "combined closure does not preserve the k-orbits of the input");

  return ClosureResult{std::move(combined), ClosureMethod::nilpotent, expected,
                       std::nullopt};
}

ClosureResult closure_k1(const PermGroup& g) {
  std::vector<Permutation> gens;
  std::uint64_t order = 1;
  for (const auto& orbit : g.orbits()) {
    const auto& pts = orbit.members;
    if (pts.size() > 20)  // 21! overflows uint64
      throw BudgetExceeded("k=1 closure: orbit of size " +
                           std::to_string(pts.size()) +
                           " makes the symmetric-group order overflow");
    for (std::uint64_t m = 2; m <= pts.size(); ++m) order *= m;
    if (pts.size() >= 2) {
      std::vector<Point> swap_img(g.degree());
      std::iota(swap_img.begin(), swap_img.end(), Point{0});
      std::swap(swap_img[pts[0]], swap_img[pts[1]]);
      gens.emplace_back(std::move(swap_img));
    }
    if (pts.size() >= 3) {
      std::vector<Point> cyc_img(g.degree());
      std::iota(cyc_img.begin(), cyc_img.end(), Point{0});
      for (std::size_t i = 0; i < pts.size(); ++i)
        cyc_img[pts[i]] = pts[(i + 1) % pts.size()];
      gens.emplace_back(std::move(cyc_img));
    }
  }
  PermGroup grp(g.degree(), std::move(gens));
  if (grp.order() != order)
    throw InternalContradiction("symmetric product order mismatch");
  return ClosureResult{std::move(grp), ClosureMethod::k1, order, std::nullopt};
}

ClosureResult closure_auto(const PermGroup& g, unsigned k,
                           const Budgets& budgets) {
  if (k == 1) return closure_k1(g);
  check_k(k, budgets);
  if (g.degree() <= budgets.max_backtrack_degree && is_nilpotent(g).first)
    return closure_nilpotent(g, k, budgets);
  return closure_backtrack(g, k, budgets);
}

ClosureResult closure_by_method(const PermGroup& g, unsigned k,
                                const std::string& method,
                                const Budgets& budgets) {
  if (method == "oracle") return closure_oracle(g, k, budgets);
  if (method == "backtrack") return closure_backtrack(g, k, budgets);
  if (method == "nilpotent") return closure_nilpotent(g, k, budgets);
  if (method == "auto") return closure_auto(g, k, budgets);
  if (method == "k1") {
    if (k != 1)
      throw std::invalid_argument("method k1 requires k = 1");
    return closure_k1(g);
  }
  throw std::invalid_argument("unknown closure method: " + method);
}

bool is_k_closed(const PermGroup& g, unsigned k, const Budgets& budgets) {
  return closure_auto(g, k, budgets).element_count == g.order();
}

namespace {

ClosureResult best_closure(const PermGroup& g, unsigned k,
                           const Budgets& budgets) {
  if (k == 1) return closure_k1(g);
  if (g.degree() <= budgets.max_oracle_degree)
    return closure_oracle(g, k, budgets);
  return closure_backtrack(g, k, budgets);
}

std::vector<Permutation> closure_elements(const ClosureResult& r,
                                          const Budgets& budgets) {
  if (r.certificate) return *r.certificate;
  return r.group.elements(budgets.element_budget);
}

}  // namespace

CheckReport check_dirsum_lemma(const PermGroup& a, const PermGroup& b,
                               unsigned k, const Budgets& budgets) {
  CheckReport rep;
  rep.suite = "dirsum";
  rep.k = k;
  PermGroup sum = direct_sum(a, b);
  ClosureResult lhs = best_closure(sum, k, budgets);
  rep.method = to_string(lhs.method);
  ClosureResult ca = best_closure(a, k, budgets);
  ClosureResult cb = best_closure(b, k, budgets);

  std::vector<Permutation> rhs;
  for (const auto& x : closure_elements(ca, budgets))
    for (const auto& y : closure_elements(cb, budgets))
      rhs.push_back(embed_sum(x, y));
  std::sort(rhs.begin(), rhs.end());

  rep.order_lhs = lhs.element_count;
  rep.order_rhs = rhs.size();
  rep.status =
      closure_elements(lhs, budgets) == rhs ? "pass" : "fail";
  if (!rep.passed()) rep.note = "element sets differ";
  return rep;
}

CheckReport check_dirprod_lemma(const PermGroup& a, const PermGroup& b,
                                unsigned k, const Budgets& budgets) {
  CheckReport rep;
  rep.suite = "dirprod";
  rep.k = k;
  ProductAction prod = direct_product_action(a, b);
  ClosureResult lhs = best_closure(prod.group, k, budgets);
  rep.method = to_string(lhs.method);
  ClosureResult ca = best_closure(a, k, budgets);
  ClosureResult cb = best_closure(b, k, budgets);

  std::vector<Permutation> rhs;
  for (const auto& x : closure_elements(ca, budgets))
    for (const auto& y : closure_elements(cb, budgets))
      rhs.push_back(embed_product(x, y));
  std::sort(rhs.begin(), rhs.end());

  const auto lhs_elems = closure_elements(lhs, budgets);
  rep.order_lhs = lhs.element_count;
  rep.order_rhs = rhs.size();
  if (lhs_elems != rhs) {
    rep.status = "fail";
    rep.note = "element sets differ";
    return rep;
  }

  // Rows {alpha} x Omega2 and columns Omega1 x {beta} must each map onto a
  // block of the same family under every closure element (meaningful for
  // k >= 2; for k = 1 closure elements may mix blocks).
  if (k >= 2) {
    const unsigned n1 = prod.left_degree, n2 = prod.right_degree;
    for (const auto& x : lhs_elems) {
      for (Point alpha = 0; alpha < n1; ++alpha) {
        Point row = x[prod.encode(alpha, 0)] / n2;
        for (Point beta = 1; beta < n2; ++beta)
          if (x[prod.encode(alpha, beta)] / n2 != row) {
            rep.status = "fail";
            rep.note = "a closure element splits a row";
            return rep;
          }
      }
      for (Point beta = 0; beta < n2; ++beta) {
        Point col = x[prod.encode(0, beta)] % n2;
        for (Point alpha = 1; alpha < n1; ++alpha)
          if (x[prod.encode(alpha, beta)] % n2 != col) {
            rep.status = "fail";
            rep.note = "a closure element splits a column";
            return rep;
          }
      }
    }
  }
  rep.status = "pass";
  return rep;
}

CheckReport check_setwise_stab_lemma(const PermGroup& g, unsigned p,
                                     const std::vector<std::size_t>& chosen,
                                     const Budgets& budgets) {
  CheckReport rep;
  rep.suite = "setwise-stab";
  rep.k = 0;
  rep.method = "enumeration";
  auto [nilp, decomp] = is_nilpotent(g);
  if (!nilp) throw NotNilpotent("check_setwise_stab_lemma: not nilpotent");
  const PermGroup* sylow = decomp->part(p);
  if (!sylow)
    throw std::invalid_argument("check_setwise_stab_lemma: p does not divide");
  const auto p_orbits = sylow->orbits();

  PointSet delta{g.degree(), {}};
  std::vector<PointSet> picked;
  for (std::size_t idx : chosen) {
    if (idx >= p_orbits.size())
      throw std::invalid_argument("check_setwise_stab_lemma: bad orbit index");
    picked.push_back(p_orbits[idx]);
    delta.members.insert(delta.members.end(), p_orbits[idx].members.begin(),
                         p_orbits[idx].members.end());
  }
  std::sort(delta.members.begin(), delta.members.end());

  // Intersection of the setwise stabilizers, computed by filtering.
  std::vector<Permutation> inter;
  for (const auto& e : g.elements(budgets.element_budget)) {
    bool stabilizes_each = true;
    for (const auto& d : picked)
      if (image_of(d, e).members != d.members) {
        stabilizes_each = false;
        break;
      }
    if (stabilizes_each) inter.push_back(e);
  }

  std::vector<Permutation> lhs;
  for (const auto& e : inter) lhs.push_back(restrict_to(e, delta));
  std::sort(lhs.begin(), lhs.end());
  lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());

  std::vector<Permutation> rhs;
  for (const auto& e : sylow->elements(budgets.element_budget))
    rhs.push_back(restrict_to(e, delta));
  std::sort(rhs.begin(), rhs.end());
  rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());

  rep.order_lhs = lhs.size();
  rep.order_rhs = rhs.size();
  rep.status = std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end())
                   ? "pass"
                   : "fail";
  if (!rep.passed())
    rep.note = "restricted stabilizer escapes the restricted Sylow group";
  return rep;
}

CheckReport check_sylow_closure_lemmas(const PermGroup& g, unsigned k,
                                       unsigned p, const Budgets& budgets) {
  CheckReport rep;
  rep.suite = "sylow-lemmas";
  rep.k = k;
  auto [nilp, decomp] = is_nilpotent(g);
  if (!nilp) throw NotNilpotent("check_sylow_closure_lemmas: not nilpotent");
  const PermGroup* p_part_of_g = decomp->part(p);
  if (!p_part_of_g)
    throw std::invalid_argument("check_sylow_closure_lemmas: p does not divide");

  ClosureResult closed = best_closure(g, k, budgets);
  rep.method = to_string(closed.method);
  auto [closed_nilp, closed_decomp] = is_nilpotent(closed.group);
  if (!closed_nilp) {
    rep.status = "fail";
    rep.note = "closure is not nilpotent";
    return rep;
  }
  const PermGroup* q = closed_decomp->part(p);
  PermGroup q_group = q ? *q : PermGroup(g.degree());

  if (p_part_of_g->orbits() != q_group.orbits()) {
    rep.status = "fail";
    rep.note = "Sylow orbits changed under closure";
    return rep;
  }

  ClosureResult p_closed = closure_backtrack(*p_part_of_g, k, budgets);
  rep.order_lhs = p_closed.element_count;
  rep.order_rhs = q_group.order();
  rep.status = p_closed.group.same_element_set(q_group) ? "pass" : "fail";
  if (!rep.passed()) rep.note = "P^(k) differs from the closure's Sylow part";
  return rep;
}

}  // namespace kclosure
