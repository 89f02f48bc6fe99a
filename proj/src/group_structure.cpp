#include "kclosure/group_structure.hpp"

#include <algorithm>
#include <numeric>

namespace kclosure {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<unsigned, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(static_cast<unsigned>(p), e);
  }
  if (n > 1) out.emplace_back(static_cast<unsigned>(n), 1);
  return out;
}

PrimeSet prime_support(std::uint64_t n) {
  std::vector<unsigned> ps;
  for (auto [p, e] : factorize(n)) ps.push_back(p);
  return PrimeSet(std::move(ps));
}

PrimeSet::PrimeSet(std::vector<unsigned> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (unsigned p : primes_)
    if (!is_prime(p))
      throw std::invalid_argument("PrimeSet: " + std::to_string(p) +
                                  " is not prime");
}

bool PrimeSet::contains(unsigned p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::uint64_t n_pi(std::uint64_t n, const PrimeSet& pi) {
  std::uint64_t out = 1;
  for (unsigned p : pi.primes()) {
    while (n % p == 0) {
      n /= p;
      out *= p;
    }
  }
  return out;
}

Permutation p_part(const Permutation& g, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("p_part: p must be prime");
  std::uint64_t ord = g.element_order();
  std::uint64_t pa = 1;
  std::uint64_t m = ord;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  if (pa == 1) return Permutation(g.degree());
  // e = m * (m^-1 mod p^a): then e = 0 mod m and e = 1 mod p^a.
  std::uint64_t inv = 1;
  for (std::uint64_t t = 1; t < pa; ++t) {
    if ((m % pa) * t % pa == 1) {
      inv = t;
      break;
    }
  }
  return power(g, m * inv);
}

namespace {

bool is_prime_power(std::uint64_t n, unsigned p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Conjugates of every generator of sub by every generator of g must stay in
// sub; sufficient for normality since both sides are generator-closed.
bool is_normal_in(const PermGroup& sub, const PermGroup& g) {
  for (const auto& x : g.generators()) {
    const Permutation xinv = x.inverse();
    for (const auto& s : sub.generators())
      if (!sub.contains(compose(compose(xinv, s), x))) return false;
  }
  return true;
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& g, unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("sylow_subgroup: p must be prime");
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    Permutation part = p_part(s, p);
    if (!part.is_identity()) gens.push_back(std::move(part));
  }
  PermGroup q(g.degree(), std::move(gens));
  if (!is_prime_power(q.order(), p) && q.order() != 1)
    throw NotNilpotent("generator p-parts generate a non-p-group");
  if (!is_normal_in(q, g))
    throw NotNilpotent("generator p-parts generate a non-normal subgroup");
  return q;
}

const PermGroup* SylowDecomposition::part(unsigned p) const {
  for (const auto& [q, grp] : parts)
    if (q == p) return &grp;
  return nullptr;
}

std::pair<bool, std::optional<SylowDecomposition>> is_nilpotent(
    const PermGroup& g) {
  SylowDecomposition decomp;
  std::uint64_t product = 1;
  for (auto [p, e] : factorize(g.order())) {
    (void)e;
    PermGroup part(g.degree());
    try {
      part = sylow_subgroup(g, p);
    } catch (const NotNilpotent&) {
      return {false, std::nullopt};
    }
    product *= part.order();
    decomp.parts.emplace_back(p, std::move(part));
  }
  if (product != g.order()) return {false, std::nullopt};
  return {true, std::move(decomp)};
}

PermGroup hall_subgroup(const PermGroup& g, const PrimeSet& pi,
                        const SylowDecomposition& decomp) {
  std::vector<Permutation> gens;
  for (const auto& [p, part] : decomp.parts)
    if (pi.contains(p))
      for (const auto& s : part.generators()) gens.push_back(s);
  return PermGroup(g.degree(), std::move(gens));
}

CheckReport check_hall_orbits(const PermGroup& g, const PermGroup& h,
                              const PrimeSet& pi) {
  CheckReport rep;
  rep.suite = "cp1";
  rep.k = 0;
  rep.method = "enumeration";
  rep.status = "pass";

  const std::uint64_t expected = n_pi(g.degree(), pi);
  const auto h_orbits = h.orbits();
  for (const auto& orbit : h_orbits) {
    if (orbit.size() != expected) {
      rep.status = "fail";
      rep.note = "orbit size " + std::to_string(orbit.size()) +
                 " != " + std::to_string(expected);
      return rep;
    }
  }

  // Kernel of g acting on the h-orbits must be exactly h.
  induced_action(g, h_orbits);  // throws if the orbits are not permuted
  std::vector<Permutation> kernel;
  for (const auto& e : g.elements()) {
    bool fixes_all = true;
    for (const auto& orbit : h_orbits)
      if (image_of(orbit, e).members != orbit.members) {
        fixes_all = false;
        break;
      }
    if (fixes_all) kernel.push_back(e);
  }
  auto h_elems = h.elements();
  rep.order_lhs = kernel.size();
  rep.order_rhs = h_elems.size();
  if (kernel != h_elems) {
    rep.status = "fail";
    rep.note = "kernel of the orbit action differs from the Hall subgroup";
  }
  return rep;
}

Permutation conjugate(const Permutation& x, const Permutation& rho) {
  if (x.degree() != rho.degree())
    throw DegreeMismatch("conjugate: degrees differ");
  const Permutation rho_inv = rho.inverse();
  std::vector<Point> img(x.degree());
  for (Point t = 0; t < x.degree(); ++t) img[t] = rho[x[rho_inv[t]]];
  return Permutation(std::move(img));
}

TransitiveDecomposition transitive_decompose(const PermGroup& g, unsigned p) {
  if (!g.is_transitive())
    throw std::invalid_argument("transitive_decompose: group not transitive");
  auto [nilp, decomp] = is_nilpotent(g);
  if (!nilp) throw NotNilpotent("transitive_decompose: group not nilpotent");
  if (g.order() % p != 0)
    throw std::invalid_argument("transitive_decompose: p does not divide |G|");

  const PermGroup* p_sylow = decomp->part(p);
  if (!p_sylow) throw std::invalid_argument("transitive_decompose: bad prime");
  std::vector<unsigned> others;
  for (const auto& [q, part] : decomp->parts)
    if (q != p) others.push_back(q);
  PermGroup hall = hall_subgroup(g, PrimeSet(others), *decomp);

  TransitiveDecomposition out{p,
                              p_sylow->orbits(),
                              hall.orbits(),
                              {},
                              PermGroup(1),
                              PermGroup(1),
                              Permutation(g.degree())};

  for (const auto& d : out.p_orbits)
    for (const auto& c : out.h_orbits) {
      std::vector<Point> meet;
      std::set_intersection(d.members.begin(), d.members.end(),
                            c.members.begin(), c.members.end(),
                            std::back_inserter(meet));
      if (meet.size() != 1)
        throw DecompositionFailed(
            "a P-orbit and an H-orbit meet in " + std::to_string(meet.size()) +
            " points");
    }

  out.rho.resize(g.degree());
  for (Point a = 0; a < g.degree(); ++a) {
    Point pi_idx = 0, h_idx = 0;
    for (Point i = 0; i < out.p_orbits.size(); ++i)
      if (out.p_orbits[i].contains(a)) pi_idx = i;
    for (Point j = 0; j < out.h_orbits.size(); ++j)
      if (out.h_orbits[j].contains(a)) h_idx = j;
    out.rho[a] = {pi_idx, h_idx};
  }

  out.p_prime = induced_action(g, out.h_orbits).group;
  out.h_prime = induced_action(g, out.p_orbits).group;

  // Pair encoding of direct_product_action(p_prime, h_prime): the first
  // coordinate ranges over Orb(H) indices, the second over Orb(P) indices.
  const Point n_p = static_cast<Point>(out.p_orbits.size());
  std::vector<Point> conj(g.degree());
  for (Point a = 0; a < g.degree(); ++a)
    conj[a] = out.rho[a].second * n_p + out.rho[a].first;
  out.conjugator = Permutation(std::move(conj));

  ProductAction product = direct_product_action(out.p_prime, out.h_prime);
  std::vector<Permutation> conjugated;
  for (const auto& e : g.elements())
    conjugated.push_back(conjugate(e, out.conjugator));
  std::sort(conjugated.begin(), conjugated.end());
  if (conjugated != product.group.elements())
    throw InternalContradiction(
        "conjugated group differs from the product action");

  return out;
}

}  // namespace kclosure
