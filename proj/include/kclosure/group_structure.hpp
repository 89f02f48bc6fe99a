#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kclosure/perm_group.hpp"
#include "kclosure/products.hpp"
#include "kclosure/report.hpp"

namespace kclosure {

// Validated set of primes, kept sorted and duplicate-free.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<unsigned> primes);  // throws on non-primes

  const std::vector<unsigned>& primes() const { return primes_; }
  bool contains(unsigned p) const;
  bool empty() const { return primes_.empty(); }

  bool operator==(const PrimeSet&) const = default;

 private:
  std::vector<unsigned> primes_;
};

bool is_prime(std::uint64_t n);
std::vector<std::pair<unsigned, unsigned>> factorize(std::uint64_t n);
PrimeSet prime_support(std::uint64_t n);  // primes dividing n

// Largest divisor of n whose prime factors all lie in pi. Primes in pi that
// do not divide n contribute nothing.
std::uint64_t n_pi(std::uint64_t n, const PrimeSet& pi);

// The p-part of g: the power g^e with e = 1 mod p^a and e = 0 mod m, where
// ord(g) = p^a * m and p does not divide m. Has order p^a; commutes with g.
Permutation p_part(const Permutation& g, unsigned p);

// Subgroup generated by the p-parts of the generators. For nilpotent groups
// this is the (unique, normal) Sylow p-subgroup; anything that fails the
// p-power-order or normality verification throws NotNilpotent.
PermGroup sylow_subgroup(const PermGroup& g, unsigned p);

struct SylowDecomposition {
  std::vector<std::pair<unsigned, PermGroup>> parts;  // ascending primes

  const PermGroup* part(unsigned p) const;
};

// Nilpotency via the Sylow product criterion: every generator p-part
// subgroup must be a normal p-group and their orders must multiply to |g|.
// On success the decomposition witness is returned alongside.
std::pair<bool, std::optional<SylowDecomposition>> is_nilpotent(
    const PermGroup& g);

// Subgroup generated by the Sylow parts with primes in pi.
PermGroup hall_subgroup(const PermGroup& g, const PrimeSet& pi,
                        const SylowDecomposition& decomp);

// For transitive nilpotent g of degree n and h = hall_subgroup(g, pi):
// every h-orbit has size n_pi(n, pi), and h is exactly the kernel of g
// acting on the h-orbits. Returns a per-fact report.
CheckReport check_hall_orbits(const PermGroup& g, const PermGroup& h,
                              const PrimeSet& pi);

struct TransitiveDecomposition {
  unsigned prime = 0;
  std::vector<PointSet> p_orbits;  // Orb(P), ordered by smallest member
  std::vector<PointSet> h_orbits;  // Orb(H), ordered by smallest member
  // Per point: (index of its P-orbit, index of its H-orbit).
  std::vector<std::pair<Point, Point>> rho;
  PermGroup p_prime;  // g acting on Orb(H); kernel H, isomorphic to P
  PermGroup h_prime;  // g acting on Orb(P); kernel P, isomorphic to H
  // Bijection onto the pair encoding of direct_product_action(p_prime,
  // h_prime): point w -> h_index(w) * |Orb(P)| + p_index(w).
  Permutation conjugator;
};

// Splits a transitive nilpotent group over prime p: P the Sylow p-part,
// H the complementary Hall part. Verifies |P-orbit ∩ H-orbit| = 1 for every
// pair (else DecompositionFailed) and that conjugation by `conjugator` maps
// g exactly onto direct_product_action(p_prime, h_prime).
TransitiveDecomposition transitive_decompose(const PermGroup& g, unsigned p);

// x conjugated by the relabeling rho: t -> rho[x[rho^-1[t]]].
Permutation conjugate(const Permutation& x, const Permutation& rho);

}  // namespace kclosure
