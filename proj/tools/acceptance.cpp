// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit 0 only if
// every criterion holds. Criteria are exact properties checked against
// independent methods (exhaustive oracle, backtracking search, Sylow split)
// at fixed budgets; nothing here is tolerance-based.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kclosure/catalog.hpp"
#include "kclosure/closure.hpp"
#include "kclosure/group_structure.hpp"
#include "kclosure/korbit.hpp"
#include "kclosure/products.hpp"
#include "kclosure/suites.hpp"

using namespace kclosure;

namespace {

using Outcome = std::pair<bool, std::string>;

std::string plural(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

// 1. For every nilpotent entry of degree <= 8 and k in {2,3}: the Sylow
// split, the backtracking search and the exhaustive oracle produce the same
// element set, and |G^(k)| equals the product of the part closures' orders.
Outcome methods_agree_and_order_multiplies() {
  std::size_t rows = 0;
  for (const auto& e : catalog()) {
    if (!e.has(Tag::nilpotent) || e.spec.degree > 8) continue;
    for (unsigned k : {2u, 3u}) {
      const std::string at = e.spec.name + " k=" + std::to_string(k);
      ClosureResult nil = closure_nilpotent(e.group, k);
      ClosureResult bt = closure_backtrack(e.group, k);
      ClosureResult orc = closure_oracle(e.group, k);
      if (*bt.certificate != *orc.certificate)
        return {false, at + ": backtrack and oracle disagree"};
      if (!nil.group.same_element_set(bt.group))
        return {false, at + ": Sylow split disagrees with backtrack"};
      const auto decomp = is_nilpotent(e.group).second;
      std::uint64_t product = 1;
      for (const auto& [p, part] : decomp->parts)
        product *= closure_backtrack(part, k).element_count;
      if (product != nil.element_count)
        return {false, at + ": |closure| = " + std::to_string(nil.element_count) +
                           " but part orders multiply to " +
                           std::to_string(product)};
      ++rows;
    }
  }
  return {true, plural(rows, "group/k pair") + ", three methods each"};
}

// 2. The k-closure of every nilpotent entry is itself nilpotent.
Outcome closure_is_nilpotent() {
  std::size_t rows = 0;
  for (const auto& e : catalog()) {
    if (!e.has(Tag::nilpotent)) continue;
    for (unsigned k : {2u, 3u}) {
      ClosureResult cl = closure_auto(e.group, k);
      if (!is_nilpotent(cl.group).first)
        return {false, e.spec.name + " k=" + std::to_string(k) +
                           ": closure is not nilpotent"};
      ++rows;
    }
  }
  return {true, plural(rows, "closure") + " verified nilpotent"};
}

// 3. A nilpotent entry is k-closed exactly when every Sylow part is.
Outcome closed_iff_parts_closed() {
  std::size_t rows = 0;
  for (const auto& e : catalog()) {
    if (!e.has(Tag::nilpotent)) continue;
    const auto decomp = is_nilpotent(e.group).second;
    for (unsigned k : {2u, 3u}) {
      const bool whole = is_k_closed(e.group, k);
      bool parts = true;
      for (const auto& [p, part] : decomp->parts)
        parts = parts && is_k_closed(part, k);
      if (whole != parts)
        return {false, e.spec.name + " k=" + std::to_string(k) + ": whole " +
                           (whole ? "closed" : "open") + " but parts " +
                           (parts ? "closed" : "open")};
      ++rows;
    }
  }
  return {true, plural(rows, "biconditional")};
}

// 4. The pair-closure of the regular quaternion group is strictly larger
// than the group and contains the inversion map a -> a^-1 of the regular
// labeling.
Outcome quaternion_growth_witness() {
  const PermGroup& q8 = find_entry("Q8-regular")->group;
  ClosureResult orc = closure_oracle(q8, 2);
  std::vector<Point> images(q8.degree());
  for (const Permutation& x : q8.elements()) images[x[0]] = x.inverse()[0];
  const Permutation inversion{images};
  const bool grew = orc.element_count > q8.order();
  const bool contained = std::binary_search(orc.certificate->begin(),
                                            orc.certificate->end(), inversion);
  std::string detail =
      "|closure| = " + std::to_string(orc.element_count) + " (criterion needs > " +
      std::to_string(q8.order()) + "); inversion contained: " +
      (contained ? "yes" : "no") + " (criterion needs yes)";
  return {grew && contained, detail};
}

// 5. Closures distribute over disjoint unions (any k) and over
// coordinatewise product actions (k >= 2, including the row/column
// preservation sub-check), for all pool pairs with combined degree <= 8.
Outcome closure_distributes_over_products() {
  static const char* pool[] = {"C2-regular", "C3-regular", "C4-regular",
                               "E4-regular", "trivial-1"};
  std::size_t sums = 0, products = 0;
  for (const char* left : pool) {
    for (const char* right : pool) {
      const PermGroup& a = find_entry(left)->group;
      const PermGroup& b = find_entry(right)->group;
      for (unsigned k : {2u, 3u}) {
        const std::string at = std::string(left) + " / " + right +
                               " k=" + std::to_string(k);
        if (a.degree() + b.degree() <= 8) {
          if (!check_dirsum_lemma(a, b, k).passed())
            return {false, at + ": disjoint-union law failed"};
          ++sums;
        }
        if (a.degree() * b.degree() <= 8) {
          if (!check_dirprod_lemma(a, b, k).passed())
            return {false, at + ": product-action law failed"};
          ++products;
        }
      }
    }
  }
  return {true, plural(sums, "disjoint union") + ", " +
                    plural(products, "product action")};
}

// 6. For every transitive nilpotent entry and every set of primes: the Hall
// subgroup's orbits all have size n_pi and the Hall subgroup is exactly the
// kernel of the action on those orbits.
Outcome hall_orbit_sizes_and_kernel() {
  std::size_t rows = 0;
  for (const auto& e : catalog()) {
    if (!e.has(Tag::nilpotent) || !e.has(Tag::transitive)) continue;
    const auto decomp = is_nilpotent(e.group).second;
    const PrimeSet support = prime_support(e.group.order());
    const auto& primes = support.primes();
    for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
      std::vector<unsigned> chosen;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask & (1u << i)) chosen.push_back(primes[i]);
      const PrimeSet pi(chosen);
      const PermGroup h = hall_subgroup(e.group, pi, *decomp);
      if (!check_hall_orbits(e.group, h, pi).passed())
        return {false, e.spec.name + ": failed for a prime subset"};
      ++rows;
    }
  }
  return {true, plural(rows, "Hall subgroup")};
}

// 7. The setwise-stabilizer lemma and the Sylow-part orbit/closure lemmas
// hold on every nilpotent entry within budget, for all primes (and k in
// {2,3} where k enters).
Outcome stabilizer_and_sylow_lemmas() {
  std::size_t pass = 0, skip = 0;
  for (const char* suite : {"setwise-stab", "sylow-lemmas"}) {
    for (const CheckReport& r : run_suite(suite)) {
      if (r.passed()) ++pass;
      else if (r.skipped()) ++skip;
      else
        return {false, r.suite + " " + r.group + " (" + r.note + ")"};
    }
  }
  return {true, plural(pass, "check") + ", " + plural(skip, "skip")};
}

// 8. Element-set chain G <= G^(3) <= G^(2) <= G^(1) = product of symmetric
// groups on the orbits; closure is idempotent; the k-orbit partition is a
// fixpoint of closure. All catalog entries.
Outcome chain_idempotence_fixpoint() {
  std::size_t rows = 0;
  for (const CheckReport& r : run_suite("chain")) {
    if (!r.passed()) return {false, r.group + ": " + r.status + " " + r.note};
    ++rows;
  }
  return {true, std::to_string(rows) + " catalog entries, no skips"};
}

// 9. The tuple-matching membership criterion agrees with the orbit-table
// test on >= 200 seeded random permutations per entry, k in {1,2,3}.
Outcome membership_criteria_agree() {
  std::size_t rows = 0, samples = 0;
  for (const CheckReport& r : run_suite("korbit-equivalence")) {
    if (r.skipped()) continue;
    if (!r.passed()) return {false, r.group + " k=" + std::to_string(r.k)};
    if (r.order_lhs < 200)
      return {false, r.group + " k=" + std::to_string(r.k) +
                         ": only " + std::to_string(r.order_lhs) + " samples"};
    ++rows;
    samples += r.order_lhs;
  }
  return {true, plural(rows, "row") + ", " + plural(samples, "sampled permutation")};
}

// 10. The k-closure of every p-group entry is again a p-group (same p).
Outcome p_group_closure_is_p_group() {
  std::size_t rows = 0;
  for (const auto& e : catalog()) {
    if (!e.has(Tag::p_group)) continue;
    const unsigned p = factorize(e.group.order()).front().first;
    for (unsigned k : {2u, 3u}) {
      ClosureResult cl = closure_auto(e.group, k);
      const auto factors = factorize(cl.element_count);
      if (factors.size() != 1 || factors.front().first != p)
        return {false, e.spec.name + " k=" + std::to_string(k) +
                           ": closure order " + std::to_string(cl.element_count) +
                           " is not a power of " + std::to_string(p)};
      ++rows;
    }
  }
  return {true, plural(rows, "closure") + " stayed p-groups"};
}

// 11. Splitting a transitive nilpotent group over p conjugates it exactly
// onto the product action of the two induced quotients.
Outcome decomposition_conjugates_onto_product() {
  std::vector<std::pair<std::string, PermGroup>> cases;
  cases.emplace_back("C6-regular", find_entry("C6-regular")->group);
  cases.emplace_back(
      "C4xC3-grid",
      direct_product_action(PermGroup::cyclic(4), PermGroup::cyclic(3)).group);
  std::size_t rows = 0;
  for (const auto& [name, g] : cases) {
    const PrimeSet support = prime_support(g.order());
    for (unsigned p : support.primes()) {
      const TransitiveDecomposition dec = transitive_decompose(g, p);
      const ProductAction prod = direct_product_action(dec.p_prime, dec.h_prime);
      std::vector<Permutation> conjugated;
      for (const Permutation& gen : g.generators())
        conjugated.push_back(conjugate(gen, dec.conjugator));
      const PermGroup image(g.degree(), conjugated);
      if (!image.same_element_set(prod.group))
        return {false, name + " p=" + std::to_string(p) +
                           ": conjugate misses the product action"};
      ++rows;
    }
  }
  return {true, plural(rows, "decomposition") + " re-encoded exactly"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"Sylow split, backtracking and exhaustive closures coincide; "
       "closure order multiplies over the Sylow parts",
       methods_agree_and_order_multiplies},
      {"the k-closure of a nilpotent group is nilpotent",
       closure_is_nilpotent},
      {"a nilpotent group is k-closed exactly when all Sylow parts are",
       closed_iff_parts_closed},
      {"the pair-closure of the regular quaternion group grows strictly "
       "and contains inversion",
       quaternion_growth_witness},
      {"closures distribute over disjoint unions and product actions",
       closure_distributes_over_products},
      {"Hall subgroup orbits have size n_pi and form the kernel",
       hall_orbit_sizes_and_kernel},
      {"setwise-stabilizer and Sylow-part lemmas hold at every prime",
       stabilizer_and_sylow_lemmas},
      {"closure chain is monotone, idempotent, and fixes the orbit tables",
       chain_idempotence_fixpoint},
      {"tuple-matching membership agrees with the orbit-table test",
       membership_criteria_agree},
      {"the k-closure of a p-group is a p-group", p_group_closure_is_p_group},
      {"a transitive nilpotent group is conjugate to the product action of "
       "its split quotients",
       decomposition_conjugates_onto_product},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    if (!out.first) ++failed;
    std::printf("[%s] %2zu. %s — %s\n", out.first ? "PASS" : "FAIL", i + 1,
                criteria[i].title, out.second.c_str());
    std::fflush(stdout);
  }
  std::printf("criteria: %zu  pass: %zu  fail: %d\n", criteria.size(),
              criteria.size() - failed, failed);
  return failed == 0 ? 0 : 1;
}
