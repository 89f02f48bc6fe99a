#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kclosure/group_structure.hpp"
#include "kclosure/korbit.hpp"
#include "kclosure/perm_group.hpp"
#include "kclosure/report.hpp"

namespace kclosure {

struct Budgets {
  unsigned max_oracle_degree = 8;     // full Sym(n) filter
  unsigned max_backtrack_degree = 16; // image-assignment search
  unsigned max_k = 4;
  std::uint64_t tuple_budget = kDefaultTupleBudget;
  std::uint64_t element_budget = kDefaultElementBudget;
};

enum class ClosureMethod { oracle, backtrack, nilpotent, k1 };

const char* to_string(ClosureMethod m);

struct ClosureResult {
  PermGroup group;
  ClosureMethod method;
  std::uint64_t element_count = 0;
  // All closure elements, sorted; filled by the enumerating methods.
  std::optional<std::vector<Permutation>> certificate;
};

// Reference method: keep exactly those x in Sym(n) that fix every k-orbit
// of g setwise. Guarded by max_oracle_degree.
ClosureResult closure_oracle(const PermGroup& g, unsigned k,
                             const Budgets& budgets = {});

// Backtracking over point images in increasing point order, pruning on
// 1-orbit classes and on every k-tuple that became fully assigned. Agrees
// with closure_oracle wherever both run. Guarded by max_backtrack_degree.
ClosureResult closure_backtrack(const PermGroup& g, unsigned k,
                                const Budgets& budgets = {});

// Splits a nilpotent group into its Sylow parts, closes each part with the
// backtrack method and combines. Requires k >= 2 (KLessThanTwo otherwise)
// and nilpotency (NotNilpotent otherwise). Verifies the combined order
// equals the product of the part orders and that the result preserves the
// k-orbits of g; a violation throws InternalContradiction.
ClosureResult closure_nilpotent(const PermGroup& g, unsigned k,
                                const Budgets& budgets = {});

// k = 1: the direct product of symmetric groups on the orbits of g.
ClosureResult closure_k1(const PermGroup& g);

// Picks per the inputs: k1 for k == 1, nilpotent when it applies, plain
// backtrack otherwise.
ClosureResult closure_auto(const PermGroup& g, unsigned k,
                           const Budgets& budgets = {});

ClosureResult closure_by_method(const PermGroup& g, unsigned k,
                                const std::string& method,
                                const Budgets& budgets = {});

bool is_k_closed(const PermGroup& g, unsigned k, const Budgets& budgets = {});

// Closure of a disjoint union is the disjoint union of the closures.
CheckReport check_dirsum_lemma(const PermGroup& a, const PermGroup& b,
                               unsigned k, const Budgets& budgets = {});

// Closure of a coordinatewise product action is the product of the
// closures; for k >= 2 every closure element also maps rows to rows and
// columns to columns (checked as a sub-property).
CheckReport check_dirprod_lemma(const PermGroup& a, const PermGroup& b,
                                unsigned k, const Budgets& budgets = {});

// For a Sylow p-subgroup P of nilpotent g with chosen P-orbits
// delta[0..m-1]: the intersection of the setwise stabilizers, restricted to
// the union of the chosen orbits, is contained in P restricted likewise.
CheckReport check_setwise_stab_lemma(const PermGroup& g, unsigned p,
                                     const std::vector<std::size_t>& chosen,
                                     const Budgets& budgets = {});

// Q = Sylow p-part of the k-closure of nilpotent g, P = Sylow p-part of g:
// Orb(P) = Orb(Q) and P^(k) = Q.
CheckReport check_sylow_closure_lemmas(const PermGroup& g, unsigned k,
                                       unsigned p,
                                       const Budgets& budgets = {});

}  // namespace kclosure
