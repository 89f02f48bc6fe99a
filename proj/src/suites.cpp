#include "kclosure/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "kclosure/catalog.hpp"
#include "kclosure/group_structure.hpp"
#include "kclosure/korbit.hpp"
#include "kclosure/products.hpp"

namespace kclosure {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

CheckReport skip_row(std::string suite, std::string group, unsigned k,
                     std::string note) {
  CheckReport rep;
  rep.suite = std::move(suite);
  rep.group = std::move(group);
  rep.k = k;
  rep.status = "skip";
  rep.note = std::move(note);
  return rep;
}

// The k values a sweeping suite visits: its own defaults, or the single
// value the caller restricted to (validated against [lo, hi]).
std::vector<unsigned> k_sweep(const SuiteOptions& opts,
                              std::vector<unsigned> defaults, unsigned lo,
                              unsigned hi, const char* suite) {
  if (!opts.k) return defaults;
  if (*opts.k < lo || *opts.k > hi)
    throw std::invalid_argument(std::string(suite) + ": k must lie in [" +
                                std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  return {*opts.k};
}

std::string join_primes(const PrimeSet& pi) {
  std::string out = "{";
  bool first = true;
  for (unsigned p : pi.primes()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(p);
  }
  return out + "}";
}

bool subgroup_of(const PermGroup& a, const PermGroup& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

std::vector<CheckReport> suite_main_theorem(const SuiteOptions& opts) {
  std::vector<CheckReport> rows;
  const auto ks = k_sweep(opts, {2, 3}, 2, opts.budgets.max_k, "main-theorem");
  for (const auto& entry : catalog())
    for (unsigned k : ks) {
      const auto t0 = Clock::now();
      if (!entry.has(Tag::nilpotent)) {
        rows.push_back(
            skip_row("main-theorem", entry.spec.name, k, "not nilpotent"));
        continue;
      }
      CheckReport rep;
      rep.suite = "main-theorem";
      rep.group = entry.spec.name;
      rep.k = k;
      try {
        ClosureResult split = closure_nilpotent(entry.group, k, opts.budgets);
        ClosureResult direct = closure_backtrack(entry.group, k, opts.budgets);
        bool agree = split.group.same_element_set(direct.group);
        rep.method = "nilpotent=backtrack";
        if (entry.group.degree() <= opts.budgets.max_oracle_degree) {
          ClosureResult slow = closure_oracle(entry.group, k, opts.budgets);
          agree = agree && slow.group.same_element_set(split.group);
          rep.method += "=oracle";
        } else {
          rep.note = "oracle skipped: degree " +
                     std::to_string(entry.group.degree()) + " over " +
                     std::to_string(opts.budgets.max_oracle_degree);
        }

        std::uint64_t part_product = 1;
        const auto decomp = is_nilpotent(entry.group).second;
        for (const auto& [p, part] : decomp->parts) {
          (void)p;
          part_product *=
              closure_backtrack(part, k, opts.budgets).element_count;
        }
        const bool product_ok = split.element_count == part_product;
        const bool closure_nilp = is_nilpotent(split.group).first;
        const bool pi_ok = prime_support(split.element_count) ==
                           prime_support(entry.group.order());

        rep.order_lhs = split.element_count;
        rep.order_rhs = part_product;
        if (agree && product_ok && closure_nilp && pi_ok) {
          rep.status = "pass";
        } else {
          rep.status = "fail";
          if (!agree) rep.note = "methods disagree";
          else if (!product_ok) rep.note = "order != product of part closures";
          else if (!closure_nilp) rep.note = "closure is not nilpotent";
          else rep.note = "prime support changed";
        }
      } catch (const BudgetExceeded& e) {
        rep = skip_row("main-theorem", entry.spec.name, k, e.what());
      }
      rep.millis = ms_since(t0);
      rows.push_back(std::move(rep));
    }
  return rows;
}

std::vector<CheckReport> suite_corollary(const SuiteOptions& opts) {
  std::vector<CheckReport> rows;
  const auto ks = k_sweep(opts, {2, 3}, 2, opts.budgets.max_k, "corollary");
  for (const auto& entry : catalog())
    for (unsigned k : ks) {
      const auto t0 = Clock::now();
      if (!entry.has(Tag::nilpotent)) {
        rows.push_back(
            skip_row("corollary", entry.spec.name, k, "not nilpotent"));
        continue;
      }
      CheckReport rep;
      rep.suite = "corollary";
      rep.group = entry.spec.name;
      rep.k = k;
      rep.method = "auto";
      try {
        ClosureResult whole = closure_auto(entry.group, k, opts.budgets);
        const bool whole_closed = whole.element_count == entry.group.order();
        bool parts_closed = true;
        const auto decomp = is_nilpotent(entry.group).second;
        for (const auto& [p, part] : decomp->parts) {
          (void)p;
          parts_closed =
              parts_closed &&
              closure_backtrack(part, k, opts.budgets).element_count ==
                  part.order();
        }
        rep.order_lhs = whole.element_count;
        rep.order_rhs = entry.group.order();
        rep.status = whole_closed == parts_closed ? "pass" : "fail";
        rep.note = whole_closed ? "closed both ways" : "open both ways";
        if (!rep.passed()) rep.note = "closedness differs from the parts";
      } catch (const BudgetExceeded& e) {
        rep = skip_row("corollary", entry.spec.name, k, e.what());
      }
      rep.millis = ms_since(t0);
      rows.push_back(std::move(rep));
    }
  return rows;
}

const std::vector<const char*>& pair_pool() {
  static const std::vector<const char*> pool{
      "C2-regular", "C3-regular", "C4-regular", "E4-regular", "trivial-1"};
  return pool;
}

std::vector<CheckReport> suite_dirsum(const SuiteOptions& opts) {
  std::vector<CheckReport> rows;
  const auto ks = k_sweep(opts, {2, 3}, 1, opts.budgets.max_k, "dirsum");
  for (const char* left : pair_pool())
    for (const char* right : pair_pool()) {
      const CatalogEntry* a = find_entry(left);
      const CatalogEntry* b = find_entry(right);
      if (a->group.degree() + b->group.degree() > 8) continue;
      for (unsigned k : ks) {
        const auto t0 = Clock::now();
        CheckReport rep;
        try {
          rep = check_dirsum_lemma(a->group, b->group, k, opts.budgets);
          rep.group = std::string(left) + " + " + right;
        } catch (const BudgetExceeded& e) {
          rep = skip_row("dirsum", std::string(left) + " + " + right, k,
                         e.what());
        }
        rep.millis = ms_since(t0);
        rows.push_back(std::move(rep));
      }
    }
  return rows;
}

std::vector<CheckReport> suite_dirprod(const SuiteOptions& opts) {
  std::vector<CheckReport> rows;
  const auto ks = k_sweep(opts, {2, 3}, 2, opts.budgets.max_k, "dirprod");
  for (const char* left : pair_pool())
    for (const char* right : pair_pool()) {
      const CatalogEntry* a = find_entry(left);
      const CatalogEntry* b = find_entry(right);
      if (a->group.degree() * b->group.degree() > 8) continue;
      for (unsigned k : ks) {
        const auto t0 = Clock::now();
        CheckReport rep;
        try {
          rep = check_dirprod_lemma(a->group, b->group, k, opts.budgets);
          rep.group = std::string(left) + " x " + right;
        } catch (const BudgetExceeded& e) {
          rep = skip_row("dirprod", std::string(left) + " x " + right, k,
                         e.what());
        }
        rep.millis = ms_since(t0);
        rows.push_back(std::move(rep));
      }
    }
  return rows;
}

// The Hall-orbit checker has no budget knobs: it only ever enumerates the
// catalog's transitive nilpotent entries, whose orders are tiny.
std::vector<CheckReport> suite_cp1(const SuiteOptions&) {
  std::vector<CheckReport> rows;
  for (const auto& entry : catalog()) {
    if (!entry.has(Tag::nilpotent)) {
      rows.push_back(skip_row("cp1", entry.spec.name, 0, "not nilpotent"));
      continue;
    }
    if (!entry.has(Tag::transitive)) {
      rows.push_back(skip_row("cp1", entry.spec.name, 0, "not transitive"));
      continue;
    }
    const auto decomp = is_nilpotent(entry.group).second;
    const PrimeSet support = prime_support(entry.group.order());
    const auto& primes = support.primes();
    for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size());
         ++mask) {
      const auto tp = Clock::now();
      std::vector<unsigned> subset;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask & (std::size_t{1} << i)) subset.push_back(primes[i]);
      PrimeSet pi(subset);
      CheckReport rep;
      try {
        PermGroup hall = hall_subgroup(entry.group, pi, *decomp);
        rep = check_hall_orbits(entry.group, hall, pi);
        rep.group = entry.spec.name;
        rep.note = "pi=" + join_primes(pi) +
                   (rep.note.empty() ? "" : "; " + rep.note);
      } catch (const BudgetExceeded& e) {
        rep = skip_row("cp1", entry.spec.name, 0,
                       "pi=" + join_primes(pi) + "; " + e.what());
      }
      rep.millis = ms_since(tp);
      rows.push_back(std::move(rep));
    }
  }
  return rows;
}

// Deterministic choice of P-orbit index subsets: everything when there are
// at most four orbits, otherwise singletons, prefixes and the full set.
std::vector<std::vector<std::size_t>> orbit_choices(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0) return out;
  if (m <= 4) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::size_t{1} << i)) chosen.push_back(i);
      out.push_back(std::move(chosen));
    }
    return out;
  }
  for (std::size_t i = 0; i < m; ++i) out.push_back({i});
  for (std::size_t len = 2; len <= m; ++len) {
    std::vector<std::size_t> prefix(len);
    for (std::size_t i = 0; i < len; ++i) prefix[i] = i;
    out.push_back(std::move(prefix));
  }
  return out;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::vector<CheckReport> suite_setwise_stab(const SuiteOptions& opts) {
  std::vector<CheckReport> rows;
  for (const auto& entry : catalog()) {
    if (!entry.has(Tag::nilpotent)) {
      rows.push_back(
          skip_row("setwise-stab", entry.spec.name, 0, "not nilpotent"));
      continue;
    }
    if (entry.group.order() == 1) {
      rows.push_back(
          skip_row("setwise-stab", entry.spec.name, 0, "trivial order"));
      continue;
    }
    const auto decomp = is_nilpotent(entry.group).second;
    for (const auto& [p, part] : decomp->parts) {
      const std::size_t orbit_count = part.orbits().size();
      for (const auto& chosen : orbit_choices(orbit_count)) {
        const auto t0 = Clock::now();
        CheckReport rep;
        try {
          rep = check_setwise_stab_lemma(entry.group, p, chosen, opts.budgets);
          rep.group = entry.spec.name;
          rep.note = "p=" + std::to_string(p) + " orbits=" +
                     join_indices(chosen) +
                     (rep.note.empty() ? "" : "; " + rep.note);
        } catch (const BudgetExceeded& e) {
          rep = skip_row("setwise-stab", entry.spec.name, 0,
                         "p=" + std::to_string(p) + "; " + e.what());
        }
        rep.millis = ms_since(t0);
        rows.push_back(std::move(rep));
      }
    }
  }
  return rows;
}

std::vector<CheckReport> suite_sylow_lemmas(const SuiteOptions& opts) {
  std::vector<CheckReport> rows;
  const auto ks = k_sweep(opts, {2, 3}, 2, opts.budgets.max_k, "sylow-lemmas");
  for (const auto& entry : catalog()) {
    if (!entry.has(Tag::nilpotent)) {
      rows.push_back(
          skip_row("sylow-lemmas", entry.spec.name, 0, "not nilpotent"));
      continue;
    }
    if (entry.group.order() == 1) {
      rows.push_back(
          skip_row("sylow-lemmas", entry.spec.name, 0, "trivial order"));
      continue;
    }
    const PrimeSet support = prime_support(entry.group.order());
    for (unsigned p : support.primes())
      for (unsigned k : ks) {
        const auto t0 = Clock::now();
        CheckReport rep;
        try {
          rep = check_sylow_closure_lemmas(entry.group, k, p, opts.budgets);
          rep.group = entry.spec.name;
          rep.note = "p=" + std::to_string(p) +
                     (rep.note.empty() ? "" : "; " + rep.note);
        } catch (const BudgetExceeded& e) {
          rep = skip_row("sylow-lemmas", entry.spec.name, k,
                         "p=" + std::to_string(p) + "; " + e.what());
        }
        rep.millis = ms_since(t0);
        rows.push_back(std::move(rep));
      }
  }
  return rows;
}

std::vector<CheckReport> suite_chain(const SuiteOptions& opts) {
  std::vector<CheckReport> rows;
  for (const auto& entry : catalog()) {
    const auto t0 = Clock::now();
    CheckReport rep;
    rep.suite = "chain";
    rep.group = entry.spec.name;
    rep.k = 0;
    rep.method = "auto";
    try {
      const PermGroup& g = entry.group;
      ClosureResult c1 = closure_k1(g);
      ClosureResult c2 = closure_auto(g, 2, opts.budgets);
      ClosureResult c3 = closure_auto(g, 3, opts.budgets);

      const bool inclusions = subgroup_of(g, c3.group) &&
                              subgroup_of(c3.group, c2.group) &&
                              subgroup_of(c2.group, c1.group);
      const bool idempotent =
          closure_k1(c1.group).group.same_element_set(c1.group) &&
          closure_auto(c2.group, 2, opts.budgets)
              .group.same_element_set(c2.group) &&
          closure_auto(c3.group, 3, opts.budgets)
              .group.same_element_set(c3.group);
      bool fixpoint = true;
      for (unsigned k : {1u, 2u, 3u}) {
        const PermGroup& closed =
            k == 1 ? c1.group : (k == 2 ? c2.group : c3.group);
        fixpoint = fixpoint && k_orbits(closed, k, opts.budgets.tuple_budget) ==
                                   k_orbits(g, k, opts.budgets.tuple_budget);
      }
      rep.order_lhs = g.order();
      rep.order_rhs = c2.element_count;
      if (inclusions && idempotent && fixpoint) {
        rep.status = "pass";
      } else {
        rep.status = "fail";
        if (!inclusions) rep.note = "inclusion chain broken";
        else if (!idempotent) rep.note = "closure not idempotent";
        else rep.note = "orbit partition moved under closure";
      }
    } catch (const BudgetExceeded& e) {
      rep = skip_row("chain", entry.spec.name, 0, e.what());
    }
    rep.millis = ms_since(t0);
    rows.push_back(std::move(rep));
  }
  return rows;
}

std::vector<CheckReport> suite_korbit_equivalence(const SuiteOptions& opts) {
  std::vector<CheckReport> rows;
  const auto ks =
      k_sweep(opts, {1, 2, 3}, 1, opts.budgets.max_k, "korbit-equivalence");
  std::size_t index = 0;
  for (const auto& entry : catalog()) {
    ++index;
    for (unsigned k : ks) {
      const auto t0 = Clock::now();
      if (entry.group.degree() > 7) {
        rows.push_back(skip_row("korbit-equivalence", entry.spec.name, k,
                                "degree over 7"));
        continue;
      }
      CheckReport rep;
      rep.suite = "korbit-equivalence";
      rep.group = entry.spec.name;
      rep.k = k;
      rep.method = "wielandt=table";
      try {
        const PermGroup& g = entry.group;
        TupleOrbitPartition part = k_orbits(g, k, opts.budgets.tuple_budget);
        bool agree = true;
        for (const auto& e : g.elements(opts.budgets.element_budget))
          agree = agree && wielandt_member(g, k, e, opts.budgets.tuple_budget,
                                           opts.budgets.element_budget) &&
                  preserves_partition(e, part);

        std::mt19937_64 rng(opts.rng_seed ^
                            (0x9E3779B97F4A7C15ull * (index * 8 + k)));
        std::vector<Point> img(g.degree());
        for (Point a = 0; a < g.degree(); ++a) img[a] = a;
        for (unsigned trial = 0; agree && trial < opts.random_samples;
             ++trial) {
          std::shuffle(img.begin(), img.end(), rng);
          Permutation x(img);
          agree = wielandt_member(g, k, x, opts.budgets.tuple_budget,
                                  opts.budgets.element_budget) ==
                  preserves_partition(x, part);
        }
        rep.order_lhs = opts.random_samples;
        rep.order_rhs = opts.random_samples;
        rep.status = agree ? "pass" : "fail";
        if (!rep.passed()) rep.note = "criteria disagree";
      } catch (const BudgetExceeded& e) {
        rep = skip_row("korbit-equivalence", entry.spec.name, k, e.what());
      }
      rep.millis = ms_since(t0);
      rows.push_back(std::move(rep));
    }
  }
  return rows;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "main-theorem", "corollary",    "dirsum",
      "dirprod",      "cp1",          "setwise-stab",
      "sylow-lemmas", "chain",        "korbit-equivalence"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckReport> run_suite(const std::string& name,
                                   const SuiteOptions& opts) {
  if (name == "main-theorem") return suite_main_theorem(opts);
  if (name == "corollary") return suite_corollary(opts);
  if (name == "dirsum") return suite_dirsum(opts);
  if (name == "dirprod") return suite_dirprod(opts);
  if (name == "cp1") return suite_cp1(opts);
  if (name == "setwise-stab") return suite_setwise_stab(opts);
  if (name == "sylow-lemmas") return suite_sylow_lemmas(opts);
  if (name == "chain") return suite_chain(opts);
  if (name == "korbit-equivalence") return suite_korbit_equivalence(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckReport> run_all_suites(const SuiteOptions& opts) {
  std::vector<CheckReport> all;
  for (const auto& name : suite_names()) {
    auto rows = run_suite(name, opts);
    all.insert(all.end(), std::make_move_iterator(rows.begin()),
               std::make_move_iterator(rows.end()));
  }
  return all;
}

}  // namespace kclosure
