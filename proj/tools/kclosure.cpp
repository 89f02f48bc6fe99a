#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "kclosure/catalog.hpp"
#include "kclosure/closure.hpp"
#include "kclosure/cycles.hpp"
#include "kclosure/errors.hpp"
#include "kclosure/group_structure.hpp"
#include "kclosure/kernels.hpp"
#include "kclosure/korbit.hpp"
#include "kclosure/suites.hpp"

using nlohmann::ordered_json;

namespace {

using namespace kclosure;

struct Resolved {
  std::string name;
  PermGroup group;
};

// A spec argument is a file path when one exists, else a catalog entry name.
Resolved resolve_group(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    GroupSpec spec = load_group_spec(arg);
    return {spec.name.empty() ? arg : spec.name, to_group(spec)};
  }
  if (const CatalogEntry* e = find_entry(arg)) return {e->spec.name, e->group};
  throw ParseError("'" + arg +
                   "' is neither a readable file nor a catalog entry");
}

std::string tuple_1based(const std::vector<Point>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(t[i] + 1);
  }
  return out + ")";
}

std::string points_1based(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.members[i] + 1);
  }
  return out + "}";
}

ordered_json group_json(const Resolved& r) {
  ordered_json j;
  j["group"] = r.name;
  j["degree"] = r.group.degree();
  j["order"] = r.group.order();
  return j;
}

int cmd_orbits(const Resolved& r, unsigned k, const Budgets& budgets,
               bool json_out) {
  TupleOrbitPartition part = k_orbits(r.group, k, budgets.tuple_budget);
  if (json_out) {
    ordered_json j = group_json(r);
    j["command"] = "orbits";
    j["k"] = k;
    j["tuple_count"] = part.tuple_count();
    j["orbit_count"] = part.orbit_count();
    ordered_json orbits = ordered_json::array();
    for (std::int32_t id = 0; id < part.orbit_count(); ++id) {
      ordered_json rep = ordered_json::array();
      for (Point a : part.representatives()[id]) rep.push_back(a + 1);
      orbits.push_back(ordered_json{{"id", id},
                                    {"size", part.orbit_sizes()[id]},
                                    {"representative", rep}});
    }
    j["orbits"] = orbits;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("group: %s  degree: %u  order: %llu  k: %u\n", r.name.c_str(),
                r.group.degree(),
                static_cast<unsigned long long>(r.group.order()), k);
    std::printf("orbits: %d  tuples: %llu\n", part.orbit_count(),
                static_cast<unsigned long long>(part.tuple_count()));
    for (std::int32_t id = 0; id < part.orbit_count(); ++id)
      std::printf("%d: %llu: %s\n", id,
                  static_cast<unsigned long long>(part.orbit_sizes()[id]),
                  tuple_1based(part.representatives()[id]).c_str());
  }
  return 0;
}

int cmd_closure(const Resolved& r, unsigned k, const std::string& method,
                const Budgets& budgets, bool json_out) {
  ClosureResult res = closure_by_method(r.group, k, method, budgets);
  const bool closed = res.element_count == r.group.order();
  if (json_out) {
    ordered_json j = group_json(r);
    j["command"] = "closure";
    j["k"] = k;
    j["method"] = to_string(res.method);
    j["closure_order"] = res.element_count;
    j["closed"] = closed;
    ordered_json gens = ordered_json::array();
    for (const auto& g : res.group.generators()) gens.push_back(emit_cycles(g));
    j["generators"] = gens;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("group: %s  degree: %u  order: %llu\n", r.name.c_str(),
                r.group.degree(),
                static_cast<unsigned long long>(r.group.order()));
    std::printf("k: %u  method: %s  closure-order: %llu  closed: %s\n", k,
                to_string(res.method),
                static_cast<unsigned long long>(res.element_count),
                closed ? "yes" : "no");
    std::printf("generators:\n");
    for (const auto& g : res.group.generators())
      std::printf("  %s\n", emit_cycles(g).c_str());
  }
  return 0;
}

int cmd_sylow(const Resolved& r, unsigned p, bool json_out) {
  PermGroup part = sylow_subgroup(r.group, p);
  if (json_out) {
    ordered_json j = group_json(r);
    j["command"] = "sylow";
    j["p"] = p;
    j["sylow_order"] = part.order();
    ordered_json gens = ordered_json::array();
    for (const auto& g : part.generators()) gens.push_back(emit_cycles(g));
    j["generators"] = gens;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("group: %s  degree: %u  order: %llu\n", r.name.c_str(),
                r.group.degree(),
                static_cast<unsigned long long>(r.group.order()));
    std::printf("p: %u  sylow-order: %llu\n", p,
                static_cast<unsigned long long>(part.order()));
    std::printf("generators:\n");
    for (const auto& g : part.generators())
      std::printf("  %s\n", emit_cycles(g).c_str());
  }
  return 0;
}

int cmd_decompose(const Resolved& r, unsigned p, bool json_out) {
  TransitiveDecomposition dec = transitive_decompose(r.group, p);
  if (json_out) {
    ordered_json j = group_json(r);
    j["command"] = "decompose";
    j["p"] = dec.prime;
    ordered_json po = ordered_json::array();
    for (const auto& o : dec.p_orbits) {
      ordered_json pts = ordered_json::array();
      for (Point a : o.members) pts.push_back(a + 1);
      po.push_back(pts);
    }
    j["p_orbits"] = po;
    ordered_json ho = ordered_json::array();
    for (const auto& o : dec.h_orbits) {
      ordered_json pts = ordered_json::array();
      for (Point a : o.members) pts.push_back(a + 1);
      ho.push_back(pts);
    }
    j["h_orbits"] = ho;
    j["p_prime"] = ordered_json{{"degree", dec.p_prime.degree()},
                                {"order", dec.p_prime.order()}};
    j["h_prime"] = ordered_json{{"degree", dec.h_prime.degree()},
                                {"order", dec.h_prime.order()}};
    j["conjugator"] = emit_cycles(dec.conjugator);
    j["verified"] = true;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("group: %s  degree: %u  order: %llu\n", r.name.c_str(),
                r.group.degree(),
                static_cast<unsigned long long>(r.group.order()));
    std::printf("p: %u\n", dec.prime);
    std::printf("P-orbits (%zu):", dec.p_orbits.size());
    for (const auto& o : dec.p_orbits)
      std::printf(" %s", points_1based(o).c_str());
    std::printf("\nH-orbits (%zu):", dec.h_orbits.size());
    for (const auto& o : dec.h_orbits)
      std::printf(" %s", points_1based(o).c_str());
    std::printf("\np': degree %u order %llu\n", dec.p_prime.degree(),
                static_cast<unsigned long long>(dec.p_prime.order()));
    std::printf("h': degree %u order %llu\n", dec.h_prime.degree(),
                static_cast<unsigned long long>(dec.h_prime.order()));
    std::printf("conjugator: %s\n", emit_cycles(dec.conjugator).c_str());
    std::printf(
        "verified: conjugation maps the group onto the product action\n");
  }
  return 0;
}

void print_report_table(const std::vector<CheckReport>& rows,
                        bool with_timings) {
  std::size_t w_suite = 5, w_group = 5, w_method = 6, w_note = 4;
  for (const auto& r : rows) {
    w_suite = std::max(w_suite, r.suite.size());
    w_group = std::max(w_group, r.group.size());
    w_method = std::max(w_method, r.method.size());
    w_note = std::max(w_note, r.note.size());
  }
  std::printf("%-*s  %-*s  %2s  %-*s  %10s  %10s  %-6s  %-*s",
              static_cast<int>(w_suite), "suite", static_cast<int>(w_group),
              "group", "k", static_cast<int>(w_method), "method", "lhs", "rhs",
              "status", static_cast<int>(w_note), "note");
  if (with_timings) std::printf("  %8s", "ms");
  std::printf("\n");
  for (const auto& r : rows) {
    std::string kcol = r.k == 0 ? "-" : std::to_string(r.k);
    std::printf("%-*s  %-*s  %2s  %-*s  %10llu  %10llu  %-6s  %-*s",
                static_cast<int>(w_suite), r.suite.c_str(),
                static_cast<int>(w_group), r.group.c_str(), kcol.c_str(),
                static_cast<int>(w_method), r.method.c_str(),
                static_cast<unsigned long long>(r.order_lhs),
                static_cast<unsigned long long>(r.order_rhs), r.status.c_str(),
                static_cast<int>(w_note), r.note.c_str());
    if (with_timings) std::printf("  %8.2f", r.millis);
    std::printf("\n");
  }
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts,
               bool json_out, bool no_timings) {
  std::vector<CheckReport> rows =
      suite == "all" ? run_all_suites(opts) : run_suite(suite, opts);
  if (no_timings)
    for (auto& r : rows) r.millis = 0.0;
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : rows) {
    if (r.passed()) ++pass;
    else if (r.skipped()) ++skip;
    else ++fail;
  }
  if (json_out) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows)
      arr.push_back(ordered_json{{"suite", r.suite},
                                 {"group", r.group},
                                 {"k", r.k},
                                 {"method", r.method},
                                 {"order_lhs", r.order_lhs},
                                 {"order_rhs", r.order_rhs},
                                 {"status", r.status},
                                 {"note", r.note},
                                 {"millis", r.millis}});
    ordered_json j;
    j["command"] = "verify";
    j["suite"] = suite;
    j["rows"] = arr;
    j["pass"] = pass;
    j["skip"] = skip;
    j["fail"] = fail;
    std::cout << j.dump(2) << "\n";
  } else {
    print_report_table(rows, !no_timings);
    std::printf("rows: %zu  pass: %d  skip: %d  fail: %d\n", rows.size(), pass,
                skip, fail);
  }
  return fail == 0 ? 0 : 1;
}

int cmd_catalog(const std::string& emit_dir, bool json_out) {
  const auto& entries = catalog();
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (const auto& e : entries) {
      const auto path =
          std::filesystem::path(emit_dir) / (e.spec.name + ".grp");
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      out << emit_group_spec(e.spec);
    }
  }
  if (json_out) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json tags = ordered_json::array();
      for (Tag t : e.tags) tags.push_back(to_string(t));
      ordered_json gens = ordered_json::array();
      for (const auto& g : e.spec.generators) gens.push_back(g);
      arr.push_back(ordered_json{{"name", e.spec.name},
                                 {"degree", e.spec.degree},
                                 {"order", e.group.order()},
                                 {"tags", tags},
                                 {"generators", gens}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::size_t w_name = 4;
    for (const auto& e : entries) w_name = std::max(w_name, e.spec.name.size());
    for (const auto& e : entries) {
      std::string tags;
      for (Tag t : e.tags) {
        if (!tags.empty()) tags += ' ';
        tags += to_string(t);
      }
      std::printf("%-*s  degree %2u  order %6llu  %s\n",
                  static_cast<int>(w_name), e.spec.name.c_str(), e.spec.degree,
                  static_cast<unsigned long long>(e.group.order()),
                  tags.c_str());
    }
    if (!emit_dir.empty())
      std::printf("wrote %zu spec files to %s\n", entries.size(),
                  emit_dir.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "k-orbits and k-closures of finite permutation groups.\n"
      "Group arguments take a spec file path or a catalog entry name."};
  app.require_subcommand(1);

  bool json_out = false;
  bool no_timings = false;
  std::string kernel = "auto";
  Budgets budgets;
  app.add_flag("--json", json_out, "machine-readable output");
  app.add_flag("--no-timings", no_timings,
               "zero out timings for byte-stable reports");
  app.add_option("--kernel", kernel, "table-scan kernels: auto|scalar|avx2")
      ->default_str("auto");
  app.add_option("--max-oracle-degree", budgets.max_oracle_degree,
                 "largest degree the exhaustive oracle will attempt")
      ->default_val(8);
  app.add_option("--max-backtrack-degree", budgets.max_backtrack_degree,
                 "largest degree the backtracking search will attempt")
      ->default_val(16);
  app.add_option("--max-k", budgets.max_k, "largest tuple arity for closures")
      ->default_val(4);
  app.add_option("--tuple-budget", budgets.tuple_budget,
                 "largest tuple table (n^k) to materialize")
      ->default_val(kDefaultTupleBudget);
  app.add_option("--element-budget", budgets.element_budget,
                 "largest group enumeration allowed")
      ->default_val(kDefaultElementBudget);

  std::string orbits_spec;
  unsigned orbits_k = 2;
  auto* orbits = app.add_subcommand("orbits", "k-orbit partition of a group");
  orbits->fallthrough();
  orbits->add_option("spec", orbits_spec, "group spec file or catalog name")
      ->required();
  orbits->add_option("-k,--k", orbits_k, "tuple arity")->default_val(2);

  std::string closure_spec, closure_method = "auto";
  unsigned closure_k = 0;
  auto* closure = app.add_subcommand("closure", "k-closure of a group");
  closure->fallthrough();
  closure->add_option("spec", closure_spec, "group spec file or catalog name")
      ->required();
  closure->add_option("-k,--k", closure_k, "tuple arity")->required();
  closure
      ->add_option("--method", closure_method,
                   "oracle|backtrack|nilpotent|auto|k1")
      ->default_str("auto");

  std::string sylow_spec;
  unsigned sylow_p = 0;
  auto* sylow = app.add_subcommand("sylow", "Sylow p-subgroup (nilpotent G)");
  sylow->fallthrough();
  sylow->add_option("spec", sylow_spec, "group spec file or catalog name")
      ->required();
  sylow->add_option("-p,--p", sylow_p, "prime")->required();

  std::string dec_spec;
  unsigned dec_p = 0;
  auto* dec = app.add_subcommand(
      "decompose", "split a transitive nilpotent group over a prime");
  dec->fallthrough();
  dec->add_option("spec", dec_spec, "group spec file or catalog name")
      ->required();
  dec->add_option("-p,--p", dec_p, "prime")->required();

  std::string verify_suite = "all";
  SuiteOptions suite_opts;
  unsigned verify_k = 0;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->fallthrough();
  verify->add_option("--suite", verify_suite,
                     "suite name or 'all' (see list below)");
  verify->add_option("-k,--k", verify_k, "restrict sweeps to one arity");
  verify->add_option("--seed", suite_opts.rng_seed, "sampling seed");
  verify
      ->add_option("--samples", suite_opts.random_samples,
                   "random permutations per equivalence row")
      ->default_val(200);

  std::string emit_dir;
  auto* cat = app.add_subcommand("catalog", "list the built-in test groups");
  cat->fallthrough();
  cat->add_option("--emit", emit_dir, "write one spec file per entry here");

  std::string suites_help = "suites:";
  for (const auto& s : suite_names()) suites_help += " " + s;
  verify->footer(suites_help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, returns 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    kernels::force_kernels(kernel);
    if (app.got_subcommand(orbits))
      return cmd_orbits(resolve_group(orbits_spec), orbits_k, budgets,
                        json_out);
    if (app.got_subcommand(closure))
      return cmd_closure(resolve_group(closure_spec), closure_k,
                         closure_method, budgets, json_out);
    if (app.got_subcommand(sylow))
      return cmd_sylow(resolve_group(sylow_spec), sylow_p, json_out);
    if (app.got_subcommand(dec))
      return cmd_decompose(resolve_group(dec_spec), dec_p, json_out);
    if (app.got_subcommand(verify)) {
      suite_opts.budgets = budgets;
      if (verify->count("-k") || verify->count("--k")) suite_opts.k = verify_k;
      if (verify_suite != "all" && !is_suite(verify_suite))
        throw std::invalid_argument("unknown suite: " + verify_suite);
      return cmd_verify(verify_suite, suite_opts, json_out, no_timings);
    }
    if (app.got_subcommand(cat)) return cmd_catalog(emit_dir, json_out);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
