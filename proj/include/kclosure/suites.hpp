#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kclosure/closure.hpp"
#include "kclosure/report.hpp"

namespace kclosure {

struct SuiteOptions {
  Budgets budgets;
  // Restrict suites that sweep k to this single value. Suites with a fixed
  // k range of their own (chain) ignore it.
  std::optional<unsigned> k;
  std::uint64_t rng_seed = 0x5EED5EED;
  unsigned random_samples = 200;  // per row in korbit-equivalence
};

// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

// Runs one named verification sweep over the catalog and returns its rows
// in a deterministic order. Rows that exceed a budget or whose hypotheses
// do not apply to an entry are reported as "skip" with the reason, never as
// failures. Throws std::invalid_argument for an unknown suite name.
std::vector<CheckReport> run_suite(const std::string& name,
                                   const SuiteOptions& opts = {});

// Every suite in canonical order, concatenated.
std::vector<CheckReport> run_all_suites(const SuiteOptions& opts = {});

}  // namespace kclosure
