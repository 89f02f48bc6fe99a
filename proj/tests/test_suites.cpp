#include <doctest.h>

#include <algorithm>
#include <map>

#include "kclosure/suites.hpp"

using namespace kclosure;

namespace {

// Everything except the timing, which is the only nondeterministic field.
using RowKey = std::tuple<std::string, std::string, unsigned, std::string,
                          std::uint64_t, std::uint64_t, std::string,
                          std::string>;

RowKey key(const CheckReport& r) {
  return {r.suite, r.group, r.k, r.method, r.order_lhs, r.order_rhs, r.status,
          r.note};
}

int count_status(const std::vector<CheckReport>& rows,
                 const std::string& status) {
  return static_cast<int>(std::count_if(
      rows.begin(), rows.end(),
      [&](const CheckReport& r) { return r.status == status; }));
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 9);
  CHECK(is_suite("main-theorem"));
  CHECK(is_suite("korbit-equivalence"));
  CHECK_FALSE(is_suite("no-such-suite"));
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("main-theorem suite: no failures, skips only for non-nilpotent") {
  auto rows = run_suite("main-theorem");
  CHECK(count_status(rows, "fail") == 0);
  for (const auto& r : rows) {
    if (r.skipped()) {
      CHECK(r.note == "not nilpotent");
      CHECK((r.group == "S3-natural" || r.group == "D5-natural"));
    } else {
      CHECK(r.passed());
      CHECK(r.order_lhs == r.order_rhs);  // |G^(k)| = prod of part closures
    }
  }
  // Every catalog entry appears for k = 2 and k = 3.
  std::map<std::string, int> per_group;
  for (const auto& r : rows) ++per_group[r.group];
  for (const auto& [name, n] : per_group) {
    (void)name;
    CHECK(n == 2);
  }
}

TEST_CASE("main-theorem restricted to one k") {
  SuiteOptions opts;
  opts.k = 2;
  auto rows = run_suite("main-theorem", opts);
  for (const auto& r : rows) CHECK(r.k == 2);
  CHECK(count_status(rows, "fail") == 0);

  SuiteOptions bad;
  bad.k = 1;
  CHECK_THROWS_AS(run_suite("main-theorem", bad), std::invalid_argument);
}

TEST_CASE("corollary suite: closedness matches the Sylow parts everywhere") {
  auto rows = run_suite("corollary");
  CHECK(count_status(rows, "fail") == 0);
  for (const auto& r : rows)
    if (!r.skipped()) {
      CHECK(r.passed());
      // All nilpotent catalog entries happen to be k-closed for k >= 2.
      CHECK(r.order_lhs == r.order_rhs);
      CHECK(r.note == "closed both ways");
    }
}

TEST_CASE("dirsum suite covers all pool pairs and passes") {
  auto rows = run_suite("dirsum");
  CHECK(rows.size() == 50);  // 25 ordered pairs x k in {2,3}
  CHECK(count_status(rows, "fail") == 0);
  CHECK(count_status(rows, "skip") == 0);
}

TEST_CASE("dirprod suite keeps the product degree within the oracle") {
  auto rows = run_suite("dirprod");
  CHECK(rows.size() == 32);  // 16 ordered pairs x k in {2,3}
  CHECK(count_status(rows, "fail") == 0);
  CHECK(count_status(rows, "skip") == 0);
}

TEST_CASE("cp1 suite passes on transitive nilpotent entries") {
  auto rows = run_suite("cp1");
  CHECK(count_status(rows, "fail") == 0);
  int passes = 0;
  for (const auto& r : rows) {
    if (r.skipped()) {
      CHECK((r.note == "not nilpotent" || r.note == "not transitive"));
    } else {
      ++passes;
      CHECK(r.note.substr(0, 3) == "pi=");
      CHECK(r.order_lhs == r.order_rhs);  // kernel order = Hall order
    }
  }
  CHECK(passes >= 25);
}

TEST_CASE("setwise-stab suite passes on nilpotent entries") {
  auto rows = run_suite("setwise-stab");
  CHECK(count_status(rows, "fail") == 0);
  int passes = 0;
  for (const auto& r : rows)
    if (!r.skipped()) {
      ++passes;
      CHECK(r.passed());
      CHECK(r.note.substr(0, 2) == "p=");
    }
  CHECK(passes >= 30);
}

TEST_CASE("sylow-lemmas suite passes within budgets") {
  auto rows = run_suite("sylow-lemmas");
  CHECK(count_status(rows, "fail") == 0);
  int passes = 0;
  for (const auto& r : rows)
    if (!r.skipped()) ++passes;
  CHECK(passes >= 30);
}

TEST_CASE("chain suite passes for every catalog entry") {
  auto rows = run_suite("chain");
  CHECK(count_status(rows, "fail") == 0);
  CHECK(count_status(rows, "skip") == 0);
  for (const auto& r : rows) CHECK(r.passed());
}

TEST_CASE("korbit-equivalence suite agrees on sampled permutations") {
  SuiteOptions opts;
  opts.random_samples = 60;  // keep the unit run quick; the CLI uses 200
  auto rows = run_suite("korbit-equivalence", opts);
  CHECK(count_status(rows, "fail") == 0);
  for (const auto& r : rows) {
    if (r.skipped())
      CHECK(r.note == "degree over 7");
    else
      CHECK(r.order_lhs == 60);
  }
}

TEST_CASE("suite reports are deterministic apart from timings") {
  SuiteOptions opts;
  opts.random_samples = 40;
  for (const std::string name : {"korbit-equivalence", "main-theorem"}) {
    auto a = run_suite(name, opts);
    auto b = run_suite(name, opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(key(a[i]) == key(b[i]));
  }
}
