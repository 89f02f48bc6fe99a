#include <doctest.h>

#include <algorithm>
#include <random>

#include "kclosure/kernels.hpp"

using namespace kclosure;

namespace {

std::vector<std::uint32_t> random_perm_vec(unsigned n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(n);
  for (unsigned i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("scalar and avx2 agree on partition_preserved") {
  const auto* avx2 = kernels::avx2_kernels();
  if (!avx2) return;  // non-x86 or old CPU: nothing to compare
  const auto& scalar = kernels::scalar_kernels();

  std::mt19937_64 rng(123);
  int positive_cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    unsigned n = 2 + static_cast<unsigned>(rng() % 15);  // 2..16
    unsigned k = 1 + static_cast<unsigned>(rng() % 3);   // 1..3
    std::uint64_t total = ipow(n, k);
    if (total > 5000) {
      --trial;
      continue;
    }
    std::vector<std::int32_t> ids(total);
    unsigned classes = 1 + static_cast<unsigned>(rng() % 6);
    for (auto& x : ids) x = static_cast<std::int32_t>(rng() % classes);
    auto perm = random_perm_vec(n, rng);
    bool s = scalar.partition_preserved(ids.data(), n, k, perm.data());
    bool v = avx2->partition_preserved(ids.data(), n, k, perm.data());
    CHECK(s == v);
    if (s) ++positive_cases;
  }
  // Constant tables are preserved by everything: guaranteed positives.
  for (int trial = 0; trial < 20; ++trial) {
    unsigned n = 2 + static_cast<unsigned>(rng() % 15);
    unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    std::vector<std::int32_t> ids(ipow(n, k), 7);
    auto perm = random_perm_vec(n, rng);
    CHECK(scalar.partition_preserved(ids.data(), n, k, perm.data()));
    CHECK(avx2->partition_preserved(ids.data(), n, k, perm.data()));
    ++positive_cases;
  }
  CHECK(positive_cases > 0);
}

TEST_CASE("identity always preserves; a transposition breaks a marked table") {
  const auto& scalar = kernels::scalar_kernels();
  unsigned n = 6, k = 2;
  std::vector<std::int32_t> ids(n * n, 0);
  ids[0 * n + 1] = 1;  // only tuple (0,1) marked
  std::vector<std::uint32_t> ident(n);
  for (unsigned i = 0; i < n; ++i) ident[i] = i;
  CHECK(scalar.partition_preserved(ids.data(), n, k, ident.data()));
  std::vector<std::uint32_t> swap01 = ident;
  std::swap(swap01[0], swap01[1]);
  CHECK_FALSE(scalar.partition_preserved(ids.data(), n, k, swap01.data()));
  if (const auto* avx2 = kernels::avx2_kernels()) {
    CHECK(avx2->partition_preserved(ids.data(), n, k, ident.data()));
    CHECK_FALSE(avx2->partition_preserved(ids.data(), n, k, swap01.data()));
  }
}

TEST_CASE("scalar and avx2 agree on compose") {
  const auto* avx2 = kernels::avx2_kernels();
  if (!avx2) return;
  std::mt19937_64 rng(456);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = 1 + static_cast<unsigned>(rng() % 40);
    auto p = random_perm_vec(n, rng);
    auto q = random_perm_vec(n, rng);
    std::vector<std::uint32_t> a(n), b(n);
    kernels::scalar_kernels().compose(a.data(), p.data(), q.data(), n);
    avx2->compose(b.data(), p.data(), q.data(), n);
    CHECK(a == b);
  }
}

TEST_CASE("kernel forcing") {
  auto names = kernels::available_kernels();
  CHECK(std::find(names.begin(), names.end(), "scalar") != names.end());
  kernels::force_kernels("scalar");
  CHECK(std::string(kernels::active_kernels().name) == "scalar");
  kernels::force_kernels("auto");
  CHECK_THROWS_AS(kernels::force_kernels("neon"), std::invalid_argument);
}
