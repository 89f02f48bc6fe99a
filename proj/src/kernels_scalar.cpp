#include <cstdint>
#include <vector>

#include "kclosure/kernels.hpp"

namespace kclosure::kernels {
namespace {

// Walks tuples as (prefix, last digit): consecutive t share a contiguous
// ids row, and the image index only needs the prefix part recomputed on
// each odometer step.
bool partition_preserved_scalar(const std::int32_t* ids, std::uint32_t n,
                                std::uint32_t k, const std::uint32_t* perm) {
  if (k == 0) return true;
  std::uint64_t prefix_count = 1;
  for (std::uint32_t i = 0; i + 1 < k; ++i) prefix_count *= n;

  std::vector<std::uint32_t> digit(k - 1, 0);
  for (std::uint64_t hi = 0; hi < prefix_count; ++hi) {
    std::uint64_t img_hi = 0;
    for (std::uint32_t d : digit) img_hi = img_hi * n + perm[d];

    const std::int32_t* row = ids + hi * n;
    const std::int32_t* img_base = ids + img_hi * n;
    for (std::uint32_t b = 0; b < n; ++b)
      if (row[b] != img_base[perm[b]]) return false;

    for (std::uint32_t i = k - 1; i-- > 0;) {
      if (++digit[i] < n) break;
      digit[i] = 0;
    }
  }
  return true;
}

void compose_scalar(std::uint32_t* out, const std::uint32_t* p,
                    const std::uint32_t* q, std::uint32_t n) {
  for (std::uint32_t i = 0; i < n; ++i) out[i] = q[p[i]];
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", &partition_preserved_scalar,
                         &compose_scalar};
  return k;
}

}  // namespace kclosure::kernels
