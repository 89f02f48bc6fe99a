// Compiled with -mavx2 (see CMakeLists); only reached after a runtime
// CPU check in kernels_dispatch.cpp.
#include <cstdint>
#include <vector>

#include "kclosure/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace kclosure::kernels {

#if defined(__AVX2__)
namespace {

bool partition_preserved_avx2(const std::int32_t* ids, std::uint32_t n,
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
    std::uint32_t b = 0;
    if (n >= 8) {
      const __m256i vbase =
          _mm256_set1_epi32(static_cast<std::int32_t>(img_hi * n));
      for (; b + 8 <= n; b += 8) {
        __m256i vperm = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(perm + b));
        __m256i vidx = _mm256_add_epi32(vbase, vperm);
        __m256i vimg = _mm256_i32gather_epi32(ids, vidx, 4);
        __m256i vrow = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(row + b));
        __m256i veq = _mm256_cmpeq_epi32(vrow, vimg);
        if (_mm256_movemask_epi8(veq) != -1) return false;
      }
    }
    for (; b < n; ++b)
      if (row[b] != img_base[perm[b]]) return false;

    for (std::uint32_t i = k - 1; i-- > 0;) {
      if (++digit[i] < n) break;
      digit[i] = 0;
    }
  }
  return true;
}

void compose_avx2(std::uint32_t* out, const std::uint32_t* p,
                  const std::uint32_t* q, std::uint32_t n) {
  std::uint32_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vp =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    __m256i vq = _mm256_i32gather_epi32(
        reinterpret_cast<const std::int32_t*>(q), vp, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), vq);
  }
  for (; i < n; ++i) out[i] = q[p[i]];
}

}  // namespace

const Kernels* avx2_kernels_impl() {
  static const Kernels k{"avx2", &partition_preserved_avx2, &compose_avx2};
  return &k;
}

#else

const Kernels* avx2_kernels_impl() { return nullptr; }

#endif

}  // namespace kclosure::kernels
