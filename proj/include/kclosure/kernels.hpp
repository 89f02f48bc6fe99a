#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kclosure::kernels {

// Flat-table inner loops, duplicated as scalar reference code and SIMD
// variants. Tables use the mixed-radix tuple encoding
//   t = sum_i tuple[i] * n^(k-1-i),  0 <= t < n^k.
//
// partition_preserved: ids has length n^k; perm has length n; returns true
// iff ids[image(t)] == ids[t] for every encoded tuple t, where image(t)
// applies perm to each digit.
//
// compose: out[i] = q[p[i]] for i < n (apply p first). out must not alias q.
using PartitionPreservedFn = bool (*)(const std::int32_t* ids, std::uint32_t n,
                                      std::uint32_t k,
                                      const std::uint32_t* perm);
using ComposeFn = void (*)(std::uint32_t* out, const std::uint32_t* p,
                           const std::uint32_t* q, std::uint32_t n);

struct Kernels {
  const char* name;
  PartitionPreservedFn partition_preserved;
  ComposeFn compose;
};

// Reference implementation; always available.
const Kernels& scalar_kernels();

// AVX2 implementation, or nullptr when the build or the CPU lacks support.
const Kernels* avx2_kernels();

// The selected implementation: AVX2 when available unless overridden.
const Kernels& active_kernels();

// Force "scalar" or "avx2"; throws std::invalid_argument for unknown names,
// std::runtime_error when avx2 is requested but unavailable.
void force_kernels(const std::string& name);

std::vector<std::string> available_kernels();

}  // namespace kclosure::kernels
