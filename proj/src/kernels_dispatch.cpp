#include <atomic>
#include <stdexcept>

#include "kclosure/kernels.hpp"

namespace kclosure::kernels {

// Defined in kernels_avx2.cpp; nullptr when that unit was built without AVX2.
const Kernels* avx2_kernels_impl();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Kernels* pick_default() {
  if (const Kernels* k = avx2_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const Kernels*>& selected() {
  static std::atomic<const Kernels*> sel{pick_default()};
  return sel;
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels* k = cpu_has_avx2() ? avx2_kernels_impl() : nullptr;
  return k;
}

const Kernels& active_kernels() { return *selected().load(); }

void force_kernels(const std::string& name) {
  if (name == "scalar") {
    selected().store(&scalar_kernels());
  } else if (name == "avx2") {
    const Kernels* k = avx2_kernels();
    if (!k) throw std::runtime_error("avx2 kernels unavailable on this host");
    selected().store(k);
  } else if (name == "auto") {
    selected().store(pick_default());
  } else {
    throw std::invalid_argument("unknown kernel set: " + name);
  }
}

std::vector<std::string> available_kernels() {
  std::vector<std::string> out{"scalar"};
  if (avx2_kernels()) out.emplace_back("avx2");
  return out;
}

}  // namespace kclosure::kernels
