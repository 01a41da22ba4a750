#include <atomic>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace qwalk::simd {
namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(QWALK_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(QWALK_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* best_table() {
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (const KernelTable* t = kernels_for(isa)) return t;
  }
  return &detail::scalar_table;
}

std::atomic<const KernelTable*> forced{nullptr};

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) { return kernels_for(isa) != nullptr; }

const KernelTable* kernels_for(Isa isa) {
  if (!cpu_has(isa)) return nullptr;
  switch (isa) {
    case Isa::scalar:
      return &detail::scalar_table;
    case Isa::avx2:
#if defined(QWALK_HAVE_AVX2_KERNELS)
      return &detail::avx2_table;
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(QWALK_HAVE_NEON_KERNELS)
      return &detail::neon_table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& kernels() {
  if (const KernelTable* t = forced.load(std::memory_order_acquire)) return *t;
  static const KernelTable* const automatic = best_table();
  return *automatic;
}

Isa active_isa() { return kernels().isa; }

void force_isa(Isa isa) {
  const KernelTable* t = kernels_for(isa);
  if (t == nullptr) {
    throw std::invalid_argument("instruction set not available: " + std::string(isa_name(isa)));
  }
  forced.store(t, std::memory_order_release);
}

void reset_isa() { forced.store(nullptr, std::memory_order_release); }

}  // namespace qwalk::simd
