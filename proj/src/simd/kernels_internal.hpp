#pragma once

#include "qwalk/simd.hpp"

namespace qwalk::simd::detail {

extern const KernelTable scalar_table;

#if defined(__x86_64__) || defined(_M_X64)
#define QWALK_HAVE_AVX2_KERNELS 1
extern const KernelTable avx2_table;
#endif

#if defined(__aarch64__)
#define QWALK_HAVE_NEON_KERNELS 1
extern const KernelTable neon_table;
#endif

// Complex product-sum c0 * a + c1 * b written out in the order every
// variant must follow so element-wise results agree bit for bit.
struct CoinRow {
  double c0r, c0i, c1r, c1i;
};

inline CoinRow coin_row(const CoinEntries& c, int row) {
  const int k = row * 4;
  return {c[k], c[k + 1], c[k + 2], c[k + 3]};
}

}  // namespace qwalk::simd::detail
