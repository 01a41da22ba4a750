#include "kernels_internal.hpp"

#if defined(QWALK_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#define QWALK_AVX2 __attribute__((target("avx2")))

namespace qwalk::simd::detail {
namespace {

// (c0r*xr - c0i*xi) + (c1r*yr - c1i*yi), lane-wise; no FMA so the rounding
// matches the scalar reference exactly.
QWALK_AVX2 inline __m256d mix_re(const CoinRow& c, __m256d xr, __m256d xi, __m256d yr,
                                 __m256d yi) {
  const __m256d a = _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(c.c0r), xr),
                                  _mm256_mul_pd(_mm256_set1_pd(c.c0i), xi));
  const __m256d b = _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(c.c1r), yr),
                                  _mm256_mul_pd(_mm256_set1_pd(c.c1i), yi));
  return _mm256_add_pd(a, b);
}

QWALK_AVX2 inline __m256d mix_im(const CoinRow& c, __m256d xr, __m256d xi, __m256d yr,
                                 __m256d yi) {
  const __m256d a = _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(c.c0r), xi),
                                  _mm256_mul_pd(_mm256_set1_pd(c.c0i), xr));
  const __m256d b = _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(c.c1r), yi),
                                  _mm256_mul_pd(_mm256_set1_pd(c.c1i), yr));
  return _mm256_add_pd(a, b);
}

QWALK_AVX2 void coin_shift_avx2(std::size_t n, const double* const* in, const CoinEntries& coin,
                                double* const* out) {
  const double* ar = in[0];
  const double* ai = in[1];
  const double* br = in[2];
  const double* bi = in[3];
  double* o0r = out[0];
  double* o0i = out[1];
  double* o1r = out[2];
  double* o1i = out[3];

  const CoinRow r0 = coin_row(coin, 0);
  const CoinRow r1 = coin_row(coin, 1);

  o0r[0] = o0i[0] = 0.0;
  o0r[1] = o0i[1] = 0.0;
  o1r[n] = o1i[n] = 0.0;
  o1r[n + 1] = o1i[n + 1] = 0.0;

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xr = _mm256_loadu_pd(ar + i);
    const __m256d xi = _mm256_loadu_pd(ai + i);
    const __m256d yr = _mm256_loadu_pd(br + i);
    const __m256d yi = _mm256_loadu_pd(bi + i);
    _mm256_storeu_pd(o0r + i + 2, mix_re(r0, xr, xi, yr, yi));
    _mm256_storeu_pd(o0i + i + 2, mix_im(r0, xr, xi, yr, yi));
    _mm256_storeu_pd(o1r + i, mix_re(r1, xr, xi, yr, yi));
    _mm256_storeu_pd(o1i + i, mix_im(r1, xr, xi, yr, yi));
  }
  for (; i < n; ++i) {
    const double xr = ar[i], xi = ai[i], yr = br[i], yi = bi[i];
    o0r[i + 2] = (r0.c0r * xr - r0.c0i * xi) + (r0.c1r * yr - r0.c1i * yi);
    o0i[i + 2] = (r0.c0r * xi + r0.c0i * xr) + (r0.c1r * yi + r0.c1i * yr);
    o1r[i] = (r1.c0r * xr - r1.c0i * xi) + (r1.c1r * yr - r1.c1i * yi);
    o1i[i] = (r1.c0r * xi + r1.c0i * xr) + (r1.c1r * yi + r1.c1i * yr);
  }
}

QWALK_AVX2 double sum_abs2_avx2(std::size_t n, const double* re, const double* im) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d r0 = _mm256_loadu_pd(re + i);
    const __m256d i0 = _mm256_loadu_pd(im + i);
    const __m256d r1 = _mm256_loadu_pd(re + i + 4);
    const __m256d i1 = _mm256_loadu_pd(im + i + 4);
    acc0 = _mm256_add_pd(acc0, _mm256_add_pd(_mm256_mul_pd(r0, r0), _mm256_mul_pd(i0, i0)));
    acc1 = _mm256_add_pd(acc1, _mm256_add_pd(_mm256_mul_pd(r1, r1), _mm256_mul_pd(i1, i1)));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d r0 = _mm256_loadu_pd(re + i);
    const __m256d i0 = _mm256_loadu_pd(im + i);
    acc0 = _mm256_add_pd(acc0, _mm256_add_pd(_mm256_mul_pd(r0, r0), _mm256_mul_pd(i0, i0)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) acc += re[i] * re[i] + im[i] * im[i];
  return acc;
}

QWALK_AVX2 void abs2_avx2(std::size_t n, const double* re, const double* im, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_loadu_pd(re + i);
    const __m256d m = _mm256_loadu_pd(im + i);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_mul_pd(r, r), _mm256_mul_pd(m, m)));
  }
  for (; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

QWALK_AVX2 void scale_avx2(std::size_t n, const double* re, const double* im, double s,
                           double* out_re, double* out_im) {
  const __m256d sv = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out_re + i, _mm256_mul_pd(sv, _mm256_loadu_pd(re + i)));
    _mm256_storeu_pd(out_im + i, _mm256_mul_pd(sv, _mm256_loadu_pd(im + i)));
  }
  for (; i < n; ++i) {
    out_re[i] = s * re[i];
    out_im[i] = s * im[i];
  }
}

}  // namespace

const KernelTable avx2_table{Isa::avx2, coin_shift_avx2, sum_abs2_avx2, abs2_avx2, scale_avx2};

}  // namespace qwalk::simd::detail

#endif  // QWALK_HAVE_AVX2_KERNELS
