#include "kernels_internal.hpp"

#if defined(QWALK_HAVE_NEON_KERNELS)

#include <arm_neon.h>

namespace qwalk::simd::detail {
namespace {

// vmulq/vsubq/vaddq only; vfmaq would round differently from the reference.
inline float64x2_t mix_re(const CoinRow& c, float64x2_t xr, float64x2_t xi, float64x2_t yr,
                          float64x2_t yi) {
  const float64x2_t a = vsubq_f64(vmulq_n_f64(xr, c.c0r), vmulq_n_f64(xi, c.c0i));
  const float64x2_t b = vsubq_f64(vmulq_n_f64(yr, c.c1r), vmulq_n_f64(yi, c.c1i));
  return vaddq_f64(a, b);
}

inline float64x2_t mix_im(const CoinRow& c, float64x2_t xr, float64x2_t xi, float64x2_t yr,
                          float64x2_t yi) {
  const float64x2_t a = vaddq_f64(vmulq_n_f64(xi, c.c0r), vmulq_n_f64(xr, c.c0i));
  const float64x2_t b = vaddq_f64(vmulq_n_f64(yi, c.c1r), vmulq_n_f64(yr, c.c1i));
  return vaddq_f64(a, b);
}

void coin_shift_neon(std::size_t n, const double* const* in, const CoinEntries& coin,
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
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xr = vld1q_f64(ar + i);
    const float64x2_t xi = vld1q_f64(ai + i);
    const float64x2_t yr = vld1q_f64(br + i);
    const float64x2_t yi = vld1q_f64(bi + i);
    vst1q_f64(o0r + i + 2, mix_re(r0, xr, xi, yr, yi));
    vst1q_f64(o0i + i + 2, mix_im(r0, xr, xi, yr, yi));
    vst1q_f64(o1r + i, mix_re(r1, xr, xi, yr, yi));
    vst1q_f64(o1i + i, mix_im(r1, xr, xi, yr, yi));
  }
  for (; i < n; ++i) {
    const double xr = ar[i], xi = ai[i], yr = br[i], yi = bi[i];
    o0r[i + 2] = (r0.c0r * xr - r0.c0i * xi) + (r0.c1r * yr - r0.c1i * yi);
    o0i[i + 2] = (r0.c0r * xi + r0.c0i * xr) + (r0.c1r * yi + r0.c1i * yr);
    o1r[i] = (r1.c0r * xr - r1.c0i * xi) + (r1.c1r * yr - r1.c1i * yi);
    o1i[i] = (r1.c0r * xi + r1.c0i * xr) + (r1.c1r * yi + r1.c1i * yr);
  }
}

double sum_abs2_neon(std::size_t n, const double* re, const double* im) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t r = vld1q_f64(re + i);
    const float64x2_t m = vld1q_f64(im + i);
    acc = vaddq_f64(acc, vaddq_f64(vmulq_f64(r, r), vmulq_f64(m, m)));
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) total += re[i] * re[i] + im[i] * im[i];
  return total;
}

void abs2_neon(std::size_t n, const double* re, const double* im, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t r = vld1q_f64(re + i);
    const float64x2_t m = vld1q_f64(im + i);
    vst1q_f64(out + i, vaddq_f64(vmulq_f64(r, r), vmulq_f64(m, m)));
  }
  for (; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

void scale_neon(std::size_t n, const double* re, const double* im, double s, double* out_re,
                double* out_im) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out_re + i, vmulq_n_f64(vld1q_f64(re + i), s));
    vst1q_f64(out_im + i, vmulq_n_f64(vld1q_f64(im + i), s));
  }
  for (; i < n; ++i) {
    out_re[i] = s * re[i];
    out_im[i] = s * im[i];
  }
}

}  // namespace

const KernelTable neon_table{Isa::neon, coin_shift_neon, sum_abs2_neon, abs2_neon, scale_neon};

}  // namespace qwalk::simd::detail

#endif  // QWALK_HAVE_NEON_KERNELS
