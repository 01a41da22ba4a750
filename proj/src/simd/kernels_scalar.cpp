#include "kernels_internal.hpp"

namespace qwalk::simd::detail {
namespace {

void coin_shift_scalar(std::size_t n, const double* const* in, const CoinEntries& coin,
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

  for (std::size_t i = 0; i < n; ++i) {
    const double xr = ar[i], xi = ai[i], yr = br[i], yi = bi[i];
    o0r[i + 2] = (r0.c0r * xr - r0.c0i * xi) + (r0.c1r * yr - r0.c1i * yi);
    o0i[i + 2] = (r0.c0r * xi + r0.c0i * xr) + (r0.c1r * yi + r0.c1i * yr);
    o1r[i] = (r1.c0r * xr - r1.c0i * xi) + (r1.c1r * yr - r1.c1i * yi);
    o1i[i] = (r1.c0r * xi + r1.c0i * xr) + (r1.c1r * yi + r1.c1i * yr);
  }
}

double sum_abs2_scalar(std::size_t n, const double* re, const double* im) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += re[i] * re[i] + im[i] * im[i];
  return acc;
}

void abs2_scalar(std::size_t n, const double* re, const double* im, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

void scale_scalar(std::size_t n, const double* re, const double* im, double s, double* out_re,
                  double* out_im) {
  for (std::size_t i = 0; i < n; ++i) {
    out_re[i] = s * re[i];
    out_im[i] = s * im[i];
  }
}

}  // namespace

const KernelTable scalar_table{Isa::scalar, coin_shift_scalar, sum_abs2_scalar, abs2_scalar,
                               scale_scalar};

}  // namespace qwalk::simd::detail
