#pragma once

// Runtime-dispatched kernels for the data-parallel inner loops of the walk:
// the fused coin/shift update and the squared-magnitude reductions.
//
// Every kernel has a portable scalar reference. Vector variants (AVX2 on
// x86-64, NEON on AArch64) evaluate the same expressions in the same order
// per element, so element-wise kernels are bit-identical to the reference;
// reductions differ only in summation order.

#include <array>
#include <cstddef>
#include <string_view>

namespace qwalk::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

// Coin entries in row-major order, each as (re, im):
// {c00.re, c00.im, c01.re, c01.im, c10.re, c10.im, c11.re, c11.im}.
using CoinEntries = std::array<double, 8>;

struct KernelTable {
  Isa isa;

  // Input lanes (re0, im0, re1, im1) of length n hold the coin-0 and coin-1
  // amplitudes over a window starting at position p. Output lanes of length
  // n + 2 cover the window starting at p - 1:
  //   out0[i + 2] = c00 * a0[i] + c01 * a1[i]   (coin 0 moves right)
  //   out1[i]     = c10 * a0[i] + c11 * a1[i]   (coin 1 moves left)
  // Entries of the output not written by the formula are set to zero.
  void (*coin_shift)(std::size_t n, const double* const* in, const CoinEntries& coin,
                     double* const* out);

  // sum_i re[i]^2 + im[i]^2
  double (*sum_abs2)(std::size_t n, const double* re, const double* im);

  // out[i] = re[i]^2 + im[i]^2
  void (*abs2)(std::size_t n, const double* re, const double* im, double* out);

  // out_re[i] = s * re[i], out_im[i] = s * im[i]
  void (*scale)(std::size_t n, const double* re, const double* im, double s, double* out_re,
                double* out_im);
};

bool isa_supported(Isa isa);

// Table for a specific ISA, or nullptr when it is not compiled in or the
// running CPU lacks it.
const KernelTable* kernels_for(Isa isa);

// Best table for the running CPU, unless an override is in effect.
const KernelTable& kernels();

Isa active_isa();

// Pins dispatch to `isa`. Throws std::invalid_argument if unsupported.
void force_isa(Isa isa);

// Returns to automatic selection.
void reset_isa();

}  // namespace qwalk::simd
