// AArch64 only; Advanced SIMD is architecturally guaranteed there.
#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace symcoupling::kernels {

namespace {

void sturm_counts_neon(std::span<const double> diag, std::span<const double> offsq, double pivmin,
                       std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  const std::size_t ns = shifts.size();
  const float64x2_t vpiv = vdupq_n_f64(pivmin);
  const float64x2_t vnegpiv = vdupq_n_f64(-pivmin);
  const float64x2_t zero = vdupq_n_f64(0.0);

  std::size_t s = 0;
  for (; s + 2 <= ns; s += 2) {
    const float64x2_t x = vld1q_f64(shifts.data() + s);
    int64x2_t count = vdupq_n_s64(0);

    float64x2_t d = vsubq_f64(vdupq_n_f64(diag[0]), x);
    d = vbslq_f64(vcltq_f64(vabsq_f64(d), vpiv), vnegpiv, d);
    count = vsubq_s64(count, vreinterpretq_s64_u64(vcltq_f64(d, zero)));
    for (std::size_t i = 1; i < n; ++i) {
      const float64x2_t shifted = vsubq_f64(vdupq_n_f64(diag[i]), x);
      d = vsubq_f64(shifted, vdivq_f64(vdupq_n_f64(offsq[i - 1]), d));
      d = vbslq_f64(vcltq_f64(vabsq_f64(d), vpiv), vnegpiv, d);
      count = vsubq_s64(count, vreinterpretq_s64_u64(vcltq_f64(d, zero)));
    }
    counts[s] = static_cast<int>(vgetq_lane_s64(count, 0));
    counts[s + 1] = static_cast<int>(vgetq_lane_s64(count, 1));
  }
  if (s < ns) scalar_kernels().sturm_counts(diag, offsq, pivmin, shifts.subspan(s), counts.subspan(s));
}

void tridiag_residual_neon(std::span<const double> diag, std::span<const double> lower,
                           std::span<const double> upper, std::span<const double> lambda,
                           std::span<const double> vectors, std::span<double> out) {
  const std::size_t n = diag.size();
  const std::size_t m = lambda.size();
  for (std::size_t p = 0; p < n; ++p) {
    const double* row = vectors.data() + p * m;
    const double* prev = p > 0 ? row - m : nullptr;
    const double* next = p + 1 < n ? row + m : nullptr;
    const float64x2_t vd = vdupq_n_f64(diag[p]);
    const float64x2_t vlo = vdupq_n_f64(p > 0 ? lower[p] : 0.0);
    const float64x2_t vup = vdupq_n_f64(p + 1 < n ? upper[p] : 0.0);
    std::size_t k = 0;
    for (; k + 2 <= m; k += 2) {
      const float64x2_t v = vld1q_f64(row + k);
      const float64x2_t lam = vld1q_f64(lambda.data() + k);
      // vmulq/vsubq rather than vfmsq: rounding must match the scalar path.
      float64x2_t acc = vsubq_f64(vmulq_f64(vd, v), vmulq_f64(lam, v));
      if (prev) acc = vaddq_f64(acc, vmulq_f64(vlo, vld1q_f64(prev + k)));
      if (next) acc = vaddq_f64(acc, vmulq_f64(vup, vld1q_f64(next + k)));
      vst1q_f64(out.data() + p * m + k, acc);
    }
    for (; k < m; ++k) {
      double acc = diag[p] * row[k] - lambda[k] * row[k];
      if (prev) acc = acc + lower[p] * prev[k];
      if (next) acc = acc + upper[p] * next[k];
      out[p * m + k] = acc;
    }
  }
}

}  // namespace

namespace detail {
const KernelTable& neon_table() {
  static const KernelTable table{Isa::neon, "neon", &sturm_counts_neon, &tridiag_residual_neon};
  return table;
}
}  // namespace detail

}  // namespace symcoupling::kernels
