// Built with -mavx2 only; dispatch guarantees the CPU supports it.
#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace symcoupling::kernels {

namespace {

void sturm_counts_avx2(std::span<const double> diag, std::span<const double> offsq, double pivmin,
                       std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  const std::size_t ns = shifts.size();
  const __m256d vpiv = _mm256_set1_pd(pivmin);
  const __m256d vnegpiv = _mm256_set1_pd(-pivmin);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

  std::size_t s = 0;
  for (; s + 4 <= ns; s += 4) {
    const __m256d x = _mm256_loadu_pd(shifts.data() + s);
    __m256i count = _mm256_setzero_si256();

    __m256d d = _mm256_sub_pd(_mm256_set1_pd(diag[0]), x);
    __m256d tiny = _mm256_cmp_pd(_mm256_and_pd(d, absmask), vpiv, _CMP_LT_OQ);
    d = _mm256_blendv_pd(d, vnegpiv, tiny);
    // A true compare lane is all ones, i.e. -1 as an integer.
    count = _mm256_sub_epi64(count, _mm256_castpd_si256(_mm256_cmp_pd(d, zero, _CMP_LT_OQ)));

    for (std::size_t i = 1; i < n; ++i) {
      const __m256d shifted = _mm256_sub_pd(_mm256_set1_pd(diag[i]), x);
      d = _mm256_sub_pd(shifted, _mm256_div_pd(_mm256_set1_pd(offsq[i - 1]), d));
      tiny = _mm256_cmp_pd(_mm256_and_pd(d, absmask), vpiv, _CMP_LT_OQ);
      d = _mm256_blendv_pd(d, vnegpiv, tiny);
      count = _mm256_sub_epi64(count, _mm256_castpd_si256(_mm256_cmp_pd(d, zero, _CMP_LT_OQ)));
    }
    alignas(32) long long lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), count);
    for (int l = 0; l < 4; ++l) counts[s + static_cast<std::size_t>(l)] = static_cast<int>(lanes[l]);
  }
  if (s < ns) scalar_kernels().sturm_counts(diag, offsq, pivmin, shifts.subspan(s), counts.subspan(s));
}

void tridiag_residual_avx2(std::span<const double> diag, std::span<const double> lower,
                           std::span<const double> upper, std::span<const double> lambda,
                           std::span<const double> vectors, std::span<double> out) {
  const std::size_t n = diag.size();
  const std::size_t m = lambda.size();
  for (std::size_t p = 0; p < n; ++p) {
    const double* row = vectors.data() + p * m;
    const double* prev = p > 0 ? row - m : nullptr;
    const double* next = p + 1 < n ? row + m : nullptr;
    const __m256d vd = _mm256_set1_pd(diag[p]);
    const __m256d vlo = _mm256_set1_pd(p > 0 ? lower[p] : 0.0);
    const __m256d vup = _mm256_set1_pd(p + 1 < n ? upper[p] : 0.0);
    std::size_t k = 0;
    for (; k + 4 <= m; k += 4) {
      const __m256d v = _mm256_loadu_pd(row + k);
      const __m256d lam = _mm256_loadu_pd(lambda.data() + k);
      __m256d acc = _mm256_sub_pd(_mm256_mul_pd(vd, v), _mm256_mul_pd(lam, v));
      if (prev) acc = _mm256_add_pd(acc, _mm256_mul_pd(vlo, _mm256_loadu_pd(prev + k)));
      if (next) acc = _mm256_add_pd(acc, _mm256_mul_pd(vup, _mm256_loadu_pd(next + k)));
      _mm256_storeu_pd(out.data() + p * m + k, acc);
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
const KernelTable& avx2_table() {
  static const KernelTable table{Isa::avx2, "avx2", &sturm_counts_avx2, &tridiag_residual_avx2};
  return table;
}
}  // namespace detail

}  // namespace symcoupling::kernels
