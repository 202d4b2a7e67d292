#include <cmath>

#include "kernels_impl.hpp"

namespace symcoupling::kernels {

namespace {

void sturm_counts_scalar(std::span<const double> diag, std::span<const double> offsq, double pivmin,
                         std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  for (std::size_t s = 0; s < shifts.size(); ++s) {
    const double x = shifts[s];
    int count = 0;
    double d = diag[0] - x;
    if (std::fabs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
      d = (diag[i] - x) - offsq[i - 1] / d;
      if (std::fabs(d) < pivmin) d = -pivmin;
      if (d < 0.0) ++count;
    }
    counts[s] = count;
  }
}

void tridiag_residual_scalar(std::span<const double> diag, std::span<const double> lower,
                             std::span<const double> upper, std::span<const double> lambda,
                             std::span<const double> vectors, std::span<double> out) {
  const std::size_t n = diag.size();
  const std::size_t m = lambda.size();
  for (std::size_t p = 0; p < n; ++p) {
    const double* row = vectors.data() + p * m;
    const double* prev = p > 0 ? row - m : nullptr;
    const double* next = p + 1 < n ? row + m : nullptr;
    for (std::size_t k = 0; k < m; ++k) {
      double acc = diag[p] * row[k] - lambda[k] * row[k];
      if (prev) acc = acc + lower[p] * prev[k];
      if (next) acc = acc + upper[p] * next[k];
      out[p * m + k] = acc;
    }
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, "scalar", &sturm_counts_scalar, &tridiag_residual_scalar};
  return table;
}

}  // namespace symcoupling::kernels
