#pragma once

#include <span>
#include <string_view>

namespace symcoupling::kernels {

// Data-parallel inner loops of the tridiagonal eigensolver. Every variant
// performs the same IEEE operations in the same order (no FMA), so results
// are bitwise identical across instruction sets.

/// counts[i] = number of eigenvalues of the symmetric tridiagonal matrix
/// (diag, off) strictly below shifts[i]. offsq holds off[i]^2, i.e. the
/// squared coupling between rows i and i+1; pivmin guards zero pivots.
using SturmCountsFn = void (*)(std::span<const double> diag, std::span<const double> offsq, double pivmin,
                               std::span<const double> shifts, std::span<int> counts);

/// Column-batched residual of a symmetric tridiagonal eigenproblem.
/// vectors is n x m row-major (row = lattice site, column = eigenpair);
/// out[p][k] = lower[p]*v[p-1][k] + diag[p]*v[p][k] + upper[p]*v[p+1][k] - lambda[k]*v[p][k],
/// with lower[0] and upper[n-1] ignored.
using TridiagResidualFn = void (*)(std::span<const double> diag, std::span<const double> lower,
                                   std::span<const double> upper, std::span<const double> lambda,
                                   std::span<const double> vectors, std::span<double> out);

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  std::string_view name;
  SturmCountsFn sturm_counts;
  TridiagResidualFn tridiag_residual;
};

const KernelTable& scalar_kernels();
/// nullptr when not compiled in or not supported by the running CPU.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best supported table; SYMCOUPLING_SIMD=scalar|avx2|neon overrides.
const KernelTable& active();

}  // namespace symcoupling::kernels
