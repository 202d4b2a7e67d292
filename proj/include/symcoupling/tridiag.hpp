#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "symcoupling/kernels.hpp"

namespace symcoupling {

/// Eigenpairs of a real symmetric tridiagonal matrix.
struct TridiagEigen {
  std::vector<double> values;  // ascending
  Eigen::MatrixXd vectors;     // column k belongs to values[k]; unit norm
  double residual = 0.0;       // max |T v - lambda v| over all entries
};

/// Symmetric tridiagonal eigensolver: every eigenvalue by bisection on
/// Sturm counts (batched across all eigenvalues per sweep), then each vector
/// by inverse iteration with a partially pivoted tridiagonal LU.
///
/// off[i] couples rows i and i+1. Eigenvalues are resolved to full working
/// precision; tol (relative to the matrix norm) is the acceptance threshold
/// for each inverse-iteration residual. Throws NumericError if a vector
/// fails to converge after a bounded number of restarts.
TridiagEigen tridiagonal_eigen(std::span<const double> diag, std::span<const double> off, double tol,
                               const kernels::KernelTable& kernels = kernels::active());

/// max |T v_k - lambda_k v_k| for column-major vectors (n x m).
double tridiagonal_residual(std::span<const double> diag, std::span<const double> off,
                            std::span<const double> lambda, const Eigen::MatrixXd& vectors,
                            const kernels::KernelTable& kernels = kernels::active());

}  // namespace symcoupling
