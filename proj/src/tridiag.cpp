#include "symcoupling/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "symcoupling/errors.hpp"

namespace symcoupling {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxRestarts = 5;
constexpr int kInverseSteps = 3;

// Solves (T - shift) x = b in place with partial pivoting (the dgtsv scheme).
// A vanishing pivot is replaced by a tiny one: inverse iteration wants the
// huge, eigenvector-dominated solution that a near-singular system produces.
void shifted_solve(std::span<const double> diag, std::span<const double> off, double shift, double tiny,
                   std::vector<double>& x) {
  const std::size_t n = diag.size();
  std::vector<double> d(n), du(n, 0.0), du2(n, 0.0), dl(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    du[i] = off[i];
    dl[i] = off[i];
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::fabs(d[i]) >= std::fabs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double f = dl[i] / d[i];
      d[i + 1] -= f * du[i];
      x[i + 1] -= f * x[i];
      dl[i] = 0.0;
    } else {
      const double f = d[i] / dl[i];
      d[i] = dl[i];
      double tmp = d[i + 1];
      d[i + 1] = du[i] - f * tmp;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du2[i];
      }
      du[i] = tmp;
      tmp = x[i];
      x[i] = x[i + 1];
      x[i + 1] = tmp - f * x[i + 1];
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;
  x[n - 1] /= d[n - 1];
  if (n > 1) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
  if (n > 2)
    for (std::size_t k = n - 2; k-- > 0;) x[k] = (x[k] - du[k] * x[k + 1] - du2[k] * x[k + 2]) / d[k];
}

double normalize(std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  s = std::sqrt(s);
  if (s > 0.0)
    for (double& v : x) v /= s;
  return s;
}

double column_residual(std::span<const double> diag, std::span<const double> off, double lambda,
                       const std::vector<double>& x) {
  const std::size_t n = diag.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = diag[i] * x[i] - lambda * x[i];
    if (i > 0) r += off[i - 1] * x[i - 1];
    if (i + 1 < n) r += off[i] * x[i + 1];
    worst = std::max(worst, std::fabs(r));
  }
  return worst;
}

}  // namespace

TridiagEigen tridiagonal_eigen(std::span<const double> diag, std::span<const double> off, double tol,
                               const kernels::KernelTable& kernels) {
  const std::size_t n = diag.size();
  if (n == 0) throw DomainError("tridiagonal_eigen: empty matrix");
  if (off.size() + 1 != n) throw DomainError("tridiagonal_eigen: off-diagonal length must be n-1");
  if (!(tol > 0.0)) throw DomainError("tridiagonal_eigen: tolerance must be positive");

  TridiagEigen out;
  out.values.assign(n, 0.0);
  out.vectors = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

  // Gershgorin interval and scale.
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, norm = 0.0;
  std::vector<double> offsq(n > 1 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::fabs(off[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
    norm = std::max(norm, std::fabs(diag[i]) + r);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) offsq[i] = off[i] * off[i];
  if (norm == 0.0) {
    out.vectors.setIdentity();
    return out;
  }
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, norm * norm);
  lo -= 2.0 * kEps * norm + pivmin;
  hi += 2.0 * kEps * norm + pivmin;

  // Bisection for all eigenvalues at once; one Sturm batch per sweep.
  std::vector<double> left(n, lo), right(n, hi), mids(n);
  std::vector<int> counts(n);
  for (int sweep = 0; sweep < 200; ++sweep) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      mids[i] = 0.5 * (left[i] + right[i]);
      const double width = right[i] - left[i];
      if (width > 2.0 * kEps * std::max(std::fabs(left[i]), std::fabs(right[i])) + pivmin && mids[i] != left[i] &&
          mids[i] != right[i])
        done = false;
    }
    if (done) break;
    kernels.sturm_counts(diag, offsq, pivmin, mids, counts);
    for (std::size_t i = 0; i < n; ++i) {
      if (counts[i] > static_cast<int>(i))
        right[i] = mids[i];
      else
        left[i] = mids[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.values[i] = 0.5 * (left[i] + right[i]);

  // Inverse iteration; eigenvalues of an unreduced tridiagonal are simple but
  // may cluster, so vectors in a cluster are re-orthogonalized.
  const double tiny = kEps * norm;
  const double cluster_gap = 1e-3 * norm;
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = out.values[k];
    bool converged = false;
    double res = 0.0;
    for (int attempt = 0; attempt <= kMaxRestarts && !converged; ++attempt) {
      for (std::size_t i = 0; i < n; ++i) {
        // Deterministic start vectors that differ per attempt.
        x[i] = 1.0 + 0.5 * std::sin(static_cast<double>((i + 1) * (attempt + 2) * 7 + k));
      }
      normalize(x);
      for (int step = 0; step < kInverseSteps + attempt; ++step) {
        shifted_solve(diag, off, lambda, tiny, x);
        for (std::size_t j = 0; j < k; ++j) {
          if (std::fabs(out.values[j] - lambda) > cluster_gap) continue;
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += out.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * x[i];
          for (std::size_t i = 0; i < n; ++i) x[i] -= dot * out.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
        if (normalize(x) == 0.0 || !std::isfinite(x[0])) break;
      }
      res = column_residual(diag, off, lambda, x);
      converged = std::isfinite(res) && res <= tol * norm;
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "inverse iteration did not converge for eigenvalue " << k << " (lambda=" << lambda
          << ", residual=" << res << ", norm=" << norm << ", n=" << n << ")";
      throw NumericError(msg.str());
    }
    for (std::size_t i = 0; i < n; ++i) out.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = x[i];
  }
  out.residual = tridiagonal_residual(diag, off, out.values, out.vectors, kernels);
  return out;
}

double tridiagonal_residual(std::span<const double> diag, std::span<const double> off,
                            std::span<const double> lambda, const Eigen::MatrixXd& vectors,
                            const kernels::KernelTable& kernels) {
  const std::size_t n = diag.size();
  const std::size_t m = lambda.size();
  // The kernel wants rows = sites, columns = eigenpairs, row-major.
  std::vector<double> rows(n * m), res(n * m), lower(n, 0.0), upper(n, 0.0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t k = 0; k < m; ++k) rows[p * m + k] = vectors(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(k));
    if (p > 0) lower[p] = off[p - 1];
    if (p + 1 < n) upper[p] = off[p];
  }
  kernels.tridiag_residual(diag, lower, upper, lambda, rows, res);
  double worst = 0.0;
  for (double r : res) worst = std::max(worst, std::fabs(r));
  return worst;
}

}  // namespace symcoupling
