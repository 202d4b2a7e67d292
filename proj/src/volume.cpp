#include "symcoupling/volume.hpp"

#include <algorithm>
#include <cmath>

#include "symcoupling/errors.hpp"
#include "symcoupling/tridiag.hpp"

namespace symcoupling {

ExactRadical heron_area(HalfInt x, HalfInt y, HalfInt z) {
  // 16 F^2 = (x+y+z)(-x+y+z)(x-y+z)(x+y-z); in twice-units each factor doubles.
  const long f1 = x.twice() + y.twice() + z.twice();
  const long f2 = -x.twice() + y.twice() + z.twice();
  const long f3 = x.twice() - y.twice() + z.twice();
  const long f4 = x.twice() + y.twice() - z.twice();
  if (f1 < 0 || f2 < 0 || f3 < 0 || f4 < 0)
    throw DomainError("heron_area: sides " + x.str() + ", " + y.str() + ", " + z.str() + " do not form a triangle");
  BigInt prod = BigInt(f1) * f2 * f3 * f4;
  if (prod == 0) return ExactRadical::zero();
  return ExactRadical::sqrt_of(BigRational(prod, 256));
}

ExactRadical alpha(HalfInt ell, const Quadrilateral& q) {
  q.require_valid();
  const SpinLattice lat = q.ell_lattice();
  if (!lat.contains(ell) || ell == lat.lo)
    throw DomainError("alpha: ell=" + ell.str() + " outside (" + lat.lo.str() + ", " + lat.hi.str() + "] for " +
                      q.str());
  const HalfInt half = HalfInt::from_twice(1);
  const ExactRadical f1 = heron_area(ell, q.a + half, q.b + half);
  const ExactRadical f2 = heron_area(ell, q.c + half, q.d + half);
  const long t = ell.twice();
  return f1 * f2 / ExactRadical::sqrt_of(BigRational(BigInt((t + 1) * (t - 1))));
}

std::string_view to_string(Representation r) { return r == Representation::sym ? "sym" : "antisym"; }

Representation parse_representation(std::string_view s) {
  if (s == "sym") return Representation::sym;
  if (s == "antisym") return Representation::antisym;
  throw DomainError("unknown representation '" + std::string(s) + "' (expected sym or antisym)");
}

std::complex<double> basis_phase(Representation rep, int p) {
  if (rep == Representation::sym) return (p % 2 == 0) ? 1.0 : -1.0;
  static const std::complex<double> cycle[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};  // (-i)^p
  return cycle[p % 4];
}

double VolumeMatrix::max_alpha() const {
  double m = 0.0;
  for (double a : alpha) m = std::max(m, a);
  return m;
}

Eigen::MatrixXcd VolumeMatrix::dense() const {
  const int n = dimension();
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
  const std::complex<double> i(0.0, 1.0);
  for (int p = 1; p < n; ++p) {
    const double a = alpha[static_cast<std::size_t>(p - 1)];
    if (rep == Representation::sym) {
      k(p, p - 1) = -a;
      k(p - 1, p) = -a;
    } else {
      k(p, p - 1) = -i * a;
      k(p - 1, p) = i * a;
    }
  }
  return k;
}

VolumeMatrix build_matrix(const Quadrilateral& q, Representation rep) {
  q.require_valid();
  VolumeMatrix m;
  m.quad = q;
  m.lattice = q.ell_lattice();
  m.rep = rep;
  for (int p = 1; p < m.lattice.size(); ++p) {
    m.alpha_exact.push_back(alpha(m.lattice.at(p), q));
    m.alpha.push_back(m.alpha_exact.back().to_double());
  }
  return m;
}

VolumeSpectrum spectrum(const VolumeMatrix& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("spectrum: tolerance must be positive");
  const int n = m.dimension();
  VolumeSpectrum s;
  s.quad = m.quad;
  s.lattice = m.lattice;
  s.rep = m.rep;
  s.alpha = m.alpha;

  const std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
  TridiagEigen eig = tridiagonal_eigen(diag, m.alpha, tol);

  s.eigenvalues.assign(eig.values.rbegin(), eig.values.rend());
  s.real_vectors = eig.vectors.rowwise().reverse();

  const double scale = std::max(m.max_alpha(), 1e-300);
  if (n % 2 == 1) {
    double& zero_mode = s.eigenvalues[static_cast<std::size_t>(n / 2)];
    if (std::fabs(zero_mode) >= tol * scale)
      throw NumericError("spectrum: odd dimension without a zero mode (lambda=" + std::to_string(zero_mode) + ")");
    zero_mode = 0.0;
  }

  for (int k = 0; k < n; ++k) {
    auto col = s.real_vectors.col(k);
    for (int p = 0; p < n; ++p) {
      if (std::fabs(col(p)) > 1e3 * std::numeric_limits<double>::epsilon()) {
        if (col(p) < 0.0) col = -col;
        break;
      }
    }
  }

  s.psi.resize(n, n);
  for (int p = 0; p < n; ++p) {
    const std::complex<double> ph = basis_phase(m.rep, p);
    for (int k = 0; k < n; ++k) s.psi(p, k) = ph * s.real_vectors(p, k);
  }
  s.residual = tridiagonal_residual(diag, m.alpha, s.eigenvalues, s.real_vectors);
  return s;
}

}  // namespace symcoupling
