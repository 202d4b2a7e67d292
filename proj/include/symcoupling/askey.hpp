#pragma once

#include <string>
#include <vector>

#include "symcoupling/angmom.hpp"
#include "symcoupling/exact.hpp"
#include "symcoupling/quadrilateral.hpp"

namespace symcoupling {

enum class PolyFamily { racah, hahn, dual_hahn };

/// Parameters of a finite hypergeometric family (Koekoek-Swarttouw conventions):
///   Racah     R_n(lambda(x); alpha, beta, gamma, delta), lambda(x) = x(x+gamma+delta+1),
///             4F3(-n, n+alpha+beta+1, -x, x+gamma+delta+1; alpha+1, beta+delta+1, gamma+1; 1),
///             with alpha+1, beta+delta+1 or gamma+1 equal to -N.
///   Hahn      Q_n(x; alpha, beta, N) = 3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1), linear lattice.
///   DualHahn  R_n(lambda(x); gamma, delta, N) = 3F2(-n, -x, x+gamma+delta+1; gamma+1, -N; 1).
struct HypergeomParams {
  PolyFamily family = PolyFamily::racah;
  double alpha = 0, beta = 0, gamma = 0, delta = 0;
  int N = 0;

  static HypergeomParams racah(double alpha, double beta, double gamma, double delta, int N);
  static HypergeomParams hahn(double alpha, double beta, int N);
  static HypergeomParams dual_hahn(double gamma, double delta, int N);

  /// Lattice value at x: lambda(x) for the quadratic lattices, x for Hahn.
  double lattice(int x) const;
  std::string str() const;
};

/// p_n at lattice point x in {0..N}; terminating sum in extended precision
/// with compensated summation. Throws DomainError on inadmissible input.
double eval_poly(const HypergeomParams& p, int n, int x);

/// Orthogonality weight w(x), x in {0..N} (unnormalized).
double weight(const HypergeomParams& p, int x);

/// Three-term recurrence in the variable, written uniformly as
///   t(x) p_n(x) = A_n p_{n+1}(x) - (A_n + C_n) p_n(x) + C_n p_{n-1}(x),
/// with t(x) = lambda(x) (Racah), -x (Hahn), lambda(x) (dual Hahn).
struct Recurrence {
  double A = 0, C = 0;
};
Recurrence recurrence(const HypergeomParams& p, int n);

/// max over n, m <= N of |sum_x w p_n p_m| / sum_x |w p_n p_m| for n != m.
double orthogonality_defect(const HypergeomParams& p);
/// max over interior n and all x of the recurrence residual, relative.
double recurrence_defect(const HypergeomParams& p);

/// A 6j written as proportionality * R_n(lambda(x); ...).
struct RacahForm {
  bool admissible = false;
  HypergeomParams params;
  int n = 0, x = 0;
  ExactRadical proportionality;
  double polynomial = 0.0;
  double value = 0.0;  // proportionality * polynomial
};

/// Racah-sum dictionary. With t1 the smallest column sum, the Racah single
/// sum read downward from t1 is a 4F3 at unit argument; its parameters map
/// onto R_n with n = t1 - (largest triad sum), x = t1 - (next triad sum),
/// N = t1 + 1.
RacahForm racah_from_6j(const SixJArgs& args);

/// Convergence record of a limit scan.
struct ScalePoint {
  int scale = 0;
  double J = 0.0;  // size of the growing entries at this scale
  double error = 0.0;
  bool skipped = false;
  std::string note;
};

struct ConvergenceReport {
  std::string kind;  // "IIA", "IIIB", "threej"
  std::string base;
  std::vector<ScalePoint> points;
  double decay_exponent = 0.0;   // least-squares slope of -log(error) vs log(scale)
  double final_ratio = 0.0;      // error(last) / error(second to last)
  bool monotone = false;         // non-increasing from the second kept scale on
  double target_residual = 0.0;  // three-term recursion residual of the limit object
  std::string normalization;

  bool converged(double ratio_bound = 0.75) const { return monotone && final_ratio < ratio_bound; }
};

/// Curly generalized symbol {j1 j2 . / J3 J4 .}: the volume problem of the
/// quadrilateral (j1, j2, J3, J4) with J3, J4 allowed to grow.
struct GeneralizedSymbol {
  HalfInt j1, j2, J3, J4;

  Quadrilateral quad() const { return {j1, j2, J3, J4}; }
  std::string str() const;
};

/// J3 -> J3 + (s-1) B, J4 -> J4 + (s-1) B with B = max(1, ceil(max(J3, J4))),
/// so m = J3 - J4 stays fixed.
GeneralizedSymbol scaled(const GeneralizedSymbol& base, int scale);

/// Volume eigenvectors in the j12 basis (family IIA) against the eigenvectors
/// of the limiting dual-Hahn-type recursion on ell in [max(|j1-j2|, |m|), j1+j2].
ConvergenceReport limit_scan_IIA(const GeneralizedSymbol& base, const std::vector<int>& scales);

/// Volume eigenvectors in the j23 basis (family IIIB) against the limiting
/// Hahn-type recursion on the linear lattice x = ell~ - J4.
ConvergenceReport limit_scan_IIIB(const GeneralizedSymbol& base, const std::vector<int>& scales);

/// sqrt(2R+1) {a b c / d e f} against (-1)^(d+e+f) (a b c / f-e, d-f, e-d)
/// with d, e, f shifted by (s-1) B and R their mean.
ConvergenceReport threej_limit_of_6j(const SixJArgs& args, const std::vector<int>& scales);

}  // namespace symcoupling
