#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "symcoupling/quadrilateral.hpp"

namespace symcoupling {

/// K1 = J12^2 and K2 = J23^2 written in the j12 (ell) basis, K3 = [K1, K2].
/// K3 is real antisymmetric, hence anti-Hermitian.
struct GeneratorTriple {
  Quadrilateral quad;
  SpinLattice lattice;        // ell
  SpinLattice dual_lattice;   // ell~
  Eigen::MatrixXd overlap;    // overlap(t, p) = <ell~_t | ell_p>
  Eigen::MatrixXd K1, K2, K3;
};

GeneratorTriple realize(const Quadrilateral& q);

/// Eigenvalues (descending) of the volume operator taken from the
/// commutator: K3 / (16 i), the normalization in which its j12-basis
/// matrix elements are the Heron alphas. K3 / (-4i) is 4x this operator.
std::vector<double> commutator_volume_eigenvalues(const GeneratorTriple& g);

/// Closure constants of
///   [K2, K3] = A1 {K1,K2} + A2 K2^2 + C1 K1 + D K2 + G1
///   [K3, K1] = A1 K1^2 + A2 {K1,K2} + C2 K2 + D K1 + G2
/// (the Racah case R = 0), fitted by least squares over matrix entries.
struct StructureConstants {
  double A1 = 0, A2 = 0, C1 = 0, C2 = 0, D = 0, G1 = 0, G2 = 0;
  double residual = 0.0;  // max Frobenius deviation of the two relations
  double scale = 0.0;     // ||K1||_F * ||K2||_F
  int rank = 0;
  bool rank_deficient = false;
  std::string note;       // null-space remark when rank deficient
};

StructureConstants fit_structure_constants(const GeneratorTriple& g);

/// K1 <-> K2, K3 -> -K3.
GeneratorTriple duality_map(const GeneratorTriple& g);

enum class TridiagonalView { K2_in_K1_basis, K1_in_K2_basis, K3_in_K1_basis };

struct TridiagonalData {
  std::vector<double> diag;
  std::vector<double> off;  // off[p] = entry (p+1, p)
  double leakage = 0.0;     // largest entry outside the band, relative to the largest entry
  double pattern_deviation = 0.0;  // K3 view: |K3 - (chi_{p+1}-chi_p) a_{p+1} pattern|, relative
};

/// Extracts the three-term data; throws StructuralError when the relative
/// off-band leakage exceeds 1e-12.
TridiagonalData tridiagonal_data(const GeneratorTriple& g, TridiagonalView which);

}  // namespace symcoupling
