#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string_view>
#include <vector>

#include "symcoupling/exact.hpp"
#include "symcoupling/quadrilateral.hpp"

namespace symcoupling {

/// Area of the triangle with sides x, y, z (Heron). Zero for a collinear
/// triangle; throws DomainError when the sides violate the triangle inequality.
ExactRadical heron_area(HalfInt x, HalfInt y, HalfInt z);

/// Off-diagonal element coupling ell to ell-1 in the j12 basis:
/// F(ell; a+1/2, b+1/2) F(ell; c+1/2, d+1/2) / sqrt((2 ell+1)(2 ell-1)).
/// Requires lo < ell <= hi on the ell lattice of q.
ExactRadical alpha(HalfInt ell, const Quadrilateral& q);

/// How the Hermitian volume operator is written in the ell basis.
///   antisym: (p, p-1) = -i alpha_p, (p-1, p) = +i alpha_p (the operator itself).
///   sym:     (p, p-1) = (p-1, p) = -alpha_p, i.e. D antisym D^dagger with
///            D = diag((-i)^p).
/// Both share one spectrum; eigenvector components differ by basis_phase().
enum class Representation { sym, antisym };

std::string_view to_string(Representation r);
Representation parse_representation(std::string_view s);

/// Psi_p = basis_phase(rep, p) * v_p, where v is the eigenvector of the real
/// matrix with off-diagonals +alpha.
std::complex<double> basis_phase(Representation rep, int p);

struct VolumeMatrix {
  Quadrilateral quad;
  SpinLattice lattice;
  std::vector<ExactRadical> alpha_exact;  // alpha_exact[p-1] couples lattice[p] to lattice[p-1]
  std::vector<double> alpha;
  Representation rep = Representation::sym;

  int dimension() const { return lattice.size(); }
  double max_alpha() const;
  /// The matrix in the chosen representation.
  Eigen::MatrixXcd dense() const;
};

VolumeMatrix build_matrix(const Quadrilateral& q, Representation rep = Representation::sym);

struct VolumeSpectrum {
  Quadrilateral quad;
  SpinLattice lattice;
  Representation rep = Representation::sym;
  std::vector<double> alpha;
  std::vector<double> eigenvalues;  // descending, k = 0..n-1
  Eigen::MatrixXd real_vectors;     // eigenvectors of the +alpha real form, v_0 > 0
  Eigen::MatrixXcd psi;             // Psi(p, k) in the chosen representation
  double residual = 0.0;            // max_k,p |lambda_k v_p - (M v)_p|
};

/// All eigenpairs; tol is relative to the largest alpha.
VolumeSpectrum spectrum(const VolumeMatrix& m, double tol = 1e-12);

}  // namespace symcoupling
