#pragma once

#include <Eigen/Dense>

#include <vector>

#include "symcoupling/angmom.hpp"
#include "symcoupling/exact.hpp"
#include "symcoupling/half_int.hpp"
#include "symcoupling/quadrilateral.hpp"

// Reference implementations that share no formula with the library: angular
// momentum algebra is done by brute force on explicit states.
namespace oracle {

using symcoupling::ExactRadical;
using symcoupling::HalfInt;

/// <j1 m1 j2 m2 | J M> from the highest-weight state |J J> (fixed by J+ = 0
/// and the Condon-Shortley sign) and repeated application of J-.
ExactRadical clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// (j1 j2 j3 / m1 m2 m3) from the Clebsch-Gordan oracle.
ExactRadical threej(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// 6j by contracting four 3j symbols over all magnetic quantum numbers.
ExactRadical sixj(const symcoupling::SixJArgs& args);

/// [J12^2, J23^2] / (-4i) in the j12 basis, with J23^2 = U^T diag(ell~(ell~+1)) U
/// and U built from oracle 6j values. Returned as its Hermitian complex matrix.
Eigen::MatrixXcd commutator_operator(const symcoupling::Quadrilateral& q);

/// Eigenvalues of commutator_operator(q), descending.
std::vector<double> commutator_eigenvalues(const symcoupling::Quadrilateral& q);

/// Every admissible 6j argument array with all 2j <= max_twice.
std::vector<symcoupling::SixJArgs> admissible_sixj(int max_twice);

}  // namespace oracle
