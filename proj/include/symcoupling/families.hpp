#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcoupling/exact.hpp"
#include "symcoupling/quadrilateral.hpp"
#include "symcoupling/volume.hpp"

namespace symcoupling {

/// The six overlap families. Tables are indexed (row = variable, column = degree):
///   IA   <ell~|ell>  rows ell~, cols ell     IB   <ell|ell~>  = IA^T
///   IIA  <ell|k>     rows ell,  cols k       IIB  <k|ell>     = IIA^dagger
///   IIIA <ell~|k>    rows ell~, cols k       IIIB <k|ell~>    = IIIA^dagger
/// with IIIA = IA * IIA.
enum class Family { IA, IB, IIA, IIB, IIIA, IIIB };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

struct OverlapTable {
  Family family = Family::IA;
  Quadrilateral quad;
  Representation rep = Representation::sym;  // meaningful for II/III
  std::string row_label, col_label;          // "ell", "ell~" or "k"
  std::vector<double> row_values, col_values;  // spins, or eigenvalues for k
  std::vector<std::vector<ExactRadical>> exact;  // family I only
  Eigen::MatrixXcd values;
  double orthogonality_deviation = 0.0;  // max |T^dagger T - I|
  std::string degree_note;               // polynomial-degree bookkeeping
};

OverlapTable family_table(Family family, const Quadrilateral& q, Representation rep = Representation::sym,
                          double tol = 1e-12);

/// Exact <ell~|ell> matrix: rows ell~, columns ell.
std::vector<std::vector<ExactRadical>> exact_overlap_matrix(const Quadrilateral& q);

struct ExactDualityReport {
  Quadrilateral quad;
  bool passed = true;
  int entries_checked = 0;
  std::vector<std::string> failures;  // "(row, col): value" of offending sums
};

/// Both orthogonality sums of the family-I matrix, in exact arithmetic:
/// diagonal sums must equal 1 as rationals, off-diagonal sums must vanish.
ExactDualityReport check_duality_I(const Quadrilateral& q);

enum class FamilyPair { II, III };

struct DualityReport {
  Quadrilateral quad;
  FamilyPair pair = FamilyPair::II;
  Representation rep = Representation::sym;
  int dimension = 0;
  double orthogonality_deviation = 0.0;  // |T^dagger T - I|
  int completeness_sign = 1;             // measured s in T T^dagger = s I
  double completeness_deviation = 0.0;   // |T T^dagger - s I|
  bool conjugation_required = false;     // T^T T != I (complex tables)
  double tolerance = 0.0;                // 1e-12 * dim
  bool passed = false;
};

DualityReport check_duality_II_III(FamilyPair pair, const Quadrilateral& q, Representation rep);

struct TriangularReport {
  Quadrilateral quad;
  Representation rep = Representation::sym;
  int sign = 1;            // measured s in sum_k <ell~|k><k|ell> = s <ell~|ell>
  double deviation = 0.0;
  bool passed = false;     // deviation < 1e-11
};

TriangularReport check_triangular(const Quadrilateral& q, Representation rep);

struct RecurrenceReport {
  Quadrilateral quad;
  Representation rep = Representation::sym;
  double eigen_residual = 0.0;        // |K Psi - lambda Psi| / max alpha (IIA, variable lambda_k on ell)
  double dual_residual = 0.0;         // |Psi_p - P_p(lambda_k) Psi_0| (IIB, rows as functions of k)
  double dual_orthogonality = 0.0;    // |sum_k w_k P_p P_p' - delta|, w_k = |Psi_0^(k)|^2
};

/// Three-term structure of family II: columns obey the volume recursion in
/// ell; rows are polynomials P_p(lambda) generated by the same recursion and
/// are orthonormal in k with weights |Psi_0^(k)|^2.
RecurrenceReport check_recurrences(const VolumeSpectrum& s);

}  // namespace symcoupling
