#include "symcoupling/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symcoupling/angmom.hpp"
#include "symcoupling/errors.hpp"

namespace symcoupling {

namespace {

using cd = std::complex<double>;

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Eigen::MatrixXcd to_complex(const std::vector<std::vector<ExactRadical>>& e) {
  const int n = static_cast<int>(e.size());
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].to_double();
  return m;
}

std::vector<double> spins(const SpinLattice& l) {
  std::vector<double> out;
  for (const HalfInt& h : l.values()) out.push_back(h.value());
  return out;
}

std::vector<std::vector<ExactRadical>> transpose(const std::vector<std::vector<ExactRadical>>& e) {
  const std::size_t n = e.size();
  std::vector<std::vector<ExactRadical>> t(n, std::vector<ExactRadical>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = e[i][j];
  return t;
}

double gram_deviation(const Eigen::MatrixXcd& t) {
  const Eigen::MatrixXcd g = t.adjoint() * t - Eigen::MatrixXcd::Identity(t.cols(), t.cols());
  return max_abs(g);
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::IA: return "IA";
    case Family::IB: return "IB";
    case Family::IIA: return "IIA";
    case Family::IIB: return "IIB";
    case Family::IIIA: return "IIIA";
    case Family::IIIB: return "IIIB";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::IA, Family::IB, Family::IIA, Family::IIB, Family::IIIA, Family::IIIB})
    if (to_string(f) == s) return f;
  throw DomainError("unknown family '" + std::string(s) + "'");
}

std::vector<std::vector<ExactRadical>> exact_overlap_matrix(const Quadrilateral& q) {
  q.require_valid();
  const SpinLattice ell = q.ell_lattice();
  const SpinLattice tilde = q.ell_tilde_lattice();
  const std::size_t n = static_cast<std::size_t>(ell.size());
  std::vector<std::vector<ExactRadical>> m(n, std::vector<ExactRadical>(n));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t p = 0; p < n; ++p)
      m[t][p] = overlap_coefficient(ell.at(static_cast<int>(p)), tilde.at(static_cast<int>(t)), q);
  return m;
}

OverlapTable family_table(Family family, const Quadrilateral& q, Representation rep, double tol) {
  q.require_valid();
  OverlapTable t;
  t.family = family;
  t.quad = q;
  t.rep = rep;
  const SpinLattice ell = q.ell_lattice();
  const SpinLattice tilde = q.ell_tilde_lattice();

  if (family == Family::IA || family == Family::IB) {
    const auto ia = exact_overlap_matrix(q);
    const bool a = family == Family::IA;
    t.exact = a ? ia : transpose(ia);
    t.values = to_complex(t.exact);
    t.row_label = a ? "ell~" : "ell";
    t.col_label = a ? "ell" : "ell~";
    t.row_values = spins(a ? tilde : ell);
    t.col_values = spins(a ? ell : tilde);
    t.degree_note = a ? "Racah polynomial in ell~(ell~+1), degree ell - ell_min"
                      : "Racah polynomial in ell(ell+1), degree ell~ - ell~_min";
  } else {
    const VolumeSpectrum s = spectrum(build_matrix(q, rep), tol);
    Eigen::MatrixXcd table = s.psi;
    t.row_label = "ell";
    if (family == Family::IIIA || family == Family::IIIB) {
      table = to_complex(exact_overlap_matrix(q)) * s.psi;
      t.row_label = "ell~";
    }
    t.row_values = spins(t.row_label == "ell" ? ell : tilde);
    t.col_values = s.eigenvalues;
    t.col_label = "k";
    const bool a = family == Family::IIA || family == Family::IIIA;
    if (a)
      t.values = table;
    else
      t.values = table.adjoint();
    if (!a) {
      std::swap(t.row_label, t.col_label);
      std::swap(t.row_values, t.col_values);
    }
    t.degree_note = a ? "variable lambda_k, lattice " + t.row_label + ", degree k"
                      : "variable " + t.col_label + ", degree given by eigenvalue label k";
  }
  t.orthogonality_deviation = gram_deviation(t.values);
  return t;
}

ExactDualityReport check_duality_I(const Quadrilateral& q) {
  ExactDualityReport r;
  r.quad = q;
  const auto m = exact_overlap_matrix(q);
  const std::size_t n = m.size();
  // order 0: sum over ell (rows ell~, ell~'); order 1: sum over ell~ (columns ell, ell').
  for (int order = 0; order < 2; ++order) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        RadicalSum sum;
        for (std::size_t k = 0; k < n; ++k) sum.add(order == 0 ? m[i][k] * m[j][k] : m[k][i] * m[k][j]);
        ++r.entries_checked;
        const bool ok = i == j ? (sum.is_rational() && sum.rational_value() == 1) : sum.is_zero();
        if (!ok) {
          r.passed = false;
          std::ostringstream msg;
          msg << (order == 0 ? "sum over ell" : "sum over ell~") << " (" << i << ", " << j << "): " << sum.str();
          r.failures.push_back(msg.str());
        }
      }
    }
  }
  return r;
}

DualityReport check_duality_II_III(FamilyPair pair, const Quadrilateral& q, Representation rep) {
  DualityReport r;
  r.quad = q;
  r.pair = pair;
  r.rep = rep;
  const OverlapTable t = family_table(pair == FamilyPair::II ? Family::IIA : Family::IIIA, q, rep);
  const Eigen::MatrixXcd& T = t.values;
  const Eigen::Index n = T.rows();
  r.dimension = static_cast<int>(n);
  r.tolerance = 1e-12 * static_cast<double>(n);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  r.orthogonality_deviation = max_abs(T.adjoint() * T - I);
  const Eigen::MatrixXcd completeness = T * T.adjoint();
  r.completeness_sign = completeness.diagonal().real().sum() >= 0.0 ? 1 : -1;
  r.completeness_deviation = max_abs(completeness - static_cast<double>(r.completeness_sign) * I);
  r.conjugation_required = max_abs(T.transpose() * T - I) > r.tolerance;
  r.passed = r.orthogonality_deviation < r.tolerance && r.completeness_deviation < r.tolerance;
  return r;
}

TriangularReport check_triangular(const Quadrilateral& q, Representation rep) {
  TriangularReport r;
  r.quad = q;
  r.rep = rep;
  const OverlapTable ia = family_table(Family::IA, q, rep);
  const OverlapTable iiia = family_table(Family::IIIA, q, rep);
  const OverlapTable iib = family_table(Family::IIB, q, rep);
  const Eigen::MatrixXcd contracted = iiia.values * iib.values;
  const double dev_plus = max_abs(contracted - ia.values);
  const double dev_minus = max_abs(contracted + ia.values);
  r.sign = dev_plus <= dev_minus ? 1 : -1;
  r.deviation = std::min(dev_plus, dev_minus);
  r.passed = r.deviation < 1e-11;
  return r;
}

RecurrenceReport check_recurrences(const VolumeSpectrum& s) {
  RecurrenceReport r;
  r.quad = s.quad;
  r.rep = s.rep;
  const int n = static_cast<int>(s.eigenvalues.size());
  VolumeMatrix m;
  m.quad = s.quad;
  m.lattice = s.lattice;
  m.alpha = s.alpha;
  m.rep = s.rep;
  const double scale = std::max(m.max_alpha(), 1e-300);
  const Eigen::MatrixXcd K = m.dense();
  for (int k = 0; k < n; ++k) {
    const Eigen::VectorXcd res = K * s.psi.col(k) - s.eigenvalues[static_cast<std::size_t>(k)] * s.psi.col(k);
    r.eigen_residual = std::max(r.eigen_residual, res.cwiseAbs().maxCoeff() / scale);
  }
  // Rows as polynomials in lambda: v_p = P_p(lambda) v_0 with the +alpha recursion.
  Eigen::MatrixXd P(n, n);
  for (int k = 0; k < n; ++k) {
    const double lambda = s.eigenvalues[static_cast<std::size_t>(k)];
    P(0, k) = 1.0;
    for (int p = 0; p + 1 < n; ++p) {
      const double prev = p > 0 ? s.alpha[static_cast<std::size_t>(p - 1)] * P(p - 1, k) : 0.0;
      P(p + 1, k) = (lambda * P(p, k) - prev) / s.alpha[static_cast<std::size_t>(p)];
    }
    for (int p = 0; p < n; ++p) {
      const cd predicted = basis_phase(s.rep, p) * P(p, k) * s.real_vectors(0, k);
      r.dual_residual = std::max(r.dual_residual, std::abs(s.psi(p, k) - predicted));
    }
  }
  for (int p = 0; p < n; ++p)
    for (int pp = 0; pp < n; ++pp) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) {
        const double w = s.real_vectors(0, k) * s.real_vectors(0, k);
        sum += w * P(p, k) * P(pp, k);
      }
      r.dual_orthogonality = std::max(r.dual_orthogonality, std::fabs(sum - (p == pp ? 1.0 : 0.0)));
    }
  return r;
}

}  // namespace symcoupling
