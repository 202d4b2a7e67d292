#include "symcoupling/algebra.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "symcoupling/angmom.hpp"
#include "symcoupling/errors.hpp"

namespace symcoupling {

namespace {

double casimir(HalfInt j) { return j.value() * (j.value() + 1.0); }

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

GeneratorTriple realize(const Quadrilateral& q) {
  q.require_valid();
  GeneratorTriple g;
  g.quad = q;
  g.lattice = q.ell_lattice();
  g.dual_lattice = q.ell_tilde_lattice();
  const int n = g.lattice.size();
  g.overlap.resize(n, n);
  for (int t = 0; t < n; ++t)
    for (int p = 0; p < n; ++p)
      g.overlap(t, p) = overlap_coefficient(g.lattice.at(p), g.dual_lattice.at(t), q).to_double();

  Eigen::VectorXd chi(n), mu(n);
  for (int p = 0; p < n; ++p) chi(p) = casimir(g.lattice.at(p));
  for (int t = 0; t < n; ++t) mu(t) = casimir(g.dual_lattice.at(t));
  g.K1 = chi.asDiagonal();
  g.K2 = g.overlap.transpose() * mu.asDiagonal() * g.overlap;
  g.K2 = 0.5 * (g.K2 + g.K2.transpose()).eval();
  g.K3 = g.K1 * g.K2 - g.K2 * g.K1;
  return g;
}

std::vector<double> commutator_volume_eigenvalues(const GeneratorTriple& g) {
  // K3/(16i) = -i K3/16 is Hermitian.
  const Eigen::MatrixXcd h = std::complex<double>(0.0, -1.0 / 16.0) * g.K3.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

StructureConstants fit_structure_constants(const GeneratorTriple& g) {
  const Eigen::Index n = g.K1.rows();
  const Eigen::Index nn = n * n;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd anti = g.K1 * g.K2 + g.K2 * g.K1;
  const Eigen::MatrixXd lhs2 = g.K2 * g.K3 - g.K3 * g.K2;
  const Eigen::MatrixXd lhs3 = g.K3 * g.K1 - g.K1 * g.K3;
  const Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(n, n);

  // Unknown order: A1, A2, C1, C2, D, G1, G2.
  const Eigen::MatrixXd* rel2[7] = {&anti, nullptr, &g.K1, &Z, &g.K2, &I, &Z};
  const Eigen::MatrixXd* rel3[7] = {nullptr, &anti, &Z, &g.K2, &g.K1, &Z, &I};
  const Eigen::MatrixXd K2sq = g.K2 * g.K2;
  const Eigen::MatrixXd K1sq = g.K1 * g.K1;
  rel2[1] = &K2sq;
  rel3[0] = &K1sq;

  Eigen::MatrixXd A(2 * nn, 7);
  Eigen::VectorXd b(2 * nn);
  for (int c = 0; c < 7; ++c) {
    A.col(c).head(nn) = Eigen::Map<const Eigen::VectorXd>(rel2[c]->data(), nn);
    A.col(c).tail(nn) = Eigen::Map<const Eigen::VectorXd>(rel3[c]->data(), nn);
  }
  b.head(nn) = Eigen::Map<const Eigen::VectorXd>(lhs2.data(), nn);
  b.tail(nn) = Eigen::Map<const Eigen::VectorXd>(lhs3.data(), nn);

  // Column equilibration; columns span many orders of magnitude.
  Eigen::VectorXd colscale(7);
  for (int c = 0; c < 7; ++c) {
    const double s = A.col(c).norm();
    colscale(c) = s > 0.0 ? s : 1.0;
    A.col(c) /= colscale(c);
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(1e-10);
  cod.compute(A);
  const Eigen::VectorXd x = cod.solve(b).cwiseQuotient(colscale);

  StructureConstants sc;
  sc.A1 = x(0);
  sc.A2 = x(1);
  sc.C1 = x(2);
  sc.C2 = x(3);
  sc.D = x(4);
  sc.G1 = x(5);
  sc.G2 = x(6);
  sc.rank = static_cast<int>(cod.rank());
  sc.rank_deficient = sc.rank < 7;
  if (sc.rank_deficient) {
    std::ostringstream note;
    note << "dimension " << n << " determines only " << sc.rank
         << " of 7 constants; reported values are the minimum-norm solution";
    sc.note = note.str();
  }

  const Eigen::MatrixXd r2 = lhs2 - (sc.A1 * anti + sc.A2 * K2sq + sc.C1 * g.K1 + sc.D * g.K2 + sc.G1 * I);
  const Eigen::MatrixXd r3 = lhs3 - (sc.A1 * K1sq + sc.A2 * anti + sc.C2 * g.K2 + sc.D * g.K1 + sc.G2 * I);
  sc.residual = std::max(r2.norm(), r3.norm());
  sc.scale = g.K1.norm() * g.K2.norm();
  return sc;
}

GeneratorTriple duality_map(const GeneratorTriple& g) {
  GeneratorTriple out = g;
  std::swap(out.K1, out.K2);
  out.K3 = -g.K3;
  return out;
}

TridiagonalData tridiagonal_data(const GeneratorTriple& g, TridiagonalView which) {
  Eigen::MatrixXd m;
  switch (which) {
    case TridiagonalView::K2_in_K1_basis: m = g.K2; break;
    case TridiagonalView::K1_in_K2_basis: m = g.overlap * g.K1 * g.overlap.transpose(); break;
    case TridiagonalView::K3_in_K1_basis: m = g.K3; break;
  }
  const Eigen::Index n = m.rows();
  const double scale = std::max(max_abs(m), 1e-300);
  TridiagonalData t;
  for (Eigen::Index i = 0; i < n; ++i) {
    t.diag.push_back(m(i, i));
    if (i + 1 < n) t.off.push_back(m(i + 1, i));
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(i - j) > 1) t.leakage = std::max(t.leakage, std::fabs(m(i, j)) / scale);
  }
  if (which == TridiagonalView::K3_in_K1_basis) {
    // K3 psi_p = (chi_{p+1}-chi_p) a_{p+1} psi_{p+1} - (chi_p-chi_{p-1}) a_p psi_{p-1}.
    Eigen::MatrixXd pattern = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      const double step = (g.K1(p + 1, p + 1) - g.K1(p, p)) * g.K2(p + 1, p);
      pattern(p + 1, p) = step;
      pattern(p, p + 1) = -step;
    }
    t.pattern_deviation = max_abs(m - pattern) / scale;
  }
  if (t.leakage > 1e-12) {
    std::ostringstream msg;
    msg << "tridiagonal_data: off-band leakage " << t.leakage << " for " << g.quad.str();
    throw StructuralError(msg.str());
  }
  return t;
}

}  // namespace symcoupling
