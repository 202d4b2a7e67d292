#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "symcoupling/errors.hpp"
#include "symcoupling/volume.hpp"

using namespace symcoupling;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
const Quadrilateral kHalves = Quadrilateral::from_twice(1, 1, 1, 1);
}  // namespace

TEST_CASE("Heron area and alpha") {
  // Equilateral triangle with side 1: area sqrt(3)/4.
  CHECK(heron_area(h(2), h(2), h(2)) == ExactRadical::sqrt_of(BigRational(3, 16)));
  CHECK(heron_area(h(2), h(2), h(4)).is_zero());
  CHECK_THROWS_AS(heron_area(h(2), h(2), h(6)), DomainError);

  CHECK(alpha(h(2), kHalves) == ExactRadical::sqrt_of(BigRational(3, 256)));
  CHECK_THROWS_AS(alpha(h(0), kHalves), DomainError);
  CHECK_THROWS_AS(alpha(h(4), kHalves), DomainError);

  const Quadrilateral q = Quadrilateral::from_twice(2, 3, 5, 4);
  for (int p = 1; p < q.dimension(); ++p) CHECK(alpha(q.ell_lattice().at(p), q).sign() == 1);
}

TEST_CASE("volume matrix representations") {
  const VolumeMatrix m = build_matrix(kHalves);
  CHECK(m.dimension() == 2);
  CHECK(m.alpha[0] == doctest::Approx(std::sqrt(3.0) / 16));
  CHECK(build_matrix(Quadrilateral::from_twice(2, 2, 2, 2)).dimension() == 3);

  const Quadrilateral q = Quadrilateral::from_twice(2, 3, 5, 4);
  const Eigen::MatrixXcd S = build_matrix(q, Representation::sym).dense();
  const Eigen::MatrixXcd A = build_matrix(q, Representation::antisym).dense();
  CHECK((A - A.adjoint()).norm() == 0.0);
  CHECK((S - S.adjoint()).norm() == 0.0);
  CHECK(A(1, 0) == std::complex<double>(0, -build_matrix(q).alpha[0]));
  CHECK(S(1, 0) == std::complex<double>(-build_matrix(q).alpha[0], 0));
  Eigen::VectorXcd D(q.dimension());
  for (int p = 0; p < q.dimension(); ++p) D(p) = std::pow(std::complex<double>(0, -1), p);
  CHECK((D.asDiagonal() * A * D.conjugate().asDiagonal() - S).norm() < 1e-15);
  CHECK(parse_representation("antisym") == Representation::antisym);
  CHECK_THROWS_AS(parse_representation("other"), DomainError);
}

TEST_CASE("volume spectra") {
  const VolumeSpectrum s = spectrum(build_matrix(kHalves));
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(s.eigenvalues[0] == doctest::Approx(std::sqrt(3.0) / 16).epsilon(1e-14));
  CHECK(s.eigenvalues[1] == doctest::Approx(-std::sqrt(3.0) / 16).epsilon(1e-14));

  const VolumeSpectrum odd = spectrum(build_matrix(Quadrilateral::from_twice(2, 2, 2, 2)));
  CHECK(odd.eigenvalues[1] == 0.0);
  CHECK(odd.eigenvalues[0] == -odd.eigenvalues[2]);

  for (Representation rep : {Representation::sym, Representation::antisym}) {
    const Quadrilateral q = Quadrilateral::from_twice(3, 4, 6, 5);
    const VolumeMatrix m = build_matrix(q, rep);
    const VolumeSpectrum v = spectrum(m);
    const Eigen::MatrixXcd K = m.dense();
    for (int k = 0; k < m.dimension(); ++k) {
      CHECK((K * v.psi.col(k) - v.eigenvalues[static_cast<std::size_t>(k)] * v.psi.col(k)).norm() < 1e-13);
      CHECK(v.real_vectors(0, k) > 0.0);
    }
    CHECK((v.psi.adjoint() * v.psi - Eigen::MatrixXcd::Identity(m.dimension(), m.dimension())).norm() < 1e-13);
  }
}

TEST_CASE("commutator oracle normalization") {
  // [J12^2, J23^2]/(-4i) is four times the Heron-normalized operator.
  const auto e = oracle::commutator_eigenvalues(kHalves);
  CHECK(e[0] == doctest::Approx(std::sqrt(3.0) / 4));
  const auto s = spectrum(build_matrix(kHalves));
  CHECK(std::fabs(e[0] / 4 - s.eigenvalues[0]) < 1e-15);
}
