#include <doctest.h>

#include "symcoupling/families.hpp"

using namespace symcoupling;

namespace {
const Quadrilateral kHalves = Quadrilateral::from_twice(1, 1, 1, 1);
}

TEST_CASE("family tables") {
  const OverlapTable ia = family_table(Family::IA, kHalves);
  CHECK(ia.values.rows() == 2);
  CHECK(ia.orthogonality_deviation < 1e-15);
  CHECK(ia.exact[0][0].square() == BigRational(1, 4));
  const OverlapTable ib = family_table(Family::IB, kHalves);
  CHECK((ib.values - ia.values.transpose()).norm() == 0.0);

  const Quadrilateral q = Quadrilateral::from_twice(2, 3, 5, 4);
  for (Family f : {Family::IIA, Family::IIB, Family::IIIA, Family::IIIB})
    for (Representation rep : {Representation::sym, Representation::antisym})
      CHECK(family_table(f, q, rep).orthogonality_deviation < 1e-12);
  CHECK(parse_family("IIIB") == Family::IIIB);
}

TEST_CASE("exact family-I orthogonality") {
  CHECK(check_duality_I(kHalves).passed);
  const auto r = check_duality_I(Quadrilateral::from_twice(3, 4, 6, 5));
  CHECK(r.passed);
  CHECK(r.entries_checked > 0);
  const auto single = exact_overlap_matrix(Quadrilateral::from_twice(0, 2, 2, 2));
  REQUIRE(single.size() == 1);
  CHECK(single[0][0].square() == 1);

  const Quadrilateral q = Quadrilateral::from_twice(2, 3, 3, 4);
  CHECK(exact_overlap_matrix(q) == exact_overlap_matrix(regge_conjugate(q)));
}

TEST_CASE("duality and completeness of families II and III") {
  for (Representation rep : {Representation::sym, Representation::antisym})
    for (FamilyPair pair : {FamilyPair::II, FamilyPair::III}) {
      const auto r = check_duality_II_III(pair, Quadrilateral::from_twice(3, 4, 6, 5), rep);
      CHECK(r.passed);
      CHECK(r.completeness_sign == 1);
      CHECK(r.conjugation_required == (rep == Representation::antisym));
    }
  CHECK(check_duality_II_III(FamilyPair::II, Quadrilateral::from_twice(0, 2, 2, 2), Representation::sym).passed);
}

TEST_CASE("triangular relation and recurrences") {
  const auto t = check_triangular(kHalves, Representation::sym);
  CHECK(t.passed);
  CHECK(t.sign == 1);
  CHECK(t.deviation < 1e-12);
  CHECK(check_triangular(Quadrilateral::from_twice(0, 2, 2, 2), Representation::sym).deviation < 1e-15);

  const auto rr = check_recurrences(spectrum(build_matrix(Quadrilateral::from_twice(4, 5, 7, 6))));
  CHECK(rr.eigen_residual < 1e-12);
  CHECK(rr.dual_residual < 1e-10);
  CHECK(rr.dual_orthogonality < 1e-10);
}
