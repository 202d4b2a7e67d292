#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "symcoupling/angmom.hpp"
#include "symcoupling/errors.hpp"
#include "symcoupling/quadrilateral.hpp"

using namespace symcoupling;

namespace {

struct FrozenValue {
  std::array<int, 6> twice;
  int sign;
  const char* square;
};

#include "frozen_values.inc"

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

ExactRadical frozen(const FrozenValue& f) { return f.sign == 0 ? ExactRadical::zero() : ExactRadical(f.sign, BigRational(f.square)); }

}  // namespace

TEST_CASE("triangle rule") {
  CHECK(triangle_ok(h(1), h(1), h(2)));
  CHECK_FALSE(triangle_ok(h(1), h(1), h(3)));
  CHECK_FALSE(triangle_ok(h(2), h(1), h(2)));
}

TEST_CASE("3j values") {
  CHECK(wigner_3j(h(0), h(0), h(0), h(0), h(0), h(0)) == ExactRadical::one());
  const ExactRadical v = wigner_3j(h(2), h(2), h(0), h(2), h(-2), h(0));
  CHECK(v.square() == BigRational(1, 3));
  CHECK(v.sign() == 1);
  CHECK(wigner_3j(h(1), h(1), h(2), h(1), h(1), h(-2)).square() == BigRational(1, 3));
  CHECK(wigner_3j(h(2), h(2), h(2), h(2), h(2), h(2)).is_zero());
  CHECK_THROWS_AS(wigner_3j(h(2), h(2), h(2), h(1), h(-1), h(0)), DomainError);
}

TEST_CASE("3j agrees with the lowering-operator oracle") {
  for (int j1 = 0; j1 <= 5; ++j1)
    for (int j2 = 0; j2 <= 5; ++j2)
      for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2)
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > j3) continue;
            CHECK(wigner_3j(h(j1), h(j2), h(j3), h(m1), h(m2), h(m3)) ==
                  oracle::threej(h(j1), h(j2), h(j3), h(m1), h(m2), h(m3)));
          }
}

TEST_CASE("frozen reference values") {
  for (const auto& f : kFrozen6j) CHECK_MESSAGE(wigner_6j(SixJArgs::from_twice(f.twice)) == frozen(f), f.square);
  for (const auto& f : kFrozen3j) {
    const auto& t = f.twice;
    CHECK(wigner_3j(h(t[0]), h(t[1]), h(t[2]), h(t[3]), h(t[4]), h(t[5])) == frozen(f));
  }
}

TEST_CASE("6j values") {
  const ExactRadical all_one = wigner_6j(SixJArgs::from_twice({2, 2, 2, 2, 2, 2}));
  CHECK(all_one.square() == BigRational(1, 36));
  CHECK(all_one.sign() == 1);
  CHECK(all_one == oracle::sixj(SixJArgs::from_twice({2, 2, 2, 2, 2, 2})));
  CHECK(wigner_6j(SixJArgs::from_twice({2, 2, 6, 2, 2, 2})).is_zero());

  // {a b c / 0 c b} = (-1)^(a+b+c) / sqrt((2b+1)(2c+1))
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        if (!triangle_ok(h(a), h(b), h(c))) continue;
        const ExactRadical v = wigner_6j(SixJArgs::from_twice({a, b, c, 0, c, b}));
        const int sign = parity_sign(h(a + b + c));
        CHECK(v == ExactRadical(sign, BigRational(1, (b + 1) * (c + 1))));
      }
}

TEST_CASE("6j agrees with the contraction oracle for 2j <= 4") {
  for (const auto& a : oracle::admissible_sixj(4)) CHECK(wigner_6j(a) == oracle::sixj(a));
}

TEST_CASE("Regge map and symmetry orbits") {
  const SixJArgs a = SixJArgs::from_twice({2, 3, 3, 4, 3, 5});
  CHECK(wigner_6j(a.regge()) == wigner_6j(a));
  CHECK(a.regge().regge() == a);

  CHECK(symmetry_orbit(SixJArgs::from_twice({2, 2, 2, 2, 2, 2})).size() == 1);
  CHECK(symmetry_orbit(SixJArgs::from_twice({6, 6, 6, 6, 4, 2})).size() == 144);
  CHECK(symmetry_orbit(SixJArgs::from_twice({4, 6, 8, 10, 6, 8})).size() == 36);

  std::mt19937 rng(11);
  const auto all = oracle::admissible_sixj(6);
  for (int i = 0; i < 40; ++i) {
    const SixJArgs s = all[rng() % all.size()];
    const auto orbit = symmetry_orbit(s);
    CHECK(144 % orbit.size() == 0);
    const ExactRadical v = wigner_6j(s);
    for (const auto& o : orbit) CHECK(wigner_6j(o) == v);
  }
}

TEST_CASE("overlap coefficients") {
  const Quadrilateral q = Quadrilateral::from_twice(1, 1, 1, 1);
  CHECK(overlap_coefficient(h(0), h(0), q).square() == BigRational(1, 4));
  CHECK(overlap_coefficient(h(4), h(0), q).is_zero());
  // Each column is a unit vector.
  const Quadrilateral r = Quadrilateral::from_twice(2, 3, 4, 3);
  for (const HalfInt l : r.ell_lattice().values()) {
    BigRational sum = 0;
    for (const HalfInt t : r.ell_tilde_lattice().values()) sum += overlap_coefficient(l, t, r).square();
    CHECK(sum == 1);
  }
}

TEST_CASE("quadrilaterals, Regge conjugation and canonical forms") {
  const auto q = [](int a, int b, int c, int d) { return Quadrilateral::from_twice(a, b, c, d); };
  CHECK(regge_conjugate(q(2, 2, 2, 2)).same_labels(q(2, 2, 2, 2)));
  CHECK(regge_conjugate(q(2, 3, 3, 4)).same_labels(q(4, 3, 3, 2)));
  CHECK(regge_conjugate(q(1, 1, 1, 3)).same_labels(q(2, 2, 2, 0)));
  CHECK_THROWS_AS(regge_conjugate(q(1, 2, 2, 2)), DomainError);

  CHECK(q(2, 2, 2, 2).dimension() == 3);
  CHECK_FALSE(q(1, 1, 1, 5).is_valid());
  CHECK_THROWS_AS(canonicalize(q(1, 1, 1, 5)), DomainError);

  const CanonicalForm same = canonicalize(q(1, 1, 1, 1));
  CHECK(same.quad.same_labels(q(1, 1, 1, 1)));
  CHECK_FALSE(same.regge);

  const Quadrilateral in = q(4, 3, 2, 3);
  const CanonicalForm cf = canonicalize(in);
  CHECK(cf.quad.satisfies_gauge());
  const Quadrilateral src = cf.regge ? regge_conjugate(in) : in;
  for (int i = 0; i < 4; ++i)
    CHECK(cf.quad.labels()[static_cast<std::size_t>(i)] == src.labels()[static_cast<std::size_t>(cf.permutation[static_cast<std::size_t>(i)])]);
  CHECK(canonicalize(cf.quad).quad.same_labels(cf.quad));

  const auto reps = canonical_quadrilaterals(6);
  std::set<std::array<int, 4>> seen;
  for (const auto& r : reps) {
    CHECK(r.satisfies_gauge());
    CHECK(r.is_valid());
    CHECK(seen.insert(r.twice()).second);
    CHECK(canonicalize(r).quad.same_labels(r));
  }
}
