#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "symcoupling/exact.hpp"
#include "symcoupling/half_int.hpp"
#include "symcoupling/quadrilateral.hpp"

namespace symcoupling {

/// |a-b| <= c <= a+b and a+b+c integral.
bool triangle_ok(HalfInt a, HalfInt b, HalfInt c);

/// Arguments of {j1 j2 j12 / j3 j4 j23}, stored row-major:
/// top = (j1, j2, j12), bottom = (j3, j4, j23).
///
/// The four triads are (j1 j2 j12), (j3 j4 j12), (j1 j4 j23), (j2 j3 j23),
/// i.e. the usual (top1 top2 top3), (top1 bot2 bot3), (bot1 top2 bot3),
/// (bot1 bot2 top3) of a 6j array.
struct SixJArgs {
  std::array<HalfInt, 6> j{};

  static SixJArgs from_twice(std::array<int, 6> t);

  HalfInt top(int col) const { return j[static_cast<std::size_t>(col)]; }
  HalfInt bottom(int col) const { return j[static_cast<std::size_t>(col + 3)]; }

  std::array<std::array<HalfInt, 3>, 4> triads() const;
  bool admissible() const;
  std::array<int, 6> twice() const;
  std::string str() const;

  /// Regge's non-permutational symmetry: the first two columns map to s-x,
  /// s = (top1 + top2 + bot1 + bot2)/2; requires an integral s.
  SixJArgs regge() const;

  auto operator<=>(const SixJArgs& o) const { return twice() <=> o.twice(); }
  bool operator==(const SixJArgs& o) const { return twice() == o.twice(); }
};

/// Wigner 3j symbol (j1 j2 j3 / m1 m2 m3), exact, Condon-Shortley phases.
/// Zero when the triad fails, m1+m2+m3 != 0 or |m| > j.
/// Throws DomainError on mismatched j/m parity or a negative j.
ExactRadical wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// Wigner 6j symbol by the Racah single-sum formula. Zero for any failed triad.
ExactRadical wigner_6j(const SixJArgs& args);

/// Recoupling coefficient <ell~|ell> for the quadrilateral q:
/// (-1)^(a+b+c+d) sqrt((2 ell+1)(2 ell~+1)) {a b ell / c d ell~}.
/// Zero when either label lies outside its lattice.
ExactRadical overlap_coefficient(HalfInt ell, HalfInt ell_tilde, const Quadrilateral& q);

/// The orbit of args under the 144-element group generated by the 24
/// tetrahedral symmetries and the Regge map. Sorted, duplicate-free.
std::vector<SixJArgs> symmetry_orbit(const SixJArgs& args);

/// Factorial as an exact integer (table-backed for small n).
const BigInt& factorial(int n);

}  // namespace symcoupling
