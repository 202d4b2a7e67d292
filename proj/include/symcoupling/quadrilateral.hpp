#pragma once

#include <array>
#include <string>
#include <vector>

#include "symcoupling/half_int.hpp"

namespace symcoupling {

/// Inclusive lattice of spin values lo, lo+1, ..., hi.
struct SpinLattice {
  HalfInt lo;
  HalfInt hi;

  bool empty() const { return hi < lo; }
  int size() const { return empty() ? 0 : (hi.twice() - lo.twice()) / 2 + 1; }
  HalfInt at(int i) const { return lo + HalfInt::from_int(i); }
  bool contains(HalfInt x) const { return !empty() && lo <= x && x <= hi && same_parity(x, lo); }
  int index_of(HalfInt x) const { return (x.twice() - lo.twice()) / 2; }
  std::vector<HalfInt> values() const;
};

/// Four spins (a, b, c, d) = (j1, j2, j3, j4) bounding a quadrilateral.
///
/// The ell lattice (j12) couples (a, b) and (c, d); the ell-tilde lattice
/// (j23) couples (a, d) and (b, c). Validity means both are non-empty; the
/// two always have the same size.
struct Quadrilateral {
  HalfInt a, b, c, d;
  bool canonical = false;

  static Quadrilateral from_twice(int a2, int b2, int c2, int d2) {
    return {HalfInt::from_twice(a2), HalfInt::from_twice(b2), HalfInt::from_twice(c2), HalfInt::from_twice(d2)};
  }

  std::array<HalfInt, 4> labels() const { return {a, b, c, d}; }
  std::array<int, 4> twice() const { return {a.twice(), b.twice(), c.twice(), d.twice()}; }

  SpinLattice ell_lattice() const;
  SpinLattice ell_tilde_lattice() const;
  int dimension() const { return ell_lattice().size(); }

  bool is_valid() const;
  /// Throws DomainError when the coupling range is empty or a label is negative.
  void require_valid() const;

  /// Whether (a, b, c, d) satisfies the gauge-fixing chain
  /// a = min of the Regge octet, a <= b <= d, d-(b-a) <= c <= d+(b-a).
  bool satisfies_gauge() const;

  std::string str() const;

  bool same_labels(const Quadrilateral& o) const { return twice() == o.twice(); }
};

/// (s-a, s-b, s-c, s-d) with s the semi-perimeter. Throws DomainError when
/// a+b+c+d is not an integer.
Quadrilateral regge_conjugate(const Quadrilateral& q);

struct CanonicalForm {
  Quadrilateral quad;
  /// quad.labels()[i] == source.labels()[permutation[i]], where source is
  /// the input or, when regge is set, its Regge conjugate.
  std::array<int, 4> permutation{0, 1, 2, 3};
  bool regge = false;
};

/// Representative of the class generated by label permutations and Regge
/// conjugation that satisfies the gauge-fixing chain; the lexicographically
/// smallest such, so the result is idempotent. Throws DomainError for an
/// empty coupling range.
CanonicalForm canonicalize(const Quadrilateral& q);

/// All gauge-fixed class representatives with every 2j <= max_twice.
std::vector<Quadrilateral> canonical_quadrilaterals(int max_twice);

}  // namespace symcoupling
