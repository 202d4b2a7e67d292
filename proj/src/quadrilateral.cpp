#include "symcoupling/quadrilateral.hpp"

#include <algorithm>
#include <optional>

namespace symcoupling {

std::vector<HalfInt> SpinLattice::values() const {
  std::vector<HalfInt> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

namespace {

SpinLattice coupling_range(HalfInt x1, HalfInt x2, HalfInt y1, HalfInt y2) {
  HalfInt lo = std::max(abs(x1 - x2), abs(y1 - y2));
  HalfInt hi = std::min(x1 + x2, y1 + y2);
  // Both pairs must produce the same integer/half-odd class.
  if (!same_parity(x1 + x2, y1 + y2)) return {HalfInt::from_twice(1), HalfInt::from_twice(-1)};
  return {lo, hi};
}

}  // namespace

SpinLattice Quadrilateral::ell_lattice() const { return coupling_range(a, b, c, d); }
SpinLattice Quadrilateral::ell_tilde_lattice() const { return coupling_range(a, d, b, c); }

bool Quadrilateral::is_valid() const {
  if (!a.nonnegative() || !b.nonnegative() || !c.nonnegative() || !d.nonnegative()) return false;
  return !ell_lattice().empty();
}

void Quadrilateral::require_valid() const {
  if (!is_valid()) throw DomainError("quadrilateral " + str() + " has no admissible coupling ell");
}

std::string Quadrilateral::str() const {
  return "(" + a.str() + ", " + b.str() + ", " + c.str() + ", " + d.str() + ")";
}

Quadrilateral regge_conjugate(const Quadrilateral& q) {
  int sum = q.a.twice() + q.b.twice() + q.c.twice() + q.d.twice();
  if (sum % 2 != 0) throw DomainError("Regge conjugation needs an integer perimeter, got " + q.str());
  HalfInt s = HalfInt::from_twice(sum / 2);
  return {s - q.a, s - q.b, s - q.c, s - q.d};
}

bool Quadrilateral::satisfies_gauge() const {
  if (!is_valid()) return false;
  Quadrilateral r = regge_conjugate(*this);
  HalfInt octet_min = std::min({a, b, c, d, r.a, r.b, r.c, r.d});
  if (a != octet_min) return false;
  if (!(a <= b && b <= d)) return false;
  HalfInt spread = b - a;
  return d - spread <= c && c <= d + spread;
}

CanonicalForm canonicalize(const Quadrilateral& q) {
  q.require_valid();
  const Quadrilateral conj = regge_conjugate(q);
  std::optional<CanonicalForm> best;
  for (bool use_regge : {false, true}) {
    const auto src = (use_regge ? conj : q).labels();
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      Quadrilateral cand{src[perm[0]], src[perm[1]], src[perm[2]], src[perm[3]]};
      if (!cand.satisfies_gauge()) continue;
      if (!best || cand.twice() < best->quad.twice()) best = CanonicalForm{cand, perm, use_regge};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (!best) {
    // Not observed for any valid input; the gauge chain is always reachable.
    throw StructuralError("no gauge-fixed representative for " + q.str());
  }
  best->quad.canonical = true;
  return *best;
}

std::vector<Quadrilateral> canonical_quadrilaterals(int max_twice) {
  std::vector<Quadrilateral> out;
  for (int a = 0; a <= max_twice; ++a)
    for (int b = a; b <= max_twice; ++b)
      for (int c = 0; c <= max_twice; ++c)
        for (int d = b; d <= max_twice; ++d) {
          auto q = Quadrilateral::from_twice(a, b, c, d);
          if (!q.satisfies_gauge()) continue;
          if (!canonicalize(q).quad.same_labels(q)) continue;
          q.canonical = true;
          out.push_back(q);
        }
  return out;
}

}  // namespace symcoupling
