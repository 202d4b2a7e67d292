#include "symcoupling/angmom.hpp"

#include <algorithm>
#include <set>

#include "symcoupling/errors.hpp"

namespace symcoupling {

namespace {

constexpr int kFactorialTable = 1024;

// Integer value of a twice-encoded sum that is known to be even.
int whole(int twice) { return twice / 2; }

BigRational inv_factorial_product(std::initializer_list<int> args) {
  BigInt den = 1;
  for (int n : args) den *= factorial(n);
  return BigRational(BigInt(1), den);
}

// Triangle coefficient (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!, twice-encoded
// inputs; callers have already checked the triad.
BigRational delta(int a2, int b2, int c2) {
  BigRational r(factorial(whole(a2 + b2 - c2)) * factorial(whole(a2 - b2 + c2)) * factorial(whole(-a2 + b2 + c2)),
                factorial(whole(a2 + b2 + c2) + 1));
  r.canonicalize();
  return r;
}

}  // namespace

const BigInt& factorial(int n) {
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> t(kFactorialTable);
    t[0] = 1;
    for (int i = 1; i < kFactorialTable; ++i) t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * i;
    return t;
  }();
  if (n < 0 || n >= kFactorialTable) throw DomainError("factorial argument out of range: " + std::to_string(n));
  return table[static_cast<std::size_t>(n)];
}

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
  if (!a.nonnegative() || !b.nonnegative() || !c.nonnegative()) return false;
  if ((a.twice() + b.twice() + c.twice()) % 2 != 0) return false;
  return abs(a - b) <= c && c <= a + b;
}

SixJArgs SixJArgs::from_twice(std::array<int, 6> t) {
  SixJArgs s;
  for (std::size_t i = 0; i < 6; ++i) s.j[i] = HalfInt::from_twice(t[i]);
  return s;
}

std::array<std::array<HalfInt, 3>, 4> SixJArgs::triads() const {
  return {{{top(0), top(1), top(2)},
           {top(0), bottom(1), bottom(2)},
           {bottom(0), top(1), bottom(2)},
           {bottom(0), bottom(1), top(2)}}};
}

bool SixJArgs::admissible() const {
  for (const auto& t : triads())
    if (!triangle_ok(t[0], t[1], t[2])) return false;
  return true;
}

std::array<int, 6> SixJArgs::twice() const {
  std::array<int, 6> t{};
  for (std::size_t i = 0; i < 6; ++i) t[i] = j[i].twice();
  return t;
}

std::string SixJArgs::str() const {
  return "{" + top(0).str() + " " + top(1).str() + " " + top(2).str() + " / " + bottom(0).str() + " " +
         bottom(1).str() + " " + bottom(2).str() + "}";
}

SixJArgs SixJArgs::regge() const {
  int sum = top(0).twice() + top(1).twice() + bottom(0).twice() + bottom(1).twice();
  if (sum % 2 != 0) throw DomainError("Regge map undefined for " + str());
  HalfInt s = HalfInt::from_twice(sum / 2);
  SixJArgs r = *this;
  r.j[0] = s - top(0);
  r.j[1] = s - top(1);
  r.j[3] = s - bottom(0);
  r.j[4] = s - bottom(1);
  return r;
}

ExactRadical wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  for (HalfInt jj : {j1, j2, j3})
    if (!jj.nonnegative()) throw DomainError("negative angular momentum " + jj.str());
  if (!same_parity(j1, m1) || !same_parity(j2, m2) || !same_parity(j3, m3))
    throw DomainError("j and m parities differ in 3j symbol");
  if ((m1 + m2 + m3).twice() != 0) return {};
  if (abs(m1) > j1 || abs(m2) > j2 || abs(m3) > j3) return {};
  if (!triangle_ok(j1, j2, j3)) return {};

  const int a = j1.twice(), b = j2.twice(), c = j3.twice();
  const int x = m1.twice(), y = m2.twice(), z = m3.twice();

  BigRational pref = delta(a, b, c);
  pref *= BigRational(factorial(whole(a + x)) * factorial(whole(a - x)) * factorial(whole(b + y)) *
                      factorial(whole(b - y)) * factorial(whole(c + z)) * factorial(whole(c - z)));

  const int kmin = std::max({0, whole(b - c - x), whole(a - c + y)});
  const int kmax = std::min({whole(a + b - c), whole(a - x), whole(b + y)});
  BigRational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    BigRational term = inv_factorial_product({k, whole(c - b + x) + k, whole(c - a - y) + k, whole(a + b - c) - k,
                                              whole(a - x) - k, whole(b + y) - k});
    if (k % 2) sum -= term; else sum += term;
  }
  if (parity_sign(j1 - j2 - m3) < 0) sum = -sum;
  return ExactRadical::rational_times_sqrt(sum, pref);
}

ExactRadical wigner_6j(const SixJArgs& args) {
  if (!args.admissible()) return {};
  const auto t = args.twice();
  const int j1 = t[0], j2 = t[1], j3 = t[2], j4 = t[3], j5 = t[4], j6 = t[5];

  BigRational pref = delta(j1, j2, j3) * delta(j1, j5, j6) * delta(j4, j2, j6) * delta(j4, j5, j3);

  const std::array<int, 4> alpha{whole(j1 + j2 + j3), whole(j1 + j5 + j6), whole(j4 + j2 + j6), whole(j4 + j5 + j3)};
  const std::array<int, 3> beta{whole(j1 + j2 + j4 + j5), whole(j2 + j3 + j5 + j6), whole(j3 + j1 + j6 + j4)};
  const int tmin = *std::max_element(alpha.begin(), alpha.end());
  const int tmax = *std::min_element(beta.begin(), beta.end());

  BigRational sum = 0;
  for (int s = tmin; s <= tmax; ++s) {
    BigRational term(factorial(s + 1));
    term *= inv_factorial_product({s - alpha[0], s - alpha[1], s - alpha[2], s - alpha[3], beta[0] - s, beta[1] - s,
                                   beta[2] - s});
    if (s % 2) sum -= term; else sum += term;
  }
  return ExactRadical::rational_times_sqrt(sum, pref);
}

ExactRadical overlap_coefficient(HalfInt ell, HalfInt ell_tilde, const Quadrilateral& q) {
  if (!q.ell_lattice().contains(ell) || !q.ell_tilde_lattice().contains(ell_tilde)) return {};
  SixJArgs args;
  args.j = {q.a, q.b, ell, q.c, q.d, ell_tilde};
  ExactRadical six = wigner_6j(args);
  if (six.is_zero()) return six;
  const int phase = parity_sign(q.a + q.b + q.c + q.d);
  BigRational weight(ell.multiplicity() * ell_tilde.multiplicity());
  return ExactRadical(phase * six.sign(), six.radicand() * weight);
}

std::vector<SixJArgs> symmetry_orbit(const SixJArgs& args) {
  auto swap_cols = [](SixJArgs s, std::size_t p, std::size_t q) {
    std::swap(s.j[p], s.j[q]);
    std::swap(s.j[p + 3], s.j[q + 3]);
    return s;
  };
  auto flip_rows_01 = [](SixJArgs s) {
    std::swap(s.j[0], s.j[3]);
    std::swap(s.j[1], s.j[4]);
    return s;
  };

  std::set<SixJArgs> seen{args};
  std::vector<SixJArgs> stack{args};
  while (!stack.empty()) {
    SixJArgs x = stack.back();
    stack.pop_back();
    std::vector<SixJArgs> next{swap_cols(x, 0, 1), swap_cols(x, 1, 2), flip_rows_01(x)};
    int perim = x.top(0).twice() + x.top(1).twice() + x.bottom(0).twice() + x.bottom(1).twice();
    if (perim % 2 == 0) {
      SixJArgs r = x.regge();
      bool nonneg = std::all_of(r.j.begin(), r.j.end(), [](HalfInt h) { return h.nonnegative(); });
      if (nonneg) next.push_back(r);
    }
    for (const auto& y : next)
      if (seen.insert(y).second) stack.push_back(y);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace symcoupling
