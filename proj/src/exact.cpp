#include "symcoupling/exact.hpp"

#include <sstream>

#include "symcoupling/errors.hpp"

namespace symcoupling {

namespace {

constexpr mp_bitcnt_t kFloatBits = 192;

BigInt ipow(unsigned long base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

}  // namespace

SquareFreeSplit split_square_free(const BigInt& n) {
  if (sgn(n) <= 0) throw DomainError("square-free split requires a positive integer");
  BigInt rest = n;
  BigInt root = 1;
  BigInt squarefree = 1;

  auto take = [&](unsigned long p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e >= 2) root *= ipow(p, e / 2);
    if (e % 2) squarefree *= p;
  };

  take(2);
  // Invariant: every prime factor of rest is >= p. Once p^3 > rest, rest is
  // 1, a prime, a prime square, or a product of two distinct primes.
  for (unsigned long p = 3; rest != 1; p += 2) {
    BigInt cube = BigInt(p) * p * p;
    if (cube > rest) break;
    take(p);
  }
  if (rest != 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      BigInt s;
      mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
      root *= s;
    } else {
      squarefree *= rest;
    }
  }
  return {root, squarefree};
}

double to_double(const BigRational& q) {
  mpf_class f(q, kFloatBits);
  return f.get_d();
}

ExactRadical::ExactRadical(int sign, BigRational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  radicand_.canonicalize();
  if (sgn(radicand_) < 0) throw DomainError("radicand must be non-negative");
  if (sign_ < -1 || sign_ > 1) throw DomainError("sign must be -1, 0 or +1");
  if ((sign_ == 0) != (sgn(radicand_) == 0)) throw DomainError("sign is zero iff radicand is zero");
}

ExactRadical ExactRadical::from_rational(const BigRational& q) {
  return ExactRadical(sgn(q), q * q);
}

ExactRadical ExactRadical::rational_times_sqrt(const BigRational& q, const BigRational& r) {
  if (sgn(r) < 0) throw DomainError("square root of a negative rational");
  if (sgn(q) == 0 || sgn(r) == 0) return {};
  return ExactRadical(sgn(q), q * q * r);
}

double ExactRadical::to_double() const {
  if (sign_ == 0) return 0.0;
  mpf_class f(radicand_, kFloatBits);
  mpf_class s(0, kFloatBits);
  mpf_sqrt(s.get_mpf_t(), f.get_mpf_t());
  return sign_ * s.get_d();
}

ExactRadical::Split ExactRadical::split() const {
  if (sign_ == 0) return {BigRational(0), BigInt(1)};
  auto num = split_square_free(radicand_.get_num());
  auto den = split_square_free(radicand_.get_den());
  // sqrt(p/q) = sp*sqrt(fp) / (sq*sqrt(fq)) = sp*sqrt(fp*fq) / (sq*fq)
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num.squarefree.get_mpz_t(), den.squarefree.get_mpz_t());
  BigInt f = (num.squarefree / g) * (den.squarefree / g);
  BigRational c(num.root * g, den.root * den.squarefree);
  c.canonicalize();
  if (sign_ < 0) c = -c;
  return {c, f};
}

std::string ExactRadical::str() const {
  if (sign_ == 0) return "0";
  std::string s = sign_ < 0 ? "-" : "";
  return s + "sqrt(" + radicand_.get_str() + ")";
}

std::string ExactRadical::simplified_str() const {
  if (sign_ == 0) return "0";
  auto [c, f] = split();
  if (f == 1) return c.get_str();
  std::string rad = "sqrt(" + f.get_str() + ")";
  if (c == 1) return rad;
  if (c == -1) return "-" + rad;
  return c.get_str() + "*" + rad;
}

ExactRadical ExactRadical::operator*(const ExactRadical& o) const {
  if (sign_ == 0 || o.sign_ == 0) return {};
  return ExactRadical(sign_ * o.sign_, radicand_ * o.radicand_);
}

ExactRadical ExactRadical::operator/(const ExactRadical& o) const {
  if (o.sign_ == 0) throw DomainError("division by an exact zero");
  if (sign_ == 0) return {};
  return ExactRadical(sign_ * o.sign_, radicand_ / o.radicand_);
}

RadicalSum& RadicalSum::add_term(const BigRational& coefficient, const BigInt& squarefree) {
  if (sgn(coefficient) == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(squarefree, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

RadicalSum& RadicalSum::add(const ExactRadical& r) {
  if (r.is_zero()) return *this;
  auto [c, f] = r.split();
  return add_term(c, f);
}

RadicalSum& RadicalSum::add(const RadicalSum& other) {
  for (const auto& [f, c] : other.terms_) add_term(c, f);
  return *this;
}

RadicalSum RadicalSum::operator*(const ExactRadical& r) const {
  RadicalSum out;
  if (r.is_zero()) return out;
  for (const auto& [f, c] : terms_) out.add(ExactRadical::rational_times_sqrt(c, BigRational(f)) * r);
  return out;
}

RadicalSum RadicalSum::operator*(const RadicalSum& o) const {
  RadicalSum out;
  for (const auto& [f1, c1] : terms_) {
    for (const auto& [f2, c2] : o.terms_) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), f1.get_mpz_t(), f2.get_mpz_t());
      // sqrt(f1*f2) = g*sqrt((f1/g)*(f2/g)), the latter square-free.
      out.add_term(c1 * c2 * BigRational(g), (f1 / g) * (f2 / g));
    }
  }
  return out;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum out = *this;
  for (auto& [f, c] : out.terms_) c = -c;
  return out;
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

BigRational RadicalSum::rational_value() const {
  if (!is_rational()) throw DomainError("radical sum is irrational: " + str());
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

std::optional<ExactRadical> RadicalSum::as_radical() const {
  if (terms_.empty()) return ExactRadical::zero();
  if (terms_.size() > 1) return std::nullopt;
  const auto& [f, c] = *terms_.begin();
  return ExactRadical::rational_times_sqrt(c, BigRational(f));
}

double RadicalSum::to_double() const {
  mpf_class total(0, kFloatBits);
  for (const auto& [f, c] : terms_) {
    mpf_class root(f, kFloatBits);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    total += mpf_class(c, kFloatBits) * root;
  }
  return total.get_d();
}

std::string RadicalSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (f != 1) os << "*sqrt(" << f.get_str() << ")";
  }
  return os.str();
}

}  // namespace symcoupling
