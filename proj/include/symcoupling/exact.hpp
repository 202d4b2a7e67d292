#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace symcoupling {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// n = root^2 * squarefree, squarefree > 0 square-free (n > 0 required).
struct SquareFreeSplit {
  BigInt root;
  BigInt squarefree;
};

SquareFreeSplit split_square_free(const BigInt& n);

/// A real number sign * sqrt(radicand) with a non-negative rational radicand.
///
/// This is the closed form of every 3j and 6j value. Equality is structural:
/// both the sign and the canonicalized radicand must agree.
class ExactRadical {
 public:
  ExactRadical() = default;  // zero

  /// sign in {-1, 0, +1}; sign == 0 iff radicand == 0.
  ExactRadical(int sign, BigRational radicand);

  static ExactRadical zero() { return {}; }
  static ExactRadical one() { return ExactRadical(1, BigRational(1)); }
  static ExactRadical from_rational(const BigRational& q);
  /// q * sqrt(r), folded into a single radical.
  static ExactRadical rational_times_sqrt(const BigRational& q, const BigRational& r);
  static ExactRadical sqrt_of(const BigRational& r) { return rational_times_sqrt(BigRational(1), r); }

  int sign() const { return sign_; }
  const BigRational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// value^2 as an exact rational.
  BigRational square() const { return radicand_; }

  /// Correctly rounded to within one ulp.
  double to_double() const;

  /// c * sqrt(f) with f square-free; exposes the canonical split.
  struct Split {
    BigRational coefficient;
    BigInt squarefree;
  };
  Split split() const;

  /// "-sqrt(1/36)" / "0" form.
  std::string str() const;
  /// "-1/6", "3/4*sqrt(2)" form.
  std::string simplified_str() const;

  ExactRadical operator-() const { return ExactRadical(-sign_, radicand_); }
  ExactRadical operator*(const ExactRadical& o) const;
  ExactRadical operator/(const ExactRadical& o) const;

  bool operator==(const ExactRadical& o) const { return sign_ == o.sign_ && radicand_ == o.radicand_; }

 private:
  int sign_ = 0;
  BigRational radicand_ = 0;
};

/// Finite sum of rational multiples of square-free radicals, kept in the
/// normal form {squarefree f -> coefficient c}. Distinct square-free radicals
/// are linearly independent over Q, so the sum is zero iff the map is empty.
class RadicalSum {
 public:
  RadicalSum() = default;
  explicit RadicalSum(const ExactRadical& r) { add(r); }

  RadicalSum& add(const ExactRadical& r);
  RadicalSum& add(const RadicalSum& other);
  RadicalSum& add_term(const BigRational& coefficient, const BigInt& squarefree);

  RadicalSum operator+(const RadicalSum& o) const {
    RadicalSum s = *this;
    s.add(o);
    return s;
  }
  RadicalSum operator*(const ExactRadical& r) const;
  RadicalSum operator*(const RadicalSum& o) const;
  RadicalSum operator-() const;

  bool is_zero() const { return terms_.empty(); }
  /// True when only the f = 1 group is present (or the sum is zero).
  bool is_rational() const;
  /// The rational value; throws DomainError unless is_rational().
  BigRational rational_value() const;
  /// Collapses to a single radical when at most one group is present.
  std::optional<ExactRadical> as_radical() const;

  double to_double() const;
  std::size_t size() const { return terms_.size(); }
  const std::map<BigInt, BigRational>& terms() const { return terms_; }

  std::string str() const;

  bool operator==(const RadicalSum& o) const { return terms_ == o.terms_; }

 private:
  // mpz_class has operator<, so the map is deterministically ordered by f.
  std::map<BigInt, BigRational> terms_;
};

/// Conversion helper used by float paths.
double to_double(const BigRational& q);

}  // namespace symcoupling
