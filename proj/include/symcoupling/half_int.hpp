#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "symcoupling/errors.hpp"

namespace symcoupling {

/// Half-integer quantum number (spin or projection) stored as twice its value.
///
/// Spin labels are non-negative; projections may be negative. Parity rules
/// (j and m with equal twice-parity, integer triad sums) are checked by the
/// callers that need them.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  /// Accepts "3/2", "-1/2", "2", "1.5", "-0.5".
  static HalfInt parse(std::string_view token);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }
  constexpr bool nonnegative() const { return twice_ >= 0; }

  /// Integer part when the value is integral; throws otherwise.
  int as_int() const;

  /// 2j+1, the dimension of the spin-j representation.
  constexpr int multiplicity() const { return twice_ + 1; }

  std::string str() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator*(int k) const { return HalfInt(twice_ * k); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

constexpr bool same_parity(HalfInt a, HalfInt b) {
  return ((a.twice() - b.twice()) % 2) == 0;
}

/// (-1)^x for integral x.
constexpr int parity_sign(HalfInt x) {
  return ((x.twice() / 2) % 2 == 0) ? 1 : -1;
}

namespace literals {
/// 3_h2 == 3/2, 2_h2 == 1.
constexpr HalfInt operator""_h2(unsigned long long twice) {
  return HalfInt::from_twice(static_cast<int>(twice));
}
}  // namespace literals

}  // namespace symcoupling
