#include "symcoupling/half_int.hpp"

#include <cctype>
#include <charconv>

namespace symcoupling {

namespace {

bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void bad_token(std::string_view token) {
  throw DomainError("not a half-integer: '" + std::string(token) + "'");
}

}  // namespace

HalfInt HalfInt::parse(std::string_view token) {
  constexpr long kLimit = 1L << 28;
  long twice = 0;
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    long num = 0;
    long den = 0;
    if (!parse_int(token.substr(0, slash), num) || !parse_int(token.substr(slash + 1), den))
      bad_token(token);
    if (den == 1) {
      twice = 2 * num;
    } else if (den == 2) {
      twice = num;
    } else {
      bad_token(token);
    }
  } else if (auto dot = token.find('.'); dot != std::string_view::npos) {
    std::string_view whole = token.substr(0, dot);
    std::string_view frac = token.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    long w = 0;
    if (whole.empty()) {
      w = 0;
    } else if (!parse_int(whole, w) || w < 0) {
      bad_token(token);
    }
    // Trailing zeros are fine ("1.50"); anything other than .0 or .5 is not.
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    long half = 0;
    if (frac.empty()) {
      half = 0;
    } else if (frac == "5") {
      half = 1;
    } else {
      bad_token(token);
    }
    twice = 2 * w + half;
    if (negative) twice = -twice;
  } else {
    long v = 0;
    if (!parse_int(token, v)) bad_token(token);
    twice = 2 * v;
  }
  if (twice > kLimit || twice < -kLimit) bad_token(token);
  return HalfInt(static_cast<int>(twice));
}

int HalfInt::as_int() const {
  if (!is_integer()) throw DomainError("half-odd value " + str() + " used where an integer is required");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace symcoupling
