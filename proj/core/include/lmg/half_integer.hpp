#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "lmg/rational.hpp"

namespace lmg {

/// Half-integer stored exactly as its doubled value, so j = 7/2 is twice()==7.
/// All multiplet bookkeeping (j, m, J, M) uses this type; no floating-point
/// identity tests on labels.
class HalfInt {
 public:
  constexpr HalfInt() : twice_(0) {}
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // NOLINT(google-explicit-constructor)

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return twice_ / 2.0; }
  Rational rational() const { return Rational(twice_, 2); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  /// Parses "4", "-3" or "7/2"; anything else throws.
  static HalfInt parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return HalfInt(std::stoi(s));
      int num = std::stoi(s.substr(0, slash));
      int den = std::stoi(s.substr(slash + 1));
      if (den == 1) return HalfInt(num);
      if (den == 2) return from_twice(num);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("not a half-integer: '" + s + "'");
  }

 private:
  int twice_;
};

}  // namespace lmg
