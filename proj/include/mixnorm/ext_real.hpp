#ifndef MIXNORM_EXT_REAL_HPP
#define MIXNORM_EXT_REAL_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace mixnorm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

/// Extended non-negative real in exact rational form, with a distinguished
/// infinity. Used for the exponents p, q and the derived critical values.
/// Conventions: 1/inf = 0 and 1/0 = inf; indeterminate forms (inf - inf,
/// inf * 0, inf / inf, 0 / 0) throw instead of propagating.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(long long n) : rat_(BigInt(n)) { check_nonneg(); }
  ExtReal(long long num, long long den) : rat_(BigInt(num), BigInt(den)) {
    check_nonneg();
  }
  explicit ExtReal(Rational r) : rat_(std::move(r)) { check_nonneg(); }

  static ExtReal inf() {
    ExtReal e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  bool is_zero() const { return !inf_ && rat_.numerator() == 0; }
  bool is_integer() const { return !inf_ && rat_.denominator() == 1; }

  const Rational& rat() const {
    if (inf_) throw std::domain_error("ExtReal: rational view of inf");
    return rat_;
  }

  double to_double() const;

  ExtReal reciprocal() const;

  /// "a/b", a plain integer, or "inf".
  std::string str() const;

  /// Accepts integers, decimals ("1.9"), rationals ("19/10") and "inf".
  static ExtReal parse(std::string_view s);

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.rat_ == b.rat_;
  }
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    if (a.rat_ < b.rat_) return std::strong_ordering::less;
    if (b.rat_ < a.rat_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator*(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator/(const ExtReal& a, const ExtReal& b);

 private:
  void check_nonneg() const {
    if (rat_.numerator() < 0)
      throw std::domain_error("ExtReal: negative value");
  }

  bool inf_ = false;
  Rational rat_{BigInt(0)};
};

}  // namespace mixnorm

#endif  // MIXNORM_EXT_REAL_HPP
