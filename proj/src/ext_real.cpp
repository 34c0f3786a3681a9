#include "mixnorm/ext_real.hpp"

#include <cctype>
#include <limits>

namespace mixnorm {

double ExtReal::to_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(rat_.numerator()) /
         static_cast<double>(rat_.denominator());
}

ExtReal ExtReal::reciprocal() const {
  if (inf_) return ExtReal();  // 1/inf = 0
  if (rat_.numerator() == 0) return inf();
  return ExtReal(Rational(rat_.denominator(), rat_.numerator()));
}

std::string ExtReal::str() const {
  if (inf_) return "inf";
  std::string s = rat_.numerator().str();
  if (rat_.denominator() != 1) s += "/" + rat_.denominator().str();
  return s;
}

namespace {

BigInt parse_digits(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("ExtReal: empty number");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("ExtReal: bad character in number");
  return BigInt(std::string(s));
}

}  // namespace

ExtReal ExtReal::parse(std::string_view s) {
  if (s == "inf" || s == "Inf" || s == "INF") return inf();
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(s.substr(0, slash));
    BigInt den = parse_digits(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("ExtReal: zero denominator");
    return ExtReal(Rational(num, den));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    BigInt num = whole.empty() ? BigInt(0) : parse_digits(whole);
    BigInt den = 1;
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("ExtReal: bad character in number");
      num = num * 10 + (c - '0');
      den *= 10;
    }
    return ExtReal(Rational(num, den));
  }
  return ExtReal(Rational(parse_digits(s)));
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.inf_ || b.inf_) return ExtReal::inf();
  return ExtReal(a.rat_ + b.rat_);
}

ExtReal operator-(const ExtReal& a, const ExtReal& b) {
  if (b.inf_) throw std::domain_error("ExtReal: x - inf is indeterminate here");
  if (a.inf_) return ExtReal::inf();
  if (a.rat_ < b.rat_)
    throw std::domain_error("ExtReal: negative difference");
  return ExtReal(a.rat_ - b.rat_);
}

ExtReal operator*(const ExtReal& a, const ExtReal& b) {
  if (a.inf_ || b.inf_) {
    if (a.is_zero() || b.is_zero())
      throw std::domain_error("ExtReal: inf * 0");
    return ExtReal::inf();
  }
  return ExtReal(a.rat_ * b.rat_);
}

ExtReal operator/(const ExtReal& a, const ExtReal& b) {
  if (a.inf_ && b.inf_) throw std::domain_error("ExtReal: inf / inf");
  if (b.inf_) return ExtReal();
  if (a.inf_) return ExtReal::inf();
  if (b.is_zero()) {
    if (a.is_zero()) throw std::domain_error("ExtReal: 0 / 0");
    return ExtReal::inf();
  }
  return ExtReal(a.rat_ / b.rat_);
}

}  // namespace mixnorm
