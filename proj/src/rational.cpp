#include "sievekit/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace sievekit {

Rational rational_from_decimal(const std::string& s) {
  if (s.empty()) throw std::domain_error("empty decimal literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  BigInt num = 0;
  BigInt den = 1;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::domain_error("bad decimal literal: " + s);
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      seen_digit = true;
    } else if (c == '/') {
      // allow plain fractions "a/b"
      Rational lhs(neg ? -num : num, den);
      Rational rhs = rational_from_decimal(s.substr(i + 1));
      if (rhs == 0) throw std::domain_error("division by zero in literal: " + s);
      return lhs / rhs;
    } else {
      throw std::domain_error("bad decimal literal: " + s);
    }
  }
  if (!seen_digit) throw std::domain_error("bad decimal literal: " + s);
  return Rational(neg ? -num : num, den);
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite");
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral
  BigInt num = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(num);
  if (exp > 0)
    r *= Rational(BigInt(1) << exp);
  else if (exp < 0)
    r /= Rational(BigInt(1) << (-exp));
  return r;
}

std::string to_decimal_string(const Rational& r, int digits) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt ip = num / den;
  BigInt rem = num % den;
  std::string out = (neg ? "-" : "") + ip.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + static_cast<int>(rem / den));
      rem %= den;
    }
  }
  return out;
}

}  // namespace sievekit
