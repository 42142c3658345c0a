#include "ncgeo/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ncgeo {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double has no rational value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  // 53 doublings make the mantissa integral.
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

namespace {

// digits -> integer, returns number of digits consumed
std::size_t read_digits(const std::string& s, std::size_t pos, BigInt& out, int& count) {
  count = 0;
  out = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    out = out * 10 + (s[pos] - '0');
    ++pos;
    ++count;
  }
  return pos;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed numeric literal: '" + text + "'");
  };
  if (text.empty()) return fail();

  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }

  BigInt int_part = 0, frac_part = 0;
  int int_digits = 0, frac_digits = 0;
  pos = read_digits(text, pos, int_part, int_digits);
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    pos = read_digits(text, pos, frac_part, frac_digits);
  }
  if (int_digits == 0 && frac_digits == 0) return fail();

  // plain fraction "p/q"
  if (pos < text.size() && text[pos] == '/' && frac_digits == 0) {
    ++pos;
    BigInt den = 0;
    int den_digits = 0;
    pos = read_digits(text, pos, den, den_digits);
    if (den_digits == 0 || pos != text.size() || den == 0) return fail();
    Rational r(int_part, den);
    return neg ? Rational(-r) : r;
  }

  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      eneg = text[pos] == '-';
      ++pos;
    }
    BigInt e = 0;
    int e_digits = 0;
    pos = read_digits(text, pos, e, e_digits);
    if (e_digits == 0 || e > 100000) return fail();
    exponent = e.convert_to<long>();
    if (eneg) exponent = -exponent;
  }
  if (pos != text.size()) return fail();

  BigInt num = int_part;
  for (int i = 0; i < frac_digits; ++i) num *= 10;
  num += frac_part;

  long ten_power = exponent - frac_digits;
  Rational r(num);
  BigInt p10 = 1;
  for (long i = 0; i < std::labs(ten_power); ++i) p10 *= 10;
  if (ten_power >= 0) {
    r *= Rational(p10);
  } else {
    r /= Rational(p10);
  }
  return neg ? Rational(-r) : r;
}

std::string rational_to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string rational_complex_to_string(const RationalComplex& z) {
  if (z.im == 0) return rational_to_string(z.re);
  if (z.re == 0) return rational_to_string(z.im) + "i";
  std::string s = rational_to_string(z.re);
  s += (z.im > 0) ? "+" : "-";
  s += rational_to_string(rational_abs(z.im)) + "i";
  return s;
}

}  // namespace ncgeo
