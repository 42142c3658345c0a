#ifndef NCGEO_RATIONAL_HPP
#define NCGEO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <vector>

namespace ncgeo {

/// Exact rational scalar used wherever results must be bit-for-bit zero
/// rather than merely small. Every finite double converts losslessly.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Exact conversion: a finite double is a dyadic rational.
Rational rational_from_double(double x);

/// Parse a decimal/scientific literal ("0.1", "-3e-2", "5", "3/4") exactly.
/// Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

/// Render as "p/q" (or "p" when q=1).
std::string rational_to_string(const Rational& r);

/// Complex number over exact rationals. Only the ring operations are
/// provided; no division by complex values is needed anywhere.
struct RationalComplex {
  Rational re{0};
  Rational im{0};

  RationalComplex() = default;
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static RationalComplex real(Rational r) { return {std::move(r), Rational(0)}; }
  static RationalComplex imaginary(Rational i) { return {Rational(0), std::move(i)}; }

  bool is_zero() const { return re == 0 && im == 0; }

  RationalComplex conj() const { return {re, -im}; }

  RationalComplex& operator+=(const RationalComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  RationalComplex& operator-=(const RationalComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
  friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  RationalComplex& operator*=(const RationalComplex& o) { return *this = *this * o; }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// Sup norm max(|re|,|im|); exact, so suitable for zero tests.
  Rational sup_abs() const {
    Rational ar = rational_abs(re), ai = rational_abs(im);
    return ar > ai ? ar : ai;
  }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

std::string rational_complex_to_string(const RationalComplex& z);

/// Dense vector of exact rationals (coefficients of linear forms, etc).
using RationalVector = std::vector<Rational>;

}  // namespace ncgeo

#endif
