#ifndef NCGEO_ALGEBRA_HPP
#define NCGEO_ALGEBRA_HPP

#include <array>
#include <complex>
#include <vector>

#include "ncgeo/rational.hpp"

namespace ncgeo {

/// Structure constants of the coordinate-differential commutators
/// [x^mu, dx^nu] = sum_sigma C^{mu nu}_sigma dx^sigma.
///
/// Every entry is purely imaginary; only the imaginary parts are stored,
/// as exact rationals, so consistency residuals are exact zeros rather
/// than small floats. The sigma index sums with the plain Euclidean sum.
class StructureConstants {
 public:
  explicit StructureConstants(int dim);

  int dim() const { return dim_; }

  const Rational& im(int mu, int nu, int sigma) const { return im_[flat(mu, nu, sigma)]; }
  void set_im(int mu, int nu, int sigma, Rational value) {
    im_[flat(mu, nu, sigma)] = std::move(value);
  }

  /// Full complex entry i*im.
  std::complex<double> entry(int mu, int nu, int sigma) const {
    return {0.0, to_double(im(mu, nu, sigma))};
  }

  /// True when the diagonal pattern C^{mu mu}_mu is the only nonzero one.
  bool is_diagonal_pattern() const;

 private:
  std::size_t flat(int mu, int nu, int sigma) const {
    return (static_cast<std::size_t>(mu) * dim_ + nu) * dim_ + sigma;
  }

  int dim_;
  std::vector<Rational> im_;
};

/// Diagonal algebra [x^mu, dx^nu] = i a^mu delta^{mu nu} dx^nu.
/// Faithfulness of the representation requires every a^mu != 0.
struct DiagonalAlgebraSpec {
  RationalVector a;

  explicit DiagonalAlgebraSpec(RationalVector coeffs) : a(std::move(coeffs)) {}
  explicit DiagonalAlgebraSpec(const std::vector<double>& coeffs);

  int dim() const { return static_cast<int>(a.size()); }
};

/// Two-dimensional extension with six real constants:
///   [X^0,dX^0] = i(a dX^0 + e dX),  [X^0,dX] = [X,dX^0] = i(r dX^0 + f dX),
///   [X,dX] = i(s dX^0 + h dX).
struct Extended2DAlgebraSpec {
  Rational a, e, f, h, r, s;
};

StructureConstants make_diagonal(const DiagonalAlgebraSpec& spec);
StructureConstants make_extended2d(const Extended2DAlgebraSpec& spec);

/// Exact test of C^{mu nu}_sigma = C^{nu mu}_sigma.
bool check_symmetry(const StructureConstants& c);

struct JacobiReport {
  Rational max_residual;  // max |sum_sigma (C^{mn}_s C^{ls}_k - C^{ln}_s C^{ms}_k)|
  bool consistent() const { return max_residual == 0; }
  double residual_double() const { return to_double(max_residual); }
};

/// Brute-force evaluation of the quadratic consistency conditions over all
/// (mu, nu, lambda, kappa). Exact in rational arithmetic.
JacobiReport check_jacobi(const StructureConstants& c);

/// The three constraint polynomials of the extended 2D algebra:
///   (e s - r f,  f(a-f) + e(h-r),  r(r-h) + s(f-a)).
std::array<Rational, 3> extended_constraints(const Extended2DAlgebraSpec& spec);

}  // namespace ncgeo

#endif
