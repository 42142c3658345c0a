#ifndef NCGEO_DEFORMATION_HPP
#define NCGEO_DEFORMATION_HPP

#include <optional>
#include <vector>

#include "ncgeo/algebra.hpp"
#include "ncgeo/ncalc.hpp"
#include "ncgeo/rational.hpp"

namespace ncgeo {

/// Real linear form L.x = sum_mu L[mu] x^mu with exact coefficients.
struct LinearForm {
  RationalVector coeff;

  LinearForm() = default;
  explicit LinearForm(RationalVector c) : coeff(std::move(c)) {}
  static LinearForm zeros(int dim) { return LinearForm(RationalVector(dim, Rational(0))); }

  int dim() const { return static_cast<int>(coeff.size()); }
  bool is_zero() const;
  double eval(const std::vector<double>& x) const;
  Rational eval_exact(const RationalVector& x) const;

  LinearForm& operator+=(const LinearForm& o);
  friend LinearForm operator*(const Rational& s, LinearForm f);
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Skew-symmetric deformation matrix Theta, validated on construction.
class DeformationMatrix {
 public:
  explicit DeformationMatrix(std::vector<RationalVector> entries);
  static DeformationMatrix zero(int dim);
  static DeformationMatrix from_doubles(const std::vector<std::vector<double>>& entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  const Rational& at(int mu, int nu) const { return entries_[mu][nu]; }

  /// Row contraction (Theta x)_mu = sum_nu Theta_{mu nu} x^nu as a linear form in x.
  LinearForm row_form(int mu) const;

  bool is_zero() const;
  /// True when only time-space entries are populated (Theta_{ij} = 0).
  bool spatial_block_zero() const;
  /// True when the time row/column vanishes (Theta_{0j} = 0).
  bool time_row_zero() const;

 private:
  std::vector<RationalVector> entries_;
};

/// Scalar prefactor of the form exp(log_const + L.x); strictly positive as
/// a formal expression, so only the exponent is stored.
struct ExpPrefactor {
  Rational log_const{0};
  LinearForm linear;

  static ExpPrefactor one(int dim) { return {Rational(0), LinearForm::zeros(dim)}; }
  bool is_one() const { return log_const == 0 && linear.is_zero(); }
  ExpPrefactor& operator*=(const ExpPrefactor& o);
  double eval(const std::vector<double>& x) const;
  friend bool operator==(const ExpPrefactor&, const ExpPrefactor&) = default;
};

/// prefactor * dX^index, the shape produced by the adjoint action on a
/// single differential.
struct ScaledDifferential {
  int index;
  ExpPrefactor prefactor;
};

/// Exponential-of-coordinates prefactor times a word of differentials:
/// the closed form of warped convolution for this algebra class.
struct DeformedOperator {
  ExpPrefactor prefactor;  // formal exponential of the coordinate operators
  NCWord differentials;

  friend bool operator==(const DeformedOperator&, const DeformedOperator&) = default;
};

/// Diagonal metric g_mumu = sign_mu * exp(L_mu . x); signature (+,-,...,-).
struct DeformedMetric {
  int dim = 0;
  std::vector<int> signature;
  std::vector<LinearForm> exponents;

  bool is_minkowski() const;
  double component(int mu, const std::vector<double>& x) const;
};

/// Adjoint action of U(Theta x) on dX^mu: formal in x (prefactor exponent is
/// the linear form -a_mu (Theta .)_mu) or evaluated at a concrete point.
ScaledDifferential adjoint_action(int mu, const DeformationMatrix& theta,
                                  const DiagonalAlgebraSpec& spec);
ScaledDifferential adjoint_action(int mu, const DeformationMatrix& theta,
                                  const RationalVector& x, const DiagonalAlgebraSpec& spec);

/// Commutator-series partial sums against the closed-form prefactor.
struct BchCheck {
  double partial_sum;  // sum_{k<=order} z^k / k!
  double closed_form;  // exp(z)
  double residual() const;
};
BchCheck adjoint_action_bch(int mu, const DeformationMatrix& theta, const RationalVector& x,
                            const DiagonalAlgebraSpec& spec, int order);

/// Adjoint-acted square of a differential before the spectral variable is
/// replaced by the coordinate generator. exponential_linear marks the class
/// for which the spectral substitution rule applies.
struct AdjointSquare {
  int index;
  ExpPrefactor prefactor_in_x;
  bool exponential_linear = true;
};

AdjointSquare adjoint_square(int mu, const DeformationMatrix& theta,
                             const DiagonalAlgebraSpec& spec);

/// int dE(x) e^{f(x)} A  ->  e^{f(X)} A: replaces the spectral variable by
/// the coordinate generators. Rejects profiles outside the
/// exponential-linear class, where no closed form is available.
DeformedOperator spectral_substitution(const AdjointSquare& square);

/// Closed-form warped convolution of a word of differentials.
DeformedOperator deform_word(const NCWord& differentials, const DiagonalAlgebraSpec& spec,
                             const DeformationMatrix& theta);

/// Product of closed-form deformed operators. Valid whenever the left word's
/// differential indices are absent from the right prefactor's exponent
/// (always true for the same-index squares this module targets).
DeformedOperator deformed_product(const DeformedOperator& a, const DeformedOperator& b);

/// The deformed line element as a metric: g_mumu = eta_mumu exp(-2 a_mu (Theta x)_mu).
DeformedMetric warp_line_element(const DiagonalAlgebraSpec& spec, const DeformationMatrix& theta);

/// Rieffel product evaluated through the delta-collapse rule: the shifted
/// y-integration produces delta(x) and the adjoint prefactor is evaluated at
/// x = 0, so within this class the product equals the undeformed product.
NCExpression rieffel_product(const NCExpression& a, const NCExpression& b,
                             const RewriteContext& ctx, const DeformationMatrix& theta);

}  // namespace ncgeo

#endif
