#include "ncgeo/deformation.hpp"

#include <cmath>
#include <cstdlib>

#include "ncgeo/errors.hpp"

namespace ncgeo {

bool LinearForm::is_zero() const {
  for (const Rational& c : coeff)
    if (c != 0) return false;
  return true;
}

double LinearForm::eval(const std::vector<double>& x) const {
  if (x.size() != coeff.size())
    throw Error(ErrorCode::invalid_argument, "point dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < coeff.size(); ++i) s += to_double(coeff[i]) * x[i];
  return s;
}

Rational LinearForm::eval_exact(const RationalVector& x) const {
  if (x.size() != coeff.size())
    throw Error(ErrorCode::invalid_argument, "point dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < coeff.size(); ++i) s += coeff[i] * x[i];
  return s;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (o.coeff.size() != coeff.size())
    throw Error(ErrorCode::invalid_argument, "linear form dimension mismatch");
  for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] += o.coeff[i];
  return *this;
}

LinearForm operator*(const Rational& s, LinearForm f) {
  for (Rational& c : f.coeff) c *= s;
  return f;
}

DeformationMatrix::DeformationMatrix(std::vector<RationalVector> entries)
    : entries_(std::move(entries)) {
  const int d = dim();
  if (d < 1) throw Error(ErrorCode::invalid_argument, "empty deformation matrix");
  for (int i = 0; i < d; ++i)
    if (static_cast<int>(entries_[i].size()) != d)
      throw Error(ErrorCode::invalid_argument, "deformation matrix must be square");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (entries_[i][j] != -entries_[j][i])
        throw Error(ErrorCode::non_skew, "Theta + Theta^T != 0 at entry (" + std::to_string(i) +
                                             "," + std::to_string(j) + ")");
}

DeformationMatrix DeformationMatrix::zero(int dim) {
  return DeformationMatrix(std::vector<RationalVector>(dim, RationalVector(dim, Rational(0))));
}

DeformationMatrix DeformationMatrix::from_doubles(const std::vector<std::vector<double>>& entries) {
  std::vector<RationalVector> rows;
  rows.reserve(entries.size());
  for (const auto& row : entries) {
    RationalVector r;
    r.reserve(row.size());
    for (double v : row) r.push_back(rational_from_double(v));
    rows.push_back(std::move(r));
  }
  return DeformationMatrix(std::move(rows));
}

LinearForm DeformationMatrix::row_form(int mu) const { return LinearForm(entries_[mu]); }

bool DeformationMatrix::is_zero() const {
  for (const auto& row : entries_)
    for (const Rational& v : row)
      if (v != 0) return false;
  return true;
}

bool DeformationMatrix::spatial_block_zero() const {
  for (int i = 1; i < dim(); ++i)
    for (int j = 1; j < dim(); ++j)
      if (entries_[i][j] != 0) return false;
  return true;
}

bool DeformationMatrix::time_row_zero() const {
  for (int j = 0; j < dim(); ++j)
    if (entries_[0][j] != 0) return false;
  return true;
}

ExpPrefactor& ExpPrefactor::operator*=(const ExpPrefactor& o) {
  log_const += o.log_const;
  linear += o.linear;
  return *this;
}

double ExpPrefactor::eval(const std::vector<double>& x) const {
  return std::exp(to_double(log_const) + linear.eval(x));
}

bool DeformedMetric::is_minkowski() const {
  for (const LinearForm& f : exponents)
    if (!f.is_zero()) return false;
  return true;
}

double DeformedMetric::component(int mu, const std::vector<double>& x) const {
  return signature[mu] * std::exp(exponents[mu].eval(x));
}

namespace {

void require_compatible(int mu, const DeformationMatrix& theta, const DiagonalAlgebraSpec& spec) {
  if (theta.dim() != spec.dim())
    throw Error(ErrorCode::invalid_argument, "Theta and algebra dimensions differ");
  if (mu < 0 || mu >= spec.dim())
    throw Error(ErrorCode::invalid_argument, "component index out of range");
  for (const Rational& a : spec.a)
    if (a == 0) throw Error(ErrorCode::faithfulness, "algebra has a zero a-component");
}

}  // namespace

ScaledDifferential adjoint_action(int mu, const DeformationMatrix& theta,
                                  const DiagonalAlgebraSpec& spec) {
  require_compatible(mu, theta, spec);
  ExpPrefactor pref{Rational(0), Rational(-spec.a[mu]) * theta.row_form(mu)};
  return {mu, std::move(pref)};
}

ScaledDifferential adjoint_action(int mu, const DeformationMatrix& theta,
                                  const RationalVector& x, const DiagonalAlgebraSpec& spec) {
  ScaledDifferential formal = adjoint_action(mu, theta, spec);
  ExpPrefactor evaluated{formal.prefactor.linear.eval_exact(x),
                         LinearForm::zeros(theta.dim())};
  return {mu, std::move(evaluated)};
}

double BchCheck::residual() const { return std::abs(partial_sum - closed_form); }

BchCheck adjoint_action_bch(int mu, const DeformationMatrix& theta, const RationalVector& x,
                            const DiagonalAlgebraSpec& spec, int order) {
  require_compatible(mu, theta, spec);
  // Nested commutators collapse to powers: the k-th term is z^k/k! with
  // z = -a_mu (Theta x)_mu.
  const double z = to_double(Rational(-spec.a[mu]) * theta.row_form(mu).eval_exact(x));
  double sum = 0.0, term = 1.0;
  for (int k = 0; k <= order; ++k) {
    sum += term;
    term *= z / (k + 1);
  }
  return {sum, std::exp(z)};
}

AdjointSquare adjoint_square(int mu, const DeformationMatrix& theta,
                             const DiagonalAlgebraSpec& spec) {
  ScaledDifferential single = adjoint_action(mu, theta, spec);
  ExpPrefactor squared = single.prefactor;
  squared *= single.prefactor;
  return {mu, std::move(squared), true};
}

DeformedOperator spectral_substitution(const AdjointSquare& square) {
  if (!square.exponential_linear)
    throw Error(ErrorCode::unsupported_class,
                "spectral substitution requires an exponential-linear adjoint action");
  // The spectral variable x is replaced by the coordinate generators; the
  // exponent is reused verbatim, now read as a formal exponential of X.
  return {square.prefactor_in_x, NCWord{diff(square.index), diff(square.index)}};
}

DeformedOperator deform_word(const NCWord& differentials, const DiagonalAlgebraSpec& spec,
                             const DeformationMatrix& theta) {
  ExpPrefactor pref = ExpPrefactor::one(theta.dim());
  for (const Generator& g : differentials) {
    if (g.kind != GenKind::differential)
      throw Error(ErrorCode::unsupported_class, "deform_word expects a word of differentials");
    require_compatible(g.index, theta, spec);
    pref *= ExpPrefactor{Rational(0), Rational(-spec.a[g.index]) * theta.row_form(g.index)};
  }
  return {std::move(pref), differentials};
}

DeformedOperator deformed_product(const DeformedOperator& a, const DeformedOperator& b) {
  for (const Generator& g : a.differentials)
    if (b.prefactor.linear.coeff.at(g.index) != 0)
      throw Error(ErrorCode::unsupported_class,
                  "differential dX^" + std::to_string(g.index) +
                      " does not commute with the right prefactor");
  DeformedOperator out;
  out.prefactor = a.prefactor;
  out.prefactor *= b.prefactor;
  out.differentials = a.differentials;
  out.differentials.insert(out.differentials.end(), b.differentials.begin(),
                           b.differentials.end());
  return out;
}

DeformedMetric warp_line_element(const DiagonalAlgebraSpec& spec, const DeformationMatrix& theta) {
  const int d = spec.dim();
  if (theta.dim() != d)
    throw Error(ErrorCode::invalid_argument, "Theta and algebra dimensions differ");
  DeformedMetric g;
  g.dim = d;
  g.signature.resize(d);
  g.exponents.reserve(d);
  for (int mu = 0; mu < d; ++mu) {
    g.signature[mu] = (mu == 0) ? 1 : -1;
    // Only the (dX^mu)^2 terms survive against the flat metric, so each
    // component picks up the squared adjoint prefactor.
    g.exponents.push_back(spectral_substitution(adjoint_square(mu, theta, spec)).prefactor.linear);
  }
  return g;
}

NCExpression rieffel_product(const NCExpression& a, const NCExpression& b,
                             const RewriteContext& ctx, const DeformationMatrix& theta) {
  if (!ctx.constants().is_diagonal_pattern())
    throw Error(ErrorCode::unsupported_class,
                "Rieffel product collapse needs the diagonal algebra class");
  if (theta.dim() != ctx.dim())
    throw Error(ErrorCode::invalid_argument, "Theta and context dimensions differ");
  RationalVector a_coeffs(ctx.dim());
  for (int mu = 0; mu < ctx.dim(); ++mu) a_coeffs[mu] = ctx.constants().im(mu, mu, mu);
  const DiagonalAlgebraSpec spec{a_coeffs};
  const RationalVector origin(ctx.dim(), Rational(0));

  NCExpression out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      // After shifting variables the y-integral collapses to delta(x); what
      // remains of the adjoint prefactor of the left factor is its value at
      // x = 0, which is exp(0) = 1 for every word in this class.
      Rational log_at_origin(0);
      for (const Generator& g : wa)
        if (g.kind == GenKind::differential)
          log_at_origin +=
              (Rational(-spec.a[g.index]) * theta.row_form(g.index)).eval_exact(origin);
      if (log_at_origin != 0)
        throw Error(ErrorCode::unsupported_class, "adjoint prefactor fails to collapse");
      NCWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return normal_form(out, ctx);
}

}  // namespace ncgeo
