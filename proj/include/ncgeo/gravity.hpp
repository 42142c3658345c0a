#ifndef NCGEO_GRAVITY_HPP
#define NCGEO_GRAVITY_HPP

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "ncgeo/deformation.hpp"
#include "ncgeo/rational.hpp"
#include "ncgeo/spacetimes.hpp"

namespace ncgeo {

/// Concrete scale factor used when symbolic results are sampled numerically.
/// derivative(0, t) is a(t) itself.
class ScaleFactor {
 public:
  virtual ~ScaleFactor() = default;
  virtual double derivative(int order, double t) const = 0;
};

class PowerLawScale : public ScaleFactor {  // a(t) = t^k
 public:
  explicit PowerLawScale(double k) : k_(k) {}
  double derivative(int order, double t) const override;

 private:
  double k_;
};

class ExpScale : public ScaleFactor {  // a(t) = e^{h t}
 public:
  explicit ExpScale(double h) : h_(h) {}
  double derivative(int order, double t) const override;

 private:
  double h_;
};

class ConstScale : public ScaleFactor {  // a(t) = c
 public:
  explicit ConstScale(double c = 1.0) : c_(c) {}
  double derivative(int order, double t) const override { return order == 0 ? c_ : 0.0; }

 private:
  double c_;
};

class LinearScale : public ScaleFactor {  // a(t) = a0 + s t
 public:
  LinearScale(double a0, double s) : a0_(a0), s_(s) {}
  double derivative(int order, double t) const override {
    if (order == 0) return a0_ + s_ * t;
    return order == 1 ? s_ : 0.0;
  }

 private:
  double a0_, s_;
};

/// One term of the metric function grammar:
///   coeff * a^{pow_a} * prod_k (d^{k+1} a / dt^{k+1})^{dpow[k]} * exp(L . x)
/// with x = (t, x^1, ..., x^{n}). The grammar is closed under d/dt and
/// d/dx^i, which is what makes a general CAS unnecessary here.
struct TermKey {
  int pow_a = 0;            // may be negative
  std::vector<int> dpow;    // nonnegative powers of successive derivatives
  RationalVector expo;      // exponent linear form over all d coordinates

  friend bool operator<(const TermKey& a, const TermKey& b);
  friend bool operator==(const TermKey& a, const TermKey& b);
};

class TermSum {
 public:
  explicit TermSum(int dim) : dim_(dim) {}
  static TermSum zero(int dim) { return TermSum(dim); }
  static TermSum constant(int dim, Rational c);
  /// coeff * a^pow_a * adot^pow_adot * exp(expo . x)
  static TermSum single(int dim, Rational coeff, int pow_a, std::vector<int> dpow,
                        RationalVector expo);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<TermKey, Rational>& terms() const { return terms_; }

  void add(const TermKey& key, const Rational& coeff);

  TermSum& operator+=(const TermSum& o);
  TermSum& operator-=(const TermSum& o);
  friend TermSum operator+(TermSum a, const TermSum& b) { return a += b; }
  friend TermSum operator-(TermSum a, const TermSum& b) { return a -= b; }
  friend TermSum operator*(const TermSum& a, const TermSum& b);
  friend TermSum operator*(const Rational& s, const TermSum& t);
  friend bool operator==(const TermSum& a, const TermSum& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Partial derivative along coordinate mu (0 is t, chain rule through the
  /// scale-factor powers; spatial directions touch only the exponent).
  TermSum derivative(int mu) const;

  /// Reciprocal of a single term carrying no scale-factor derivatives.
  TermSum inverse_single() const;

  /// Largest |coefficient| over the terms, exact.
  Rational sup_abs() const;

  double eval(const std::vector<double>& point, const ScaleFactor& a) const;

 private:
  int dim_;
  std::map<TermKey, Rational> terms_;
};

/// Diagonal metric whose entries live in the term grammar; each entry must
/// be a single invertible term.
struct DiagonalMetric {
  int dim = 0;
  std::vector<TermSum> entries;

  static DiagonalMetric minkowski(int dim);
  static DiagonalMetric from_deformed(const DeformedMetric& g);
  static DiagonalMetric from_frw(const FRWMetric& g);
  static DiagonalMetric from_ultrastatic(const UltraStaticMetric& g);
  /// Formal scale factor: g00 = exp(-2 b.x), g_ii = -a(t)^2.
  static DiagonalMetric from_deformed_frw(const DeformedFRWMetric& g);
  /// Flat FRW with a formal a(t): diag(1, -a^2, ...).
  static DiagonalMetric formal_frw(int dim);

  double component(int mu, const std::vector<double>& point, const ScaleFactor& a) const;
};

struct CurvatureReport {
  int dim = 0;
  std::vector<TermSum> christoffel;  // Gamma^l_{mn}, flattened l*d*d + m*d + n
  std::vector<TermSum> ricci;        // R_{mn}, flattened m*d + n
  TermSum ricci_scalar{0};
  std::vector<TermSum> einstein;     // G_{mn}

  const TermSum& gamma(int l, int m, int n) const { return christoffel[(l * dim + m) * dim + n]; }
  const TermSum& ricci_at(int m, int n) const { return ricci[m * dim + n]; }
  const TermSum& einstein_at(int m, int n) const { return einstein[m * dim + n]; }
};

/// Exact Christoffel symbols of a diagonal metric in the term grammar.
std::vector<TermSum> christoffel(const DiagonalMetric& g);

/// Exact Ricci, Ricci scalar, and Einstein tensor.
CurvatureReport einstein_tensor(const DiagonalMetric& g);

/// Residuals of the field equations of the deformed FRW metric against
/// their stated forms, with the fluid variables eliminated through the 00
/// and spatial equations:
///   residual_00  = (G00 + Lambda g00) - (3 adot^2/a^2 + Lambda g00)
///   residual_0i  = G_0i - (-2 (adot/a) b_i)
///   residual_P,i = [2 addot/a + adot^2/a^2 + (2/3) b^2 g00 + Lambda g00]
///                  + (g00/a^2) (G_ii + Lambda g_ii)
struct FieldEquationResiduals {
  TermSum residual_00{0};
  std::vector<TermSum> residual_momentum;
  std::vector<TermSum> residual_pressure;
  /// Scaling-detected leading power of b in the pressure residual
  /// (-1 when the residual vanishes identically).
  int pressure_leading_b_order = -1;
  /// Raw numeric residuals G + Lambda g - kappa T at the sample point with
  /// the supplied fluid values. T_00 = rho g00, T_ij = -P g_ij, and T_0i is
  /// fixed by the momentum equation itself.
  std::vector<std::vector<double>> numeric_residual;
};

FieldEquationResiduals verify_field_equations(const DeformedFRWMetric& g, const Rational& lambda,
                                              double kappa, double rho, double pressure,
                                              const std::vector<double>& sample_point,
                                              const ScaleFactor& a);

/// Metric sampler for the finite-difference oracle: g_{mu nu}(point).
using MetricSampler = std::function<double(int, int, const std::vector<double>&)>;

struct OracleResult {
  std::vector<std::vector<double>> einstein;  // Richardson-combined G_{mu nu}
  double richardson_disagreement;             // max |G(h) - G(h/2)| seen
};

/// Independent numeric Einstein tensor from second-order central
/// differences of metric samples at two step sizes, Richardson combined.
/// The sampler is the only input; nothing from the symbolic path enters.
OracleResult numeric_curvature_oracle(const MetricSampler& g, int dim,
                                      const std::vector<double>& point, double h);

/// Numeric contracted-Bianchi residual max_nu |nabla_mu G^{mu nu}| of the
/// symbolic Einstein tensor, normalized by max(1, max |G^{mu nu}|).
double bianchi_residual(const CurvatureReport& rep, const DiagonalMetric& g,
                        const std::vector<double>& point, const ScaleFactor& a, double h);

/// Leading power of s in residual(s) as s -> 0, detected from exact
/// coefficient norms at s = 1, 1/2, ..., 2^{-probes}; -1 if identically 0.
int leading_scaling_order(const std::function<TermSum(const Rational&)>& residual_at, int probes = 5);

}  // namespace ncgeo

#endif
