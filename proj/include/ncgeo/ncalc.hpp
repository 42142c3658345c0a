#ifndef NCGEO_NCALC_HPP
#define NCGEO_NCALC_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ncgeo/algebra.hpp"
#include "ncgeo/rational.hpp"

namespace ncgeo {

enum class GenKind : std::uint8_t { coordinate, differential };

/// One generator x^mu or dx^mu of the universal differential algebra.
struct Generator {
  GenKind kind;
  int index;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator coord(int mu) { return {GenKind::coordinate, mu}; }
inline Generator diff(int mu) { return {GenKind::differential, mu}; }

/// Ordered word in the generators; arbitrary pre-normalization.
using NCWord = std::vector<Generator>;

int differential_degree(const NCWord& word);

/// Rewrite rules shared by all ncalc operations: structure constants for the
/// coordinate-differential commutators plus an optional constant Moyal
/// matrix Omega for coordinate-coordinate commutators [x^mu,x^nu] = i Omega^{mu nu}.
class RewriteContext {
 public:
  RewriteContext(StructureConstants c, int max_word_length = 16, int grading_cap = 2);

  /// Installs [x^0, x^j] = i omega0j[j-1]; all other coordinate pairs commute.
  void set_moyal_timespace(const RationalVector& omega0j);
  /// Full skew matrix form.
  void set_moyal(std::vector<RationalVector> omega);

  const StructureConstants& constants() const { return c_; }
  const Rational& omega(int mu, int nu) const { return omega_[mu][nu]; }
  bool has_moyal() const { return has_moyal_; }
  int dim() const { return c_.dim(); }
  int max_word_length() const { return max_word_length_; }
  int grading_cap() const { return grading_cap_; }

 private:
  StructureConstants c_;
  std::vector<RationalVector> omega_;
  bool has_moyal_ = false;
  int max_word_length_;
  int grading_cap_;
};

/// Finite complex-rational combination of words. Canonical after
/// normal_form: coordinates precede differentials, coordinates sorted by
/// ascending index, differentials kept in their original relative order
/// (no relations among differentials are imposed).
class NCExpression {
 public:
  NCExpression() = default;

  static NCExpression zero() { return {}; }
  static NCExpression unit(RationalComplex coeff = RationalComplex::real(1));
  static NCExpression monomial(NCWord word, RationalComplex coeff = RationalComplex::real(1));
  static NCExpression generator(Generator g);

  const std::map<NCWord, RationalComplex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const NCWord& word, const RationalComplex& coeff);

  NCExpression& operator+=(const NCExpression& other);
  NCExpression& operator-=(const NCExpression& other);
  friend NCExpression operator+(NCExpression a, const NCExpression& b) { return a += b; }
  friend NCExpression operator-(NCExpression a, const NCExpression& b) { return a -= b; }
  friend NCExpression operator*(const RationalComplex& c, const NCExpression& e);
  /// Free (unreduced) concatenation product; normal_form reduces it.
  friend NCExpression operator*(const NCExpression& a, const NCExpression& b);
  friend bool operator==(const NCExpression& a, const NCExpression& b) {
    return a.terms_ == b.terms_;
  }

  /// Largest |coefficient| (sup over re/im), exact.
  Rational sup_abs() const;

 private:
  std::map<NCWord, RationalComplex> terms_;
};

/// Canonical form under the rewrite system
///   dx^nu x^mu   -> x^mu dx^nu - sum_sigma C^{mu nu}_sigma dx^sigma
///   x^mu x^nu    -> x^nu x^mu + i Omega^{mu nu}        (mu > nu)
/// The result is independent of the order rewrites are applied in; the
/// randomized variant below exists to probe exactly that.
NCExpression normal_form(const NCExpression& e, const RewriteContext& ctx);

/// Same reduction, but at every step a uniformly random reducible position
/// is rewritten first. Confluence means the result equals normal_form().
NCExpression normal_form_randomized(const NCExpression& e, const RewriteContext& ctx,
                                    std::mt19937_64& rng);

/// normal_form(AB - BA).
NCExpression commutator(const NCExpression& a, const NCExpression& b, const RewriteContext& ctx);

/// Universal differential: d(x^mu) = dx^mu, d(dx^mu) = 0, d(1) = 0, extended
/// as a graded derivation, d(w1 w2) = (dw1) w2 + (-1)^{deg w1} w1 (dw2).
/// Words whose differential degree would exceed the grading cap are rejected.
NCExpression apply_d(const NCExpression& e, const RewriteContext& ctx);

/// Graded anti-automorphism: reverse each word, conjugate coefficients.
NCExpression star(const NCExpression& e);

/// Round-trip printable grammar: terms like "x0*dx1 + 2i*x1*x1*dx0".
/// Whitespace-insensitive; coefficients are decimal or p/q rationals with an
/// optional trailing i; parenthesized sums are allowed as factors.
NCExpression parse_expression(const std::string& text, int dim);
std::string format_expression(const NCExpression& e);

}  // namespace ncgeo

#endif
