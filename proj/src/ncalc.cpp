#include "ncgeo/ncalc.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ncgeo/errors.hpp"

namespace ncgeo {

int differential_degree(const NCWord& word) {
  return static_cast<int>(
      std::count_if(word.begin(), word.end(),
                    [](const Generator& g) { return g.kind == GenKind::differential; }));
}

RewriteContext::RewriteContext(StructureConstants c, int max_word_length, int grading_cap)
    : c_(std::move(c)), max_word_length_(max_word_length), grading_cap_(grading_cap) {
  if (!check_symmetry(c_))
    throw Error(ErrorCode::inconsistent_algebra, "structure constants not symmetric");
  if (!check_jacobi(c_).consistent())
    throw Error(ErrorCode::inconsistent_algebra, "structure constants fail the Jacobi conditions");
  omega_.assign(dim(), RationalVector(dim(), Rational(0)));
}

void RewriteContext::set_moyal_timespace(const RationalVector& omega0j) {
  if (static_cast<int>(omega0j.size()) != dim() - 1)
    throw Error(ErrorCode::invalid_argument, "need dim-1 time-space Moyal entries");
  for (int j = 1; j < dim(); ++j) {
    omega_[0][j] = omega0j[j - 1];
    omega_[j][0] = -omega0j[j - 1];
  }
  has_moyal_ = true;
}

void RewriteContext::set_moyal(std::vector<RationalVector> omega) {
  if (static_cast<int>(omega.size()) != dim())
    throw Error(ErrorCode::invalid_argument, "Moyal matrix dimension mismatch");
  for (int i = 0; i < dim(); ++i) {
    if (static_cast<int>(omega[i].size()) != dim())
      throw Error(ErrorCode::invalid_argument, "Moyal matrix dimension mismatch");
    for (int j = 0; j < dim(); ++j)
      if (omega[i][j] != -omega[j][i])
        throw Error(ErrorCode::non_skew, "Moyal matrix must be skew-symmetric");
  }
  omega_ = std::move(omega);
  has_moyal_ = true;
}

NCExpression NCExpression::unit(RationalComplex coeff) { return monomial({}, std::move(coeff)); }

NCExpression NCExpression::monomial(NCWord word, RationalComplex coeff) {
  NCExpression e;
  e.add_term(word, coeff);
  return e;
}

NCExpression NCExpression::generator(Generator g) { return monomial({g}); }

void NCExpression::add_term(const NCWord& word, const RationalComplex& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCExpression& NCExpression::operator+=(const NCExpression& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCExpression& NCExpression::operator-=(const NCExpression& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCExpression operator*(const RationalComplex& c, const NCExpression& e) {
  NCExpression out;
  if (c.is_zero()) return out;
  for (const auto& [w, k] : e.terms()) out.add_term(w, c * k);
  return out;
}

NCExpression operator*(const NCExpression& a, const NCExpression& b) {
  NCExpression out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      NCWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

Rational NCExpression::sup_abs() const {
  Rational worst(0);
  for (const auto& [w, c] : terms_) {
    Rational m = c.sup_abs();
    if (m > worst) worst = m;
  }
  return worst;
}

namespace {

bool reducible_at(const NCWord& w, std::size_t p) {
  const Generator& g1 = w[p];
  const Generator& g2 = w[p + 1];
  if (g1.kind == GenKind::differential && g2.kind == GenKind::coordinate) return true;
  if (g1.kind == GenKind::coordinate && g2.kind == GenKind::coordinate &&
      g1.index > g2.index)
    return true;
  return false;
}

std::vector<std::size_t> reducible_positions(const NCWord& w) {
  std::vector<std::size_t> out;
  if (w.size() < 2) return out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (reducible_at(w, p)) out.push_back(p);
  return out;
}

using Piece = std::pair<NCWord, RationalComplex>;

// One rewrite at position p. Both rules keep or shrink the word, so the
// (length, inversion-count) measure strictly decreases and reduction halts.
void rewrite_at(const NCWord& w, const RationalComplex& coeff, std::size_t p,
                const RewriteContext& ctx, std::vector<Piece>& out) {
  const Generator g1 = w[p];
  const Generator g2 = w[p + 1];
  if (g1.kind == GenKind::differential) {
    // dx^nu x^mu -> x^mu dx^nu - sum_sigma C^{mu nu}_sigma dx^sigma
    const int nu = g1.index;
    const int mu = g2.index;
    NCWord swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    out.emplace_back(std::move(swapped), coeff);
    const StructureConstants& c = ctx.constants();
    for (int sigma = 0; sigma < ctx.dim(); ++sigma) {
      const Rational& im = c.im(mu, nu, sigma);
      if (im == 0) continue;
      NCWord contracted;
      contracted.reserve(w.size() - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + p);
      contracted.push_back(diff(sigma));
      contracted.insert(contracted.end(), w.begin() + p + 2, w.end());
      out.emplace_back(std::move(contracted), coeff * RationalComplex::imaginary(-im));
    }
  } else {
    // x^mu x^nu -> x^nu x^mu + i Omega^{mu nu}   (mu > nu)
    const int mu = g1.index;
    const int nu = g2.index;
    NCWord swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    out.emplace_back(std::move(swapped), coeff);
    const Rational& om = ctx.omega(mu, nu);
    if (om != 0) {
      NCWord shorter;
      shorter.reserve(w.size() - 2);
      shorter.insert(shorter.end(), w.begin(), w.begin() + p);
      shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
      out.emplace_back(std::move(shorter), coeff * RationalComplex::imaginary(om));
    }
  }
}

void check_word(const NCWord& w, const RewriteContext& ctx) {
  if (static_cast<int>(w.size()) > ctx.max_word_length())
    throw Error(ErrorCode::word_cap_exceeded,
                "word of length " + std::to_string(w.size()) + " exceeds cap " +
                    std::to_string(ctx.max_word_length()));
  for (const Generator& g : w)
    if (g.index < 0 || g.index >= ctx.dim())
      throw Error(ErrorCode::invalid_argument, "generator index out of range");
}

template <typename PickPosition>
NCExpression reduce(const NCExpression& e, const RewriteContext& ctx, PickPosition pick) {
  NCExpression result;
  std::vector<Piece> work;
  for (const auto& [w, c] : e.terms()) {
    check_word(w, ctx);
    work.emplace_back(w, c);
  }
  std::vector<Piece> pieces;
  while (!work.empty()) {
    Piece item = std::move(work.back());
    work.pop_back();
    auto positions = reducible_positions(item.first);
    if (positions.empty()) {
      result.add_term(item.first, item.second);
      continue;
    }
    pieces.clear();
    rewrite_at(item.first, item.second, pick(positions), ctx, pieces);
    for (auto& piece : pieces) work.push_back(std::move(piece));
  }
  return result;
}

}  // namespace

NCExpression normal_form(const NCExpression& e, const RewriteContext& ctx) {
  return reduce(e, ctx, [](const std::vector<std::size_t>& pos) { return pos.front(); });
}

NCExpression normal_form_randomized(const NCExpression& e, const RewriteContext& ctx,
                                    std::mt19937_64& rng) {
  return reduce(e, ctx, [&rng](const std::vector<std::size_t>& pos) {
    std::uniform_int_distribution<std::size_t> pick(0, pos.size() - 1);
    return pos[pick(rng)];
  });
}

NCExpression commutator(const NCExpression& a, const NCExpression& b, const RewriteContext& ctx) {
  return normal_form(a * b - b * a, ctx);
}

NCExpression apply_d(const NCExpression& e, const RewriteContext& ctx) {
  NCExpression out;
  for (const auto& [w, c] : e.terms()) {
    check_word(w, ctx);
    if (differential_degree(w) >= ctx.grading_cap())
      throw Error(ErrorCode::grading_cap_exceeded,
                  "applying d would exceed grading cap " + std::to_string(ctx.grading_cap()));
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].kind == GenKind::differential) {
        sign = -sign;  // graded Leibniz: d anticommutes past one-forms
        continue;
      }
      NCWord term = w;
      term[i] = diff(w[i].index);
      out.add_term(term, sign > 0 ? c : -c);
    }
  }
  return out;
}

NCExpression star(const NCExpression& e) {
  NCExpression out;
  for (const auto& [w, c] : e.terms()) {
    NCWord reversed(w.rbegin(), w.rend());
    out.add_term(reversed, c.conj());
  }
  return out;
}

// ---------------------------------------------------------------------------
// expression grammar
//
//   expr      := term (('+'|'-') term)*
//   term      := ['-'|'+'] factor ('*' factor)*
//   factor    := number ['i'] | 'i' | generator | '(' expr ')'
//   generator := 'x' digits | 'dx' digits
//   number    := decimal, scientific, or p/q literal
// ---------------------------------------------------------------------------

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, int dim) : text_(text), dim_(dim) {}

  NCExpression parse() {
    NCExpression e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::invalid_argument,
                "expression parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NCExpression parse_expr() {
    NCExpression acc = parse_term();
    while (true) {
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  NCExpression parse_term() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    NCExpression acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return neg ? RationalComplex::real(-1) * acc : acc;
  }

  NCExpression parse_factor() {
    const char c = peek();
    if (c == '(') {
      eat('(');
      NCExpression inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'i' && !starts_generator()) {
      ++pos_;
      return NCExpression::unit(RationalComplex::imaginary(Rational(1)));
    }
    if (c == 'x' || c == 'd') return parse_generator();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    fail("expected coefficient, generator, or '('");
  }

  bool starts_generator() {
    // distinguishes bare 'i' from identifiers; only x/dx exist here
    return false;
  }

  NCExpression parse_generator() {
    skip_ws();
    GenKind kind = GenKind::coordinate;
    if (text_[pos_] == 'd') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] != 'x') fail("expected 'x' after 'd'");
      kind = GenKind::differential;
    }
    ++pos_;  // consume 'x'
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected generator index");
    int index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      index = index * 10 + (text_[pos_++] - '0');
    if (index >= dim_) fail("generator index " + std::to_string(index) + " out of range");
    return NCExpression::generator({kind, index});
  }

  NCExpression parse_number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/') {
        ++pos_;
      } else if ((c == 'e' || c == 'E') && pos_ + 1 < text_.size() &&
                 (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
                  text_[pos_ + 1] == '+' || text_[pos_ + 1] == '-')) {
        pos_ += 2;
      } else {
        break;
      }
    }
    Rational value;
    try {
      value = rational_from_string(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return NCExpression::unit(RationalComplex::imaginary(value));
    }
    return NCExpression::unit(RationalComplex::real(value));
  }

  const std::string& text_;
  int dim_;
  std::size_t pos_ = 0;
};

std::string format_coeff(const RationalComplex& c) {
  if (c.im == 0) return rational_to_string(c.re);
  if (c.re == 0) return rational_to_string(c.im) + "i";
  return "(" + rational_to_string(c.re) + (c.im > 0 ? "+" : "-") +
         rational_to_string(rational_abs(c.im)) + "i)";
}

}  // namespace

NCExpression parse_expression(const std::string& text, int dim) {
  return ExprParser(text, dim).parse();
}

std::string format_expression(const NCExpression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    if (!first) out += " + ";
    first = false;
    const std::string coeff = format_coeff(c);
    const bool unit_coeff = coeff == "1" && !w.empty();
    if (!unit_coeff) out += coeff;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 || !unit_coeff) out += "*";
      out += (w[i].kind == GenKind::differential ? "dx" : "x") + std::to_string(w[i].index);
    }
  }
  return out;
}

}  // namespace ncgeo
