#include "ncgeo/gravity.hpp"

#include <algorithm>
#include <cmath>

#include "ncgeo/errors.hpp"

namespace ncgeo {

double PowerLawScale::derivative(int order, double t) const {
  double factor = 1.0;
  for (int j = 0; j < order; ++j) factor *= (k_ - j);
  return factor * std::pow(t, k_ - order);
}

double ExpScale::derivative(int order, double t) const {
  return std::pow(h_, order) * std::exp(h_ * t);
}

namespace {

void trim(std::vector<int>& dpow) {
  while (!dpow.empty() && dpow.back() == 0) dpow.pop_back();
}

}  // namespace

bool operator<(const TermKey& a, const TermKey& b) {
  if (a.pow_a != b.pow_a) return a.pow_a < b.pow_a;
  if (a.dpow != b.dpow) return a.dpow < b.dpow;
  return a.expo < b.expo;
}

bool operator==(const TermKey& a, const TermKey& b) {
  return a.pow_a == b.pow_a && a.dpow == b.dpow && a.expo == b.expo;
}

TermSum TermSum::constant(int dim, Rational c) {
  return single(dim, std::move(c), 0, {}, RationalVector(dim, Rational(0)));
}

TermSum TermSum::single(int dim, Rational coeff, int pow_a, std::vector<int> dpow,
                        RationalVector expo) {
  if (static_cast<int>(expo.size()) != dim)
    throw Error(ErrorCode::invalid_argument, "exponent form has wrong dimension");
  TermSum s(dim);
  trim(dpow);
  s.add(TermKey{pow_a, std::move(dpow), std::move(expo)}, coeff);
  return s;
}

void TermSum::add(const TermKey& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TermSum& TermSum::operator+=(const TermSum& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TermSum& TermSum::operator-=(const TermSum& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TermSum operator*(const TermSum& a, const TermSum& b) {
  TermSum out(a.dim_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      TermKey key;
      key.pow_a = ka.pow_a + kb.pow_a;
      key.dpow.assign(std::max(ka.dpow.size(), kb.dpow.size()), 0);
      for (std::size_t i = 0; i < ka.dpow.size(); ++i) key.dpow[i] += ka.dpow[i];
      for (std::size_t i = 0; i < kb.dpow.size(); ++i) key.dpow[i] += kb.dpow[i];
      key.expo.resize(ka.expo.size());
      for (std::size_t i = 0; i < ka.expo.size(); ++i) key.expo[i] = ka.expo[i] + kb.expo[i];
      out.add(key, ca * cb);
    }
  return out;
}

TermSum operator*(const Rational& s, const TermSum& t) {
  TermSum out(t.dim_);
  if (s == 0) return out;
  for (const auto& [k, c] : t.terms_) out.add(k, s * c);
  return out;
}

TermSum TermSum::derivative(int mu) const {
  TermSum out(dim_);
  for (const auto& [k, c] : terms_) {
    if (mu == 0) {
      if (k.pow_a != 0) {
        TermKey key = k;
        key.pow_a -= 1;
        if (key.dpow.empty()) key.dpow.push_back(0);
        key.dpow[0] += 1;
        out.add(key, c * k.pow_a);
      }
      for (std::size_t j = 0; j < k.dpow.size(); ++j) {
        if (k.dpow[j] == 0) continue;
        TermKey key = k;
        key.dpow[j] -= 1;
        if (key.dpow.size() <= j + 1) key.dpow.resize(j + 2, 0);
        key.dpow[j + 1] += 1;
        trim(key.dpow);
        out.add(key, c * k.dpow[j]);
      }
    }
    if (k.expo[mu] != 0) out.add(k, c * k.expo[mu]);
  }
  return out;
}

TermSum TermSum::inverse_single() const {
  if (terms_.size() != 1)
    throw Error(ErrorCode::invalid_argument, "inverse requires a single-term expression");
  const auto& [k, c] = *terms_.begin();
  for (int p : k.dpow)
    if (p != 0)
      throw Error(ErrorCode::invalid_argument,
                  "inverse of scale-factor derivatives is outside the grammar");
  TermKey key;
  key.pow_a = -k.pow_a;
  key.expo.resize(k.expo.size());
  for (std::size_t i = 0; i < k.expo.size(); ++i) key.expo[i] = -k.expo[i];
  TermSum out(dim_);
  out.add(key, Rational(1) / c);
  return out;
}

Rational TermSum::sup_abs() const {
  Rational worst(0);
  for (const auto& [k, c] : terms_) {
    Rational m = rational_abs(c);
    if (m > worst) worst = m;
  }
  return worst;
}

double TermSum::eval(const std::vector<double>& point, const ScaleFactor& a) const {
  if (static_cast<int>(point.size()) != dim_)
    throw Error(ErrorCode::invalid_argument, "point dimension mismatch");
  const double t = point[0];
  double total = 0.0;
  for (const auto& [k, c] : terms_) {
    double v = to_double(c);
    if (k.pow_a != 0) v *= std::pow(a.derivative(0, t), k.pow_a);
    for (std::size_t j = 0; j < k.dpow.size(); ++j)
      for (int p = 0; p < k.dpow[j]; ++p) v *= a.derivative(static_cast<int>(j) + 1, t);
    double arg = 0.0;
    for (int i = 0; i < dim_; ++i) arg += to_double(k.expo[i]) * point[i];
    total += v * std::exp(arg);
  }
  return total;
}

DiagonalMetric DiagonalMetric::minkowski(int dim) {
  DiagonalMetric g;
  g.dim = dim;
  for (int mu = 0; mu < dim; ++mu)
    g.entries.push_back(TermSum::constant(dim, Rational(mu == 0 ? 1 : -1)));
  return g;
}

DiagonalMetric DiagonalMetric::from_deformed(const DeformedMetric& m) {
  DiagonalMetric g;
  g.dim = m.dim;
  for (int mu = 0; mu < m.dim; ++mu)
    g.entries.push_back(
        TermSum::single(m.dim, Rational(m.signature[mu]), 0, {}, m.exponents[mu].coeff));
  return g;
}

DiagonalMetric DiagonalMetric::from_frw(const FRWMetric& m) {
  return from_deformed(m.to_deformed_metric());
}

DiagonalMetric DiagonalMetric::from_ultrastatic(const UltraStaticMetric& m) {
  return from_deformed(m.to_deformed_metric());
}

DiagonalMetric DiagonalMetric::from_deformed_frw(const DeformedFRWMetric& m) {
  const int d = m.dim();
  DiagonalMetric g;
  g.dim = d;
  RationalVector expo(d, Rational(0));
  for (int i = 1; i < d; ++i) expo[i] = Rational(-2) * m.b[i - 1];
  g.entries.push_back(TermSum::single(d, Rational(1), 0, {}, std::move(expo)));
  for (int i = 1; i < d; ++i)
    g.entries.push_back(TermSum::single(d, Rational(-1), 2, {}, RationalVector(d, Rational(0))));
  return g;
}

DiagonalMetric DiagonalMetric::formal_frw(int dim) {
  return from_deformed_frw(DeformedFRWMetric{RationalVector(dim - 1, Rational(0)), Rational(0)});
}

double DiagonalMetric::component(int mu, const std::vector<double>& point,
                                 const ScaleFactor& a) const {
  return entries[mu].eval(point, a);
}

std::vector<TermSum> christoffel(const DiagonalMetric& g) {
  const int d = g.dim;
  if (static_cast<int>(g.entries.size()) != d)
    throw Error(ErrorCode::invalid_argument, "metric entry count mismatch");
  std::vector<TermSum> inv;
  inv.reserve(d);
  for (const TermSum& e : g.entries) inv.push_back(e.inverse_single());

  std::vector<TermSum> gamma((std::size_t)d * d * d, TermSum::zero(d));
  const Rational half(1, 2);
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        // diagonal metric: only the sigma = l term of the inverse survives
        TermSum inner = TermSum::zero(d);
        if (n == l) inner += g.entries[l].derivative(m);
        if (m == l) inner += g.entries[l].derivative(n);
        if (m == n) inner -= g.entries[m].derivative(l);
        if (inner.is_zero()) continue;
        gamma[(std::size_t)(l * d + m) * d + n] = half * (inv[l] * inner);
      }
  return gamma;
}

CurvatureReport einstein_tensor(const DiagonalMetric& g) {
  const int d = g.dim;
  CurvatureReport rep;
  rep.dim = d;
  rep.christoffel = christoffel(g);
  auto gm = [&](int l, int m, int n) -> const TermSum& {
    return rep.christoffel[(std::size_t)(l * d + m) * d + n];
  };

  rep.ricci.assign((std::size_t)d * d, TermSum::zero(d));
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      TermSum r = TermSum::zero(d);
      for (int l = 0; l < d; ++l) {
        r += gm(l, m, n).derivative(l);
        r -= gm(l, m, l).derivative(n);
        for (int s = 0; s < d; ++s) {
          r += gm(l, l, s) * gm(s, m, n);
          r -= gm(l, n, s) * gm(s, m, l);
        }
      }
      rep.ricci[(std::size_t)m * d + n] = std::move(r);
    }

  rep.ricci_scalar = TermSum::zero(d);
  for (int m = 0; m < d; ++m)
    rep.ricci_scalar += g.entries[m].inverse_single() * rep.ricci_at(m, m);

  rep.einstein.assign((std::size_t)d * d, TermSum::zero(d));
  const Rational half(1, 2);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      TermSum e = rep.ricci_at(m, n);
      if (m == n) e -= half * (rep.ricci_scalar * g.entries[m]);
      rep.einstein[(std::size_t)m * d + n] = std::move(e);
    }
  return rep;
}

namespace {

FieldEquationResiduals field_equation_residuals_symbolic(const DeformedFRWMetric& m,
                                                         const Rational& lambda) {
  const int d = m.dim();
  const DiagonalMetric g = DiagonalMetric::from_deformed_frw(m);
  const CurvatureReport rep = einstein_tensor(g);
  const RationalVector zero_expo(d, Rational(0));

  FieldEquationResiduals out;
  // 3 adot^2 / a^2
  const TermSum friedmann_00 = TermSum::single(d, Rational(3), -2, {2}, zero_expo);
  out.residual_00 = (rep.einstein_at(0, 0) + lambda * g.entries[0]) -
                    (friedmann_00 + lambda * g.entries[0]);

  out.residual_momentum.reserve(d - 1);
  for (int i = 1; i < d; ++i) {
    // G_0i - (-2 (adot/a) b_i)
    TermSum claimed = TermSum::single(d, Rational(-2) * m.b[i - 1], -1, {1}, zero_expo);
    out.residual_momentum.push_back(rep.einstein_at(0, i) - claimed);
  }

  Rational b_sq(0);
  for (const Rational& bi : m.b) b_sq += bi * bi;
  // stated pressure equation, one copy per spatial direction
  TermSum stated = TermSum::single(d, Rational(2), -1, {0, 1}, zero_expo);
  stated += TermSum::single(d, Rational(1), -2, {2}, zero_expo);
  stated += (Rational(2, 3) * b_sq) * g.entries[0];
  stated += lambda * g.entries[0];

  const TermSum inv_a_sq = TermSum::single(d, Rational(1), -2, {}, zero_expo);
  out.residual_pressure.reserve(d - 1);
  for (int i = 1; i < d; ++i) {
    TermSum exact_side =
        g.entries[0] * inv_a_sq * (rep.einstein_at(i, i) + lambda * g.entries[i]);
    out.residual_pressure.push_back(stated + exact_side);
  }
  return out;
}

}  // namespace

FieldEquationResiduals verify_field_equations(const DeformedFRWMetric& m, const Rational& lambda,
                                              double kappa, double rho, double pressure,
                                              const std::vector<double>& sample_point,
                                              const ScaleFactor& a) {
  if (kappa <= 0) throw Error(ErrorCode::invalid_argument, "kappa must be positive");
  const int d = m.dim();
  FieldEquationResiduals out = field_equation_residuals_symbolic(m, lambda);

  // Leading b-order of the pressure residual under exact scaling of b.
  out.pressure_leading_b_order = leading_scaling_order([&](const Rational& s) {
    DeformedFRWMetric scaled = m;
    for (Rational& bi : scaled.b) bi *= s;
    FieldEquationResiduals r = field_equation_residuals_symbolic(scaled, lambda);
    TermSum worst = TermSum::zero(d);
    for (const TermSum& p : r.residual_pressure)
      if (p.sup_abs() > worst.sup_abs()) worst = p;
    return worst;
  });

  // Raw numeric residuals with the supplied fluid values.
  const DiagonalMetric g = DiagonalMetric::from_deformed_frw(m);
  const CurvatureReport rep = einstein_tensor(g);
  out.numeric_residual.assign(d, std::vector<double>(d, 0.0));
  const double g00 = g.entries[0].eval(sample_point, a);
  const double lam = to_double(lambda);
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu) {
      const double gval = (mu == nu) ? g.entries[mu].eval(sample_point, a) : 0.0;
      double t_val = 0.0;
      if (mu == 0 && nu == 0) {
        t_val = rho * g00;
      } else if (mu == 0 || nu == 0) {
        const int i = std::max(mu, nu);
        // the momentum density the equation itself requires
        const double adot_over_a =
            a.derivative(1, sample_point[0]) / a.derivative(0, sample_point[0]);
        t_val = -2.0 * adot_over_a * to_double(m.b[i - 1]) / kappa;
      } else if (mu == nu) {
        t_val = -pressure * gval;
      }
      out.numeric_residual[mu][nu] =
          rep.einstein_at(mu, nu).eval(sample_point, a) + lam * gval - kappa * t_val;
    }
  return out;
}

// ---------------------------------------------------------------------------
// finite-difference oracle
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix sample_metric(const MetricSampler& g, int d, const std::vector<double>& p) {
  Matrix out(d, std::vector<double>(d, 0.0));
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out[m][n] = g(m, n, p);
  return out;
}

Matrix invert(Matrix a) {
  const int d = static_cast<int>(a.size());
  Matrix inv(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0)
      throw Error(ErrorCode::invalid_argument, "singular metric sample");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const double scale = a[col][col];
    for (int c = 0; c < d; ++c) {
      a[col][c] /= scale;
      inv[col][c] /= scale;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      if (f == 0.0) continue;
      for (int c = 0; c < d; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

// Christoffel symbols at p from central differences of the metric.
std::vector<double> fd_christoffel(const MetricSampler& g, int d, const std::vector<double>& p,
                                   double h) {
  std::vector<Matrix> dg(d);
  for (int s = 0; s < d; ++s) {
    std::vector<double> plus = p, minus = p;
    plus[s] += h;
    minus[s] -= h;
    const Matrix gp = sample_metric(g, d, plus);
    const Matrix gm = sample_metric(g, d, minus);
    dg[s].assign(d, std::vector<double>(d, 0.0));
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) dg[s][m][n] = (gp[m][n] - gm[m][n]) / (2.0 * h);
  }
  const Matrix inv = invert(sample_metric(g, d, p));
  std::vector<double> gamma((std::size_t)d * d * d, 0.0);
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        double sum = 0.0;
        for (int s = 0; s < d; ++s)
          sum += inv[l][s] * (dg[m][n][s] + dg[n][m][s] - dg[s][m][n]);
        gamma[(std::size_t)(l * d + m) * d + n] = 0.5 * sum;
      }
  return gamma;
}

Matrix fd_einstein_once(const MetricSampler& g, int d, const std::vector<double>& p, double h) {
  auto gamma_at = [&](const std::vector<double>& q) { return fd_christoffel(g, d, q, h); };
  const std::vector<double> gamma0 = gamma_at(p);
  // derivative of Gamma by nested central differences
  std::vector<std::vector<double>> dgamma(d);
  for (int s = 0; s < d; ++s) {
    std::vector<double> plus = p, minus = p;
    plus[s] += h;
    minus[s] -= h;
    const std::vector<double> gp = gamma_at(plus);
    const std::vector<double> gm = gamma_at(minus);
    dgamma[s].resize(gp.size());
    for (std::size_t i = 0; i < gp.size(); ++i) dgamma[s][i] = (gp[i] - gm[i]) / (2.0 * h);
  }
  auto G = [&](const std::vector<double>& gam, int l, int m, int n) {
    return gam[(std::size_t)(l * d + m) * d + n];
  };
  Matrix ricci(d, std::vector<double>(d, 0.0));
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      double r = 0.0;
      for (int l = 0; l < d; ++l) {
        r += G(dgamma[l], l, m, n) - G(dgamma[n], l, m, l);
        for (int s = 0; s < d; ++s)
          r += G(gamma0, l, l, s) * G(gamma0, s, m, n) - G(gamma0, l, n, s) * G(gamma0, s, m, l);
      }
      ricci[m][n] = r;
    }
  const Matrix gmat = sample_metric(g, d, p);
  const Matrix inv = invert(gmat);
  double scalar = 0.0;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) scalar += inv[m][n] * ricci[m][n];
  Matrix out(d, std::vector<double>(d, 0.0));
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out[m][n] = ricci[m][n] - 0.5 * scalar * gmat[m][n];
  return out;
}

}  // namespace

OracleResult numeric_curvature_oracle(const MetricSampler& g, int dim,
                                      const std::vector<double>& point, double h) {
  if (h <= 0) throw Error(ErrorCode::invalid_argument, "step must be positive");
  const Matrix coarse = fd_einstein_once(g, dim, point, h);
  const Matrix fine = fd_einstein_once(g, dim, point, h / 2.0);
  OracleResult out;
  out.einstein.assign(dim, std::vector<double>(dim, 0.0));
  out.richardson_disagreement = 0.0;
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) {
      out.einstein[m][n] = (4.0 * fine[m][n] - coarse[m][n]) / 3.0;
      out.richardson_disagreement =
          std::max(out.richardson_disagreement, std::abs(fine[m][n] - coarse[m][n]));
    }
  return out;
}

double bianchi_residual(const CurvatureReport& rep, const DiagonalMetric& g,
                        const std::vector<double>& point, const ScaleFactor& a, double h) {
  const int d = g.dim;
  auto upper = [&](int m, int n, const std::vector<double>& p) {
    const double inv_m = 1.0 / g.entries[m].eval(p, a);
    const double inv_n = 1.0 / g.entries[n].eval(p, a);
    return inv_m * inv_n * rep.einstein_at(m, n).eval(p, a);
  };
  double scale = 1.0;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) scale = std::max(scale, std::abs(upper(m, n, point)));

  double worst = 0.0;
  for (int nu = 0; nu < d; ++nu) {
    double div = 0.0;
    for (int mu = 0; mu < d; ++mu) {
      std::vector<double> plus = point, minus = point;
      plus[mu] += h;
      minus[mu] -= h;
      div += (upper(mu, nu, plus) - upper(mu, nu, minus)) / (2.0 * h);
    }
    for (int mu = 0; mu < d; ++mu)
      for (int l = 0; l < d; ++l) {
        div += rep.gamma(mu, mu, l).eval(point, a) * upper(l, nu, point);
        div += rep.gamma(nu, mu, l).eval(point, a) * upper(mu, l, point);
      }
    worst = std::max(worst, std::abs(div));
  }
  return worst / scale;
}

int leading_scaling_order(const std::function<TermSum(const Rational&)>& residual_at, int probes) {
  std::vector<Rational> norms;
  Rational s(1);
  for (int k = 0; k < probes; ++k) {
    norms.push_back(residual_at(s).sup_abs());
    s /= 2;
  }
  if (std::all_of(norms.begin(), norms.end(), [](const Rational& r) { return r == 0; })) return -1;
  // as s -> 0 the ratio of consecutive norms approaches 2^order
  const Rational& last = norms[norms.size() - 1];
  const Rational& prev = norms[norms.size() - 2];
  if (last == 0) return -1;  // residual dies at finite scaling: treat as vanishing
  const double ratio = to_double(prev / last);
  const int order = static_cast<int>(std::lround(std::log2(ratio)));
  if (std::abs(std::log2(ratio) - order) > 0.15)
    throw Error(ErrorCode::invalid_argument, "scaling order did not stabilize");
  return order;
}

}  // namespace ncgeo
