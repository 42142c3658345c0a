#include "ncgeo/spacetimes.hpp"

#include "ncgeo/errors.hpp"

namespace ncgeo {

DeformedMetric UltraStaticMetric::to_deformed_metric() const {
  DeformedMetric g;
  g.dim = dim();
  g.signature.assign(g.dim, -1);
  g.signature[0] = 1;
  g.exponents.push_back(LinearForm::zeros(g.dim));
  for (const LinearForm& f : spatial_exponents) g.exponents.push_back(f);
  return g;
}

DeformedMetric FRWMetric::to_deformed_metric() const {
  DeformedMetric g;
  g.dim = dim;
  g.signature.assign(dim, -1);
  g.signature[0] = 1;
  g.exponents.assign(dim, LinearForm::zeros(dim));
  for (int i = 1; i < dim; ++i) g.exponents[i].coeff[0] = hubble;
  return g;
}

bool DeformedFRWMetric::reduces_to_frw() const {
  for (const Rational& bi : b)
    if (bi != 0) return false;
  return true;
}

UltraStaticMetric ultrastatic_from_deformation(const DiagonalAlgebraSpec& spec,
                                               const DeformationMatrix& theta) {
  if (!theta.time_row_zero())
    throw Error(ErrorCode::invalid_argument,
                "ultra-static family requires Theta_{0j} = 0");
  DeformedMetric g = warp_line_element(spec, theta);
  UltraStaticMetric out;
  out.spatial_exponents.assign(g.exponents.begin() + 1, g.exponents.end());
  // With a vanishing time row every exponent is free of x^0.
  for (const LinearForm& f : out.spatial_exponents)
    if (f.coeff[0] != 0)
      throw Error(ErrorCode::invalid_argument, "spatial exponent depends on time");
  return out;
}

std::pair<FRWMetric, DeformationParams> frw_from_deformation(const Rational& hubble) {
  const int d = 4;
  FRWMetric metric{hubble, d};
  if (hubble == 0) {
    // Minkowski limit: no deformation at all.
    return {metric, DeformationParams{DiagonalAlgebraSpec{RationalVector(d, Rational(1))},
                                      DeformationMatrix::zero(d)}};
  }
  // Isotropic realization: Theta_{0i} = H/2 and a_i = 1 give each spatial
  // exponent -2 a_i Theta_{i0} t = H t. The a_0 Theta_{0i} contribution to
  // g00 is dropped exactly by the b = 0 convention.
  std::vector<RationalVector> th(d, RationalVector(d, Rational(0)));
  const Rational half_h = hubble / 2;
  for (int i = 1; i < d; ++i) {
    th[0][i] = half_h;
    th[i][0] = -half_h;
  }
  DiagonalAlgebraSpec spec{RationalVector(d, Rational(1))};
  return {metric, DeformationParams{std::move(spec), DeformationMatrix(std::move(th))}};
}

DeformedFRWMetric deformed_frw(const DiagonalAlgebraSpec& spec, const DeformationMatrix& theta) {
  const int d = spec.dim();
  if (theta.dim() != d)
    throw Error(ErrorCode::invalid_argument, "Theta and algebra dimensions differ");
  if (!theta.spatial_block_zero())
    throw Error(ErrorCode::invalid_argument, "deformed FRW family requires Theta_{ij} = 0");
  DeformedFRWMetric out;
  out.b.reserve(d - 1);
  for (int i = 1; i < d; ++i) out.b.push_back(spec.a[0] * theta.at(0, i));
  out.rate = spec.a[1] * theta.at(1, 0);
  for (int i = 2; i < d; ++i)
    if (spec.a[i] * theta.at(i, 0) != out.rate)
      throw Error(ErrorCode::invalid_argument,
                  "anisotropic rates a_i Theta_{i0}; no single scale factor absorbs them");
  return out;
}

}  // namespace ncgeo
