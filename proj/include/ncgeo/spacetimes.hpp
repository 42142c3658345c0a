#ifndef NCGEO_SPACETIMES_HPP
#define NCGEO_SPACETIMES_HPP

#include <utility>
#include <vector>

#include "ncgeo/deformation.hpp"

namespace ncgeo {

/// ds^2 = dt^2 - h_ij(x) dx^i dx^j with time-independent diagonal h.
struct UltraStaticMetric {
  std::vector<LinearForm> spatial_exponents;  // h_ii = exp(L_i . x), L_i free of x^0

  int dim() const { return static_cast<int>(spatial_exponents.size()) + 1; }
  DeformedMetric to_deformed_metric() const;
};

/// Spatially flat metric diag(1, -e^{Ht}, ..., -e^{Ht}).
struct FRWMetric {
  Rational hubble;
  int dim = 4;

  DeformedMetric to_deformed_metric() const;
};

/// Parameters whose deformation realizes a named family.
struct DeformationParams {
  DiagonalAlgebraSpec spec;
  DeformationMatrix theta;
};

/// g00 = e^{-2 b.x}, g_ij = -a(t)^2 delta_ij with a formal scale factor
/// absorbing the time-direction exponent: a(t)^2 = e^{-2 rate t} atilde(t)^2.
struct DeformedFRWMetric {
  RationalVector b;  // b_i = a_0 Theta_{0i}, spatial components
  Rational rate;     // common value of a_i Theta_{i0}

  int dim() const { return static_cast<int>(b.size()) + 1; }
  bool reduces_to_frw() const;
};

/// Requires Theta_{0j} = 0; the spatial block of the deformed line element
/// is then time-independent and the lapse stays exactly 1.
UltraStaticMetric ultrastatic_from_deformation(const DiagonalAlgebraSpec& spec,
                                               const DeformationMatrix& theta);

/// FRW family member for a given Hubble parameter, with deformation
/// parameters that realize its spatial exponents. The time-row product
/// a_0 Theta_{0i} is dropped exactly (b = 0) by convention; the returned
/// parameters reproduce the spatial exponents under warp_line_element.
std::pair<FRWMetric, DeformationParams> frw_from_deformation(const Rational& hubble);

/// Deformation of a pre-existing scale factor: Theta_{ij} = 0 required, and
/// the per-direction rates a_i Theta_{i0} must agree (isotropy).
DeformedFRWMetric deformed_frw(const DiagonalAlgebraSpec& spec, const DeformationMatrix& theta);

}  // namespace ncgeo

#endif
