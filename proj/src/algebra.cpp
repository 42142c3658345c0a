#include "ncgeo/algebra.hpp"

#include "ncgeo/errors.hpp"

namespace ncgeo {

StructureConstants::StructureConstants(int dim) : dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::invalid_argument, "dimension must be positive");
  im_.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
}

bool StructureConstants::is_diagonal_pattern() const {
  for (int mu = 0; mu < dim_; ++mu)
    for (int nu = 0; nu < dim_; ++nu)
      for (int sigma = 0; sigma < dim_; ++sigma) {
        const bool on_diagonal = mu == nu && nu == sigma;
        if (!on_diagonal && im(mu, nu, sigma) != 0) return false;
      }
  return true;
}

DiagonalAlgebraSpec::DiagonalAlgebraSpec(const std::vector<double>& coeffs) {
  a.reserve(coeffs.size());
  for (double v : coeffs) a.push_back(rational_from_double(v));
}

StructureConstants make_diagonal(const DiagonalAlgebraSpec& spec) {
  for (std::size_t mu = 0; mu < spec.a.size(); ++mu)
    if (spec.a[mu] == 0)
      throw Error(ErrorCode::faithfulness,
                  "a[" + std::to_string(mu) + "] = 0 breaks faithfulness of the representation");
  StructureConstants c(spec.dim());
  for (int mu = 0; mu < spec.dim(); ++mu) c.set_im(mu, mu, mu, spec.a[mu]);
  return c;
}

StructureConstants make_extended2d(const Extended2DAlgebraSpec& spec) {
  StructureConstants c(2);
  c.set_im(0, 0, 0, spec.a);
  c.set_im(0, 0, 1, spec.e);
  c.set_im(0, 1, 0, spec.r);
  c.set_im(0, 1, 1, spec.f);
  c.set_im(1, 0, 0, spec.r);
  c.set_im(1, 0, 1, spec.f);
  c.set_im(1, 1, 0, spec.s);
  c.set_im(1, 1, 1, spec.h);
  return c;
}

bool check_symmetry(const StructureConstants& c) {
  const int d = c.dim();
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < mu; ++nu)
      for (int sigma = 0; sigma < d; ++sigma)
        if (c.im(mu, nu, sigma) != c.im(nu, mu, sigma)) return false;
  return true;
}

JacobiReport check_jacobi(const StructureConstants& c) {
  if (!check_symmetry(c))
    throw Error(ErrorCode::inconsistent_algebra, "structure constants are not symmetric");
  const int d = c.dim();
  Rational worst(0);
  // Entries are i*c, so each product contributes i^2 = -1 to both terms;
  // the sign cancels in the difference and the residual is real.
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu)
      for (int lambda = 0; lambda < d; ++lambda)
        for (int kappa = 0; kappa < d; ++kappa) {
          Rational sum(0);
          for (int sigma = 0; sigma < d; ++sigma) {
            sum += c.im(mu, nu, sigma) * c.im(lambda, sigma, kappa) -
                   c.im(lambda, nu, sigma) * c.im(mu, sigma, kappa);
          }
          Rational mag = rational_abs(sum);
          if (mag > worst) worst = mag;
        }
  return JacobiReport{worst};
}

std::array<Rational, 3> extended_constraints(const Extended2DAlgebraSpec& spec) {
  return {
      spec.e * spec.s - spec.r * spec.f,
      spec.f * (spec.a - spec.f) + spec.e * (spec.h - spec.r),
      spec.r * (spec.r - spec.h) + spec.s * (spec.f - spec.a),
  };
}

}  // namespace ncgeo
