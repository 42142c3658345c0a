#ifndef NCGEO_COSMOLOGY_HPP
#define NCGEO_COSMOLOGY_HPP

#include <cstddef>
#include <vector>

namespace ncgeo {

/// Inputs of the corrected dust solver: adot^2 = C/a + theta^2 on the
/// expanding branch, rho a^3 = (3/8pi) theta^2 a + C'.
struct CosmologyParams {
  double theta = 0.0;  // deformation scalar; enters through theta^2 only
  double C = 1.0;      // integration constant, C = (8/3) pi C'
  double a0 = 1.0;     // initial scale factor, > 0
  double t_start = 0.0;
  double t_end = 10.0;
  int samples = 512;
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  double constraint_tol = 1e-8;       // relative drift gate on the first integral
  double bootstrap_threshold = 1e-9;  // below this a0 the dust series seeds the start
  double bootstrap_exit = 1e-6;       // hand over to the stepper once a reaches this

  double c_prime() const;  // C' = 3C/(8 pi)
};

struct Trajectory {
  CosmologyParams params;
  std::vector<double> t, a, adot, rho;
  std::vector<std::size_t> negative_rho_samples;  // flagged, never fatal
  double max_constraint_residual = 0.0;           // relative, over observed states

  std::size_t size() const { return t.size(); }
};

/// rho = ((3/8pi) theta^2 a + c_prime) / a^3; rejects a <= 0.
double rho_of_a(double a, double theta, double c_prime);

/// Integrates the second-order system a' = v, v' = -C/(2 a^2) with an
/// adaptive embedded Runge-Kutta pair; the energy constraint
/// v^2 - C/a - theta^2 is monitored at every observed state and a drift past
/// constraint_tol aborts with a diagnostic. Samples fall on a uniform grid.
Trajectory integrate(const CosmologyParams& params);

/// Same integration, sampled at caller-provided times (strictly increasing,
/// starting at params.t_start).
Trajectory integrate_at(CosmologyParams params, const std::vector<double>& times);

struct FriedmannResiduals {
  double max_energy;      // |3 v^2/a^2 - 8 pi rho| / (8 pi rho)
  double max_acceleration;  // |3 addot/a + 4 pi rho - (3/2) theta^2/a^2|, relative
  double max_continuity;  // finite-difference d/dt(rho a^3) vs (3/8pi) theta^2 adot
};

/// Residuals of the two evolution equations along a trajectory, with addot
/// obtained by differentiating the constraint (addot = -C/(2a^2)) and the
/// continuity derivative taken by fourth-order central differences on the
/// sample grid (boundary samples skipped).
FriedmannResiduals friedmann_residuals(const Trajectory& traj, double theta);

}  // namespace ncgeo

#endif
