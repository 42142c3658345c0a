#include "ncgeo/cosmology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/numeric/odeint.hpp>

#include "ncgeo/errors.hpp"

namespace ncgeo {

namespace {

constexpr double kPi = std::numbers::pi;

using State = std::array<double, 2>;  // (a, v)

double constraint_residual(const State& s, double C, double theta_sq) {
  const double rhs = C / s[0] + theta_sq;
  return std::abs(s[1] * s[1] - rhs) / rhs;
}

// Einstein-de Sitter time measured from the singularity for a given a.
double dust_time_of_a(double a, double C) { return (2.0 / 3.0) * std::pow(a, 1.5) / std::sqrt(C); }

double dust_a_of_time(double dt_from_singularity, double C) {
  return std::pow(1.5 * std::sqrt(C) * dt_from_singularity, 2.0 / 3.0);
}

}  // namespace

double CosmologyParams::c_prime() const { return 3.0 * C / (8.0 * kPi); }

double rho_of_a(double a, double theta, double c_prime) {
  if (a <= 0.0) throw Error(ErrorCode::invalid_argument, "scale factor must be positive");
  return ((3.0 / (8.0 * kPi)) * theta * theta * a + c_prime) / (a * a * a);
}

Trajectory integrate_at(CosmologyParams params, const std::vector<double>& times) {
  namespace odeint = boost::numeric::odeint;
  if (params.a0 <= 0.0) throw Error(ErrorCode::invalid_argument, "a0 must be positive");
  if (times.size() < 2 || times.front() != params.t_start)
    throw Error(ErrorCode::invalid_argument, "sample times must start at t_start");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (times[i] <= times[i - 1])
      throw Error(ErrorCode::invalid_argument, "sample times must increase");
  const double C = params.C;
  const double theta_sq = params.theta * params.theta;
  if (C / params.a0 + theta_sq <= 0.0)
    throw Error(ErrorCode::invalid_argument, "C/a0 + theta^2 must be positive");

  Trajectory traj;
  traj.params = params;
  traj.t.reserve(times.size());

  const double c_prime = params.c_prime();
  auto record = [&](double t, const State& s) {
    traj.t.push_back(t);
    traj.a.push_back(s[0]);
    traj.adot.push_back(s[1]);
    const double rho = rho_of_a(s[0], params.theta, c_prime);
    traj.rho.push_back(rho);
    if (rho < 0.0) traj.negative_rho_samples.push_back(traj.t.size() - 1);
    const double res = constraint_residual(s, C, theta_sq);
    traj.max_constraint_residual = std::max(traj.max_constraint_residual, res);
    if (res > params.constraint_tol)
      throw Error(ErrorCode::constraint_violation,
                  "relative drift " + std::to_string(res) + " at t = " + std::to_string(t) +
                      " exceeds " + std::to_string(params.constraint_tol));
  };

  State s{params.a0, std::sqrt(C / params.a0 + theta_sq)};
  std::size_t next = 0;
  double t_now = params.t_start;

  // Singular start: ride the dust series until the scale factor is large
  // enough for the stepper. Exact for theta = 0; the theta^2 a/C correction
  // to the velocity is negligible below bootstrap_exit.
  if (params.a0 < params.bootstrap_threshold) {
    if (C <= 0.0)
      throw Error(ErrorCode::invalid_argument, "series bootstrap needs C > 0");
    const double t_sing = params.t_start - dust_time_of_a(params.a0, C);
    const double t_exit = t_sing + dust_time_of_a(params.bootstrap_exit, C);
    while (next < times.size() && times[next] < t_exit) {
      const double a = dust_a_of_time(times[next] - t_sing, C);
      record(times[next], State{a, std::sqrt(C / a + theta_sq)});
      ++next;
    }
    const double a_exit = dust_a_of_time(t_exit - t_sing, C);
    s = State{a_exit, std::sqrt(C / a_exit + theta_sq)};
    t_now = t_exit;
  }

  auto rhs = [C](const State& y, State& dydt, double) {
    dydt[0] = y[1];
    dydt[1] = -C / (2.0 * y[0] * y[0]);
  };
  auto stepper = odeint::make_controlled(params.abs_tol, params.rel_tol,
                                         odeint::runge_kutta_dopri5<State>());
  for (; next < times.size(); ++next) {
    const double target = times[next];
    if (target > t_now) {
      odeint::integrate_adaptive(stepper, rhs, s, t_now, target,
                                 std::max((target - t_now) / 64.0, 1e-12));
      t_now = target;
    }
    record(target, s);
  }
  return traj;
}

Trajectory integrate(const CosmologyParams& params) {
  if (params.samples < 2) throw Error(ErrorCode::invalid_argument, "need at least two samples");
  if (params.t_end <= params.t_start)
    throw Error(ErrorCode::invalid_argument, "t_end must exceed t_start");
  std::vector<double> times(params.samples);
  const double dt = (params.t_end - params.t_start) / (params.samples - 1);
  for (int i = 0; i < params.samples; ++i) times[i] = params.t_start + dt * i;
  times.back() = params.t_end;
  return integrate_at(params, times);
}

FriedmannResiduals friedmann_residuals(const Trajectory& traj, double theta) {
  const double theta_sq = theta * theta;
  const double C = traj.params.C;
  FriedmannResiduals out{0.0, 0.0, 0.0};

  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double a = traj.a[i];
    const double v = traj.adot[i];
    const double rho = traj.rho[i];
    const double lhs_energy = 3.0 * v * v / (a * a);
    const double rhs_energy = 8.0 * kPi * rho;
    out.max_energy =
        std::max(out.max_energy, std::abs(lhs_energy - rhs_energy) / std::abs(rhs_energy));

    const double addot = -C / (2.0 * a * a);
    const double lhs_acc = 3.0 * addot / a;
    const double rhs_acc = -4.0 * kPi * rho + 1.5 * theta_sq / (a * a);
    const double scale_acc = std::max({std::abs(lhs_acc), std::abs(rhs_acc), 1e-300});
    out.max_acceleration = std::max(out.max_acceleration, std::abs(lhs_acc - rhs_acc) / scale_acc);
  }

  // continuity: d/dt(rho a^3) = (3/8pi) theta^2 adot, fourth-order stencil
  if (traj.size() >= 5) {
    const double dt = traj.t[1] - traj.t[0];
    std::vector<double> w(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i)
      w[i] = traj.rho[i] * traj.a[i] * traj.a[i] * traj.a[i];
    double scale = 0.0;
    const double span = traj.t.back() - traj.t.front();
    for (std::size_t i = 0; i < traj.size(); ++i)
      scale = std::max({scale, std::abs((3.0 / (8.0 * kPi)) * theta_sq * traj.adot[i]),
                        std::abs(w[i]) / span});
    for (std::size_t i = 2; i + 2 < traj.size(); ++i) {
      const double deriv = (w[i - 2] - 8.0 * w[i - 1] + 8.0 * w[i + 1] - w[i + 2]) / (12.0 * dt);
      const double rhs = (3.0 / (8.0 * kPi)) * theta_sq * traj.adot[i];
      out.max_continuity = std::max(out.max_continuity, std::abs(deriv - rhs) / scale);
    }
  }
  return out;
}

}  // namespace ncgeo
