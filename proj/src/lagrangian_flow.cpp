#include "sgkink/lagrangian_flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace sgkink {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_half_turn(double theta) {
  double a = std::fmod(theta, kPi);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a = 0.0;  // fmod rounding at the seam
  return a;
}

}  // namespace

LagrangianFrame LagrangianFrame::from_angle(double theta) {
  const double a = wrap_half_turn(theta);
  return {std::cos(a), std::sin(a), a};
}

LagrangianFrame LagrangianFrame::from_vector(double w1, double w2) {
  if (w1 == 0.0 && w2 == 0.0) {
    throw std::invalid_argument("the zero vector spans no line");
  }
  return from_angle(std::atan2(w2, w1));
}

double rp1_distance(double theta_a, double theta_b) {
  double d = std::fmod(theta_a - theta_b, kPi);
  if (d < 0.0) d += kPi;
  return std::min(d, kPi - d);
}

double tau_to_z(double tau) { return std::tan(0.5 * kPi * tau); }

double z_to_tau(double z) { return (2.0 / kPi) * std::atan(z); }

LineFlow::LineFlow(MatrixField field, IntegrationControls controls)
    : field_(std::move(field)), controls_(controls) {}

double LineFlow::angle_velocity(double z, double theta) const {
  const Mat2d m = field_(z);
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  return m.a21 * cs * cs + (m.a22 - m.a11) * sn * cs - m.a12 * sn * sn;
}

TrajectoryRecord LineFlow::integrate(double tau0, double tau1, double theta0,
                                     double lambda_tag) const {
  TrajectoryRecord record;
  record.lambda = lambda_tag;
  record.tau.push_back(tau0);
  record.theta.push_back(theta0);

  std::array<double, 1> y{theta0};
  ode::Options opt;
  opt.abs_tol = controls_.abs_tol;
  opt.max_step = controls_.max_step;
  opt.max_steps = controls_.max_steps;

  const auto rhs = [this](double tau, const std::array<double, 1>& s,
                          std::array<double, 1>& dy) {
    const double z = tau_to_z(tau);
    dy[0] = angle_velocity(z, s[0]) * 0.5 * kPi * (1.0 + z * z);
  };
  const auto observe = [&record](double tau, const std::array<double, 1>& s) {
    record.tau.push_back(tau);
    record.theta.push_back(s[0]);
    return ode::StepDirective::Continue;
  };
  const auto guard = [this](const std::array<double, 1>& before,
                            const std::array<double, 1>& after) {
    return std::abs(after[0] - before[0]) <= controls_.max_angle_step;
  };

  const ode::Stats stats = ode::integrate<1>(rhs, y, tau0, tau1, opt, observe, guard);
  record.stats = {stats.accepted, stats.rejected, stats.max_error_estimate};
  return record;
}

double LineFlow::advance_angle(double tau0, double theta0, double tau1) const {
  std::array<double, 1> y{theta0};
  ode::Options opt;
  opt.abs_tol = controls_.abs_tol;
  opt.max_step = controls_.max_step;
  opt.max_steps = controls_.max_steps;
  const auto rhs = [this](double t, const std::array<double, 1>& s, std::array<double, 1>& dy) {
    const double z = tau_to_z(t);
    dy[0] = angle_velocity(z, s[0]) * 0.5 * kPi * (1.0 + z * z);
  };
  ode::integrate<1>(
      rhs, y, tau0, tau1, opt,
      [](double, const std::array<double, 1>&) { return ode::StepDirective::Continue; },
      [this](const std::array<double, 1>& a, const std::array<double, 1>& b) {
        return std::abs(b[0] - a[0]) <= controls_.max_angle_step;
      });
  return y[0];
}

double LineFlow::angle_at(const TrajectoryRecord& record, double tau) const {
  if (record.tau.empty()) throw std::invalid_argument("empty trajectory record");
  const bool forward = record.tau.back() >= record.tau.front();
  const auto& ts = record.tau;

  // Nearest recorded sample on the start side of tau.
  std::size_t idx = 0;
  if (forward) {
    const auto it = std::upper_bound(ts.begin(), ts.end(), tau);
    if (it == ts.begin()) throw std::invalid_argument("tau precedes the recorded span");
    idx = static_cast<std::size_t>(it - ts.begin()) - 1;
  } else {
    const auto it = std::upper_bound(ts.begin(), ts.end(), tau,
                                     [](double a, double b) { return a > b; });
    if (it == ts.begin()) throw std::invalid_argument("tau precedes the recorded span");
    idx = static_cast<std::size_t>(it - ts.begin()) - 1;
  }
  if (ts[idx] == tau) return record.theta[idx];
  if (forward && tau > ts.back()) throw std::invalid_argument("tau beyond the recorded span");
  if (!forward && tau < ts.back()) throw std::invalid_argument("tau beyond the recorded span");
  return advance_angle(ts[idx], record.theta[idx], tau);
}

LineFlow kink_line_flow(const KinkProfile& profile, double lambda, IntegrationControls controls) {
  const SpectralParameter sp(lambda, 0.0);
  return LineFlow(
      [profile, sp](double z) {
        const Mat2c a = coefficient_matrix(profile, sp, z);
        return Mat2d{a.a11.real(), a.a12.real(), a.a21.real(), a.a22.real()};
      },
      controls);
}

TrajectoryRecord unstable_curve(const KinkProfile& profile, double lambda,
                                const IntegrationControls& controls) {
  const AsymptoticData eig = asymptotic_eigenpairs(profile.params(), SpectralParameter(lambda, 0.0));
  const LagrangianFrame seed =
      LagrangianFrame::from_vector(eig.xi_u[0].real(), eig.xi_u[1].real());
  const LineFlow flow = kink_line_flow(profile, lambda, controls);
  return flow.integrate(-1.0 + controls.epsilon, 1.0 - controls.epsilon, seed.angle, lambda);
}

std::array<CircleFixedPoint, 2> limit_angle_fixed_points(const WaveParameters& params,
                                                         double lambda) {
  const AsymptoticData eig = asymptotic_eigenpairs(params, SpectralParameter(lambda, 0.0));
  const LagrangianFrame u = LagrangianFrame::from_vector(eig.xi_u[0].real(), eig.xi_u[1].real());
  const LagrangianFrame s = LagrangianFrame::from_vector(eig.xi_s[0].real(), eig.xi_s[1].real());
  return {CircleFixedPoint{u.angle, true}, CircleFixedPoint{s.angle, false}};
}

}  // namespace sgkink
