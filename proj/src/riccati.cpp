#include "sgkink/riccati.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sgkink/ode.hpp"

namespace sgkink {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

}  // namespace

cplx liouville_shift(const WaveParameters& params, const SpectralParameter& lambda, cplx slope) {
  const double c = params.c;
  return slope + c * lambda.value / (c * c - 1.0);
}

RiccatiFixedPoints riccati_fixed_points(const WaveParameters& params,
                                        const SpectralParameter& lambda) {
  const double c = params.c;
  const double denom = c * c - 1.0;
  const cplx root = std::sqrt(lambda.value * lambda.value - denom);
  RiccatiFixedPoints fp;
  fp.eta_u = -root / denom;
  fp.eta_s = root / denom;
  if (std::abs(fp.eta_u - fp.eta_s) < 1e-8) {
    throw DegenerateSplitting("Riccati fixed points collide at lambda = (" +
                              std::to_string(lambda.p) + ", " + std::to_string(lambda.q) + ")");
  }
  return fp;
}

cplx riccati_potential(const KinkProfile& profile, const SpectralParameter& lambda, double z) {
  const double c = profile.params().c;
  const double denom = c * c - 1.0;
  const cplx lam2 = lambda.value * lambda.value;
  return (cos_kink_value(profile, z) - lam2) / denom + c * c * lam2 / (denom * denom);
}

cplx riccati_potential_limit(const WaveParameters& params, const SpectralParameter& lambda) {
  const double c = params.c;
  const double denom = c * c - 1.0;
  const cplx lam2 = lambda.value * lambda.value;
  return (-1.0 - lam2) / denom + c * c * lam2 / (denom * denom);
}

cplx riccati_field_eta(const KinkProfile& profile, const SpectralParameter& lambda, double z,
                       cplx eta) {
  return riccati_potential(profile, lambda, z) - eta * eta;
}

cplx riccati_field_zeta(const KinkProfile& profile, const SpectralParameter& lambda, double z,
                        cplx zeta) {
  return 1.0 - riccati_potential(profile, lambda, z) * zeta * zeta;
}

ObstructionSigns real_axis_obstruction([[maybe_unused]] const WaveParameters& params,
                                       const SpectralParameter& lambda) {
  // The speed only scales the field value 2pq/(c^2-1)^2, never its sign.
  const double pq = lambda.p * lambda.q;
  if (pq == 0.0) {
    throw DegenerateLambda("the sign obstruction vanishes on the axes Re λ = 0 and Im λ = 0");
  }
  ObstructionSigns signs;
  signs.eta_sign = pq > 0.0 ? 1 : -1;  // Im(η') = 2 Re λ Im λ / (c^2-1)^2 at real η
  signs.zeta_sign = -signs.eta_sign;   // Im(ζ') = -2 Re λ Im λ σ^2/(c^2-1)^2 at real ζ = σ
  return signs;
}

FixedPointAngles fixed_point_angles(const WaveParameters& params,
                                    const SpectralParameter& lambda) {
  if (lambda.p == 0.0 || lambda.q == 0.0) {
    throw DegenerateLambda("fixed-point angles need λ off both symmetry axes");
  }
  if (lambda.p < 0.0 || lambda.q < 0.0) {
    throw std::invalid_argument("fixed-point angles are defined on the open first quadrant");
  }
  const double r2 = lambda.r * lambda.r;
  const double two_theta = 2.0 * lambda.theta;
  FixedPointAngles out;
  out.theta_u = std::atan2(r2 * std::sin(two_theta),
                           r2 * std::cos(two_theta) + (1.0 - params.c * params.c));
  out.theta_s = out.theta_u - kPi;
  const RiccatiFixedPoints fp = riccati_fixed_points(params, lambda);
  out.eta_u = fp.eta_u;
  out.eta_s = fp.eta_s;
  return out;
}

WitnessReport heteroclinic_witness(const KinkProfile& profile, const SpectralParameter& lambda,
                                   const RiccatiControls& controls) {
  if (lambda.q == 0.0) {
    throw DegenerateLambda("the hemisphere obstruction vanishes for real λ");
  }
  if (!(lambda.p > 0.0)) {
    throw std::invalid_argument(
        "the witness runs on Re λ > 0; the conjugate and reflected quadrants follow by symmetry");
  }

  const WaveParameters& params = profile.params();
  const RiccatiFixedPoints fp = riccati_fixed_points(params, lambda);

  // The hemisphere containing η_u: upper for Im λ > 0, lower for Im λ < 0.
  // All extrema below are tracked on s-reflected values so one code path
  // serves both signs.
  const double s = lambda.q > 0.0 ? 1.0 : -1.0;

  WitnessReport report;
  report.lambda = lambda.value;

  // Offset direction: the quasi-static trajectory sits at
  // η_u + (Q(z) - Q_inf)/(2 η_u) + ..., so the drift into the window points
  // along -1/η_u (the potential approaches its limit from below).
  cplx dir = -1.0 / fp.eta_u;
  dir /= std::abs(dir);
  cplx value = fp.eta_u + controls.delta * dir;
  Chart chart = std::abs(value) <= controls.chart_bound ? Chart::Eta : Chart::Zeta;
  if (chart == Chart::Zeta) value = 1.0 / value;

  double tau = -1.0 + controls.epsilon;
  const double tau_end = 1.0 - controls.epsilon;

  double min_im_eta = std::numeric_limits<double>::infinity();
  double max_im_zeta = -std::numeric_limits<double>::infinity();
  bool saw_zeta = false;

  const auto record_sample = [&](double t, Chart ch, cplx v) {
    const double z = tau_to_z(t);
    report.samples.push_back({t, z, ch, v});
    if (ch == Chart::Eta) {
      min_im_eta = std::min(min_im_eta, s * v.imag());
    } else {
      saw_zeta = true;
      max_im_zeta = std::max(max_im_zeta, s * v.imag());
      if (std::abs(v) > 1e-12) {
        min_im_eta = std::min(min_im_eta, s * (1.0 / v).imag());
      }
    }
  };
  record_sample(tau, chart, value);

  ode::Options opt;
  opt.abs_tol = controls.abs_tol;
  opt.max_step = controls.max_step;

  std::size_t steps_used = 0;
  while (tau < tau_end) {
    if (report.chart_switches > controls.max_chart_switches) {
      throw ChartThrash("more than " + std::to_string(controls.max_chart_switches) +
                        " chart switches at lambda = (" + std::to_string(lambda.p) + ", " +
                        std::to_string(lambda.q) + ")");
    }
    opt.max_steps = controls.max_steps - steps_used;
    const Chart segment_chart = chart;
    std::array<double, 2> y{value.real(), value.imag()};
    double tau_reached = tau;

    const auto rhs = [&](double t, const std::array<double, 2>& st, std::array<double, 2>& dy) {
      const double z = tau_to_z(t);
      const cplx v(st[0], st[1]);
      const cplx f = segment_chart == Chart::Eta
                         ? riccati_field_eta(profile, lambda, z, v)
                         : riccati_field_zeta(profile, lambda, z, v);
      const double jac = 0.5 * kPi * (1.0 + z * z);
      dy[0] = f.real() * jac;
      dy[1] = f.imag() * jac;
    };
    const auto observe = [&](double t, const std::array<double, 2>& st) {
      const cplx v(st[0], st[1]);
      tau_reached = t;
      record_sample(t, segment_chart, v);
      return std::abs(v) > controls.chart_bound ? ode::StepDirective::Stop
                                                : ode::StepDirective::Continue;
    };

    const ode::Stats st = ode::integrate<2>(rhs, y, tau, tau_end, opt, observe);
    steps_used += st.accepted + st.rejected;
    report.stats.accepted += st.accepted;
    report.stats.rejected += st.rejected;
    report.stats.max_error_estimate = std::max(report.stats.max_error_estimate,
                                               st.max_error_estimate);
    value = cplx(y[0], y[1]);
    tau = tau_reached;

    if (std::abs(value) > controls.chart_bound && tau < tau_end) {
      value = 1.0 / value;
      chart = segment_chart == Chart::Eta ? Chart::Zeta : Chart::Eta;
      ++report.chart_switches;
      record_sample(tau, chart, value);
      continue;
    }
    break;
  }

  report.min_im_eta = min_im_eta;
  report.max_im_zeta = saw_zeta ? max_im_zeta : 0.0;
  const bool confined = min_im_eta >= -controls.hemisphere_tol &&
                        (!saw_zeta || max_im_zeta <= controls.hemisphere_tol);
  report.entered_forbidden_hemisphere = !confined;
  report.verdict = confined ? WitnessVerdict::NoEigenvalue : WitnessVerdict::EigenvalueCandidate;
  report.terminal_eta = chart == Chart::Eta ? value : 1.0 / value;
  return report;
}

}  // namespace sgkink
