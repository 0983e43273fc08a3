#pragma once

// Projectivized linearized flow on the compactified line. A nonzero plane
// vector W = (w1, w2) is tracked only up to scale, i.e. as a line through
// the origin, represented by its angle theta with (w1, w2) ~ (cos, sin).
// Under W' = A(z) W the angle obeys
//
//   dθ/dz = a21 cos^2 θ + (a22 - a11) sin θ cos θ - a12 sin^2 θ,
//
// and the line z in (-inf, inf) is compactified to tau in (-1, 1) via
// z = tan(pi tau / 2). Integrations run over [-1+eps, 1-eps]; near the ends
// the angle is glued to the attracting eigendirection of the limit system,
// so the stiff compactification factor (pi/2)(1+z^2) multiplies a vanishing
// rate and explicit stepping stays cheap.

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "sgkink/asymptotics.hpp"
#include "sgkink/ode.hpp"
#include "sgkink/profile.hpp"

namespace sgkink {

// A line through the origin of the phase plane: unit representative
// (w1, w2) = (cos angle, sin angle) with angle canonicalized to [0, pi).
struct LagrangianFrame {
  double w1 = 1.0;
  double w2 = 0.0;
  double angle = 0.0;

  static LagrangianFrame from_angle(double theta);
  static LagrangianFrame from_vector(double w1, double w2);
};

// Distance between two lines: the absolute angle between them, in [0, pi/2].
double rp1_distance(double theta_a, double theta_b);

double tau_to_z(double tau);
double z_to_tau(double z);

struct IntegrationControls {
  double epsilon = 1e-3;        // offset of the integration window from tau = +/-1
  double abs_tol = 1e-10;       // local error tolerance on the angle
  double max_step = 1e-2;       // max step in tau
  double max_angle_step = 0.2;  // reject steps rotating the line more than this
  std::size_t max_steps = 2'000'000;
};

struct IntegratorStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double max_error_estimate = 0.0;
};

// Angle trajectory of one line under the flow. theta holds the continuous
// lift (no wrapping), so total rotation is theta.back() - theta.front();
// samples sit at the integrator's accepted steps and are strictly monotone
// in tau in the direction of integration.
struct TrajectoryRecord {
  double lambda = 0.0;
  std::vector<double> tau;
  std::vector<double> theta;
  IntegratorStats stats;

  LagrangianFrame frame_at(std::size_t i) const { return LagrangianFrame::from_angle(theta.at(i)); }
};

// The projectivized flow of W' = M(z) W for an arbitrary locally bounded
// coefficient field M, integrated in the compactified coordinate. Keeping
// the field alongside the controls lets crossing detection re-integrate
// short spans between recorded samples when it refines a crossing.
class LineFlow {
 public:
  using MatrixField = std::function<Mat2d(double z)>;

  LineFlow(MatrixField field, IntegrationControls controls);

  const IntegrationControls& controls() const { return controls_; }

  // dθ/dz at physical coordinate z; for a unit frame this equals the
  // crossing form of the line against itself moved by the flow.
  double angle_velocity(double z, double theta) const;

  // Integrates the angle from (tau0, theta0) to tau1 (either direction),
  // recording every accepted step. lambda_tag only labels the record.
  TrajectoryRecord integrate(double tau0, double tau1, double theta0,
                             double lambda_tag = 0.0) const;

  // Continuous-lift angle reached at tau1 starting from (tau0, theta0);
  // no samples are recorded.
  double advance_angle(double tau0, double theta0, double tau1) const;

  // Continuous-lift angle at arbitrary tau inside the record's span,
  // re-integrated from the nearest recorded sample on the start side.
  double angle_at(const TrajectoryRecord& record, double tau) const;

 private:
  MatrixField field_;
  IntegrationControls controls_;
};

// The kink's linearized coefficient field at real spectral parameter lambda.
LineFlow kink_line_flow(const KinkProfile& profile, double lambda,
                        IntegrationControls controls = {});

// Trajectory seeded at the unstable asymptotic eigendirection at tau = -1+eps
// and integrated forward to tau = 1-eps.
TrajectoryRecord unstable_curve(const KinkProfile& profile, double lambda,
                                const IntegrationControls& controls = {});

struct CircleFixedPoint {
  double angle = 0.0;  // in [0, pi)
  bool attracting = false;
};

// Fixed points of the limit circle flow: the two eigendirections of the
// limit matrix. Index 0 is the unstable-rate direction (attracting for the
// forward flow, since generic solutions align with the dominant rate),
// index 1 the stable-rate direction (repelling).
std::array<CircleFixedPoint, 2> limit_angle_fixed_points(const WaveParameters& params,
                                                         double lambda);

}  // namespace sgkink
