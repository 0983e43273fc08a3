#pragma once

// Closed-form subluminal kink profiles. A kink is a heteroclinic orbit of
// the pendulum equation (c^2 - 1) v_zz = sin v connecting v = -pi to v = pi
// (orientation Up) or pi to -pi (Down). With k = 1/sqrt(1 - c^2) the
// ascending profile centred at z0 is
//
//   v(z)   = 2 asin(tanh(k (z - z0)))
//   v_z(z) = 2 k sech(k (z - z0))
//
// and the orbit lies on the energy level v_z = sqrt(2 (cos v + 1) / (1 - c^2)).

#include "sgkink/wave.hpp"

namespace sgkink {

enum class Orientation { Up, Down };

class KinkProfile {
 public:
  // Throws std::invalid_argument if params is not subluminal.
  explicit KinkProfile(WaveParameters params, Orientation orientation = Orientation::Up,
                       double center = 0.0);

  const WaveParameters& params() const { return params_; }
  Orientation orientation() const { return orientation_; }
  double center() const { return center_; }

 private:
  WaveParameters params_;
  Orientation orientation_;
  double center_;
};

// Profile value v(z), in [-pi, pi] (the open interval up to floating-point
// saturation of tanh at large |z|).
double kink_value(const KinkProfile& profile, double z);

// First derivative v_z(z). Positive everywhere for Up, negative for Down.
double kink_slope(const KinkProfile& profile, double z);

// Second derivative v_zz(z).
double kink_curvature(const KinkProfile& profile, double z);

// cos v(z) computed as 1 - 2 tanh^2(k (z - z0)), avoiding the asin/cos
// round trip; exact -1 limits at z = +/-inf.
double cos_kink_value(const KinkProfile& profile, double z);

// Inverse of kink_value on the open interval v in (-pi, pi): the unique z
// with kink_value(z) = v. Throws std::invalid_argument outside the interval.
double kink_inverse(const KinkProfile& profile, double v);

// Slope d(v_z)/dv of the orbit in the (v, v_z) phase plane at the point the
// profile occupies at z; equals kink_curvature / kink_slope. Evaluated from
// the energy level as -sin v / sqrt((1 - c^2)(2 cos v + 2)) (sign flipped
// for Down), which degenerates where cos v + 1 underflows: throws
// DegenerateProfilePoint there.
double tangent_slope(const KinkProfile& profile, double z);

// Residual (c^2 - 1) v_zz - sin v of the profile equation; zero up to
// rounding for all z.
double pendulum_residual(const KinkProfile& profile, double z);

}  // namespace sgkink
