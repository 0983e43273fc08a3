#include "sgkink/profile.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sgkink {

namespace {

double orientation_sign(Orientation o) { return o == Orientation::Up ? 1.0 : -1.0; }

}  // namespace

KinkProfile::KinkProfile(WaveParameters params, Orientation orientation, double center)
    : params_(params), orientation_(orientation), center_(center) {
  if (!params_.subluminal()) {
    throw std::invalid_argument("kink profiles exist only for subluminal speeds, got c = " +
                                std::to_string(params_.c));
  }
  if (!std::isfinite(center)) {
    throw std::invalid_argument("kink center must be finite");
  }
}

double kink_value(const KinkProfile& profile, double z) {
  const double t = std::tanh(profile.params().k * (z - profile.center()));
  return orientation_sign(profile.orientation()) * 2.0 * std::asin(t);
}

double kink_slope(const KinkProfile& profile, double z) {
  const double k = profile.params().k;
  const double s = 1.0 / std::cosh(k * (z - profile.center()));
  return orientation_sign(profile.orientation()) * 2.0 * k * s;
}

double kink_curvature(const KinkProfile& profile, double z) {
  const double k = profile.params().k;
  const double u = k * (z - profile.center());
  const double s = 1.0 / std::cosh(u);
  return orientation_sign(profile.orientation()) * (-2.0 * k * k * s * std::tanh(u));
}

double cos_kink_value(const KinkProfile& profile, double z) {
  const double t = std::tanh(profile.params().k * (z - profile.center()));
  return 1.0 - 2.0 * t * t;
}

double kink_inverse(const KinkProfile& profile, double v) {
  const double w = orientation_sign(profile.orientation()) * v;
  if (!(w > -std::numbers::pi && w < std::numbers::pi)) {
    throw std::invalid_argument("kink_inverse requires v strictly inside (-pi, pi)");
  }
  return profile.center() + std::atanh(std::sin(0.5 * w)) / profile.params().k;
}

double tangent_slope(const KinkProfile& profile, double z) {
  const double c = profile.params().c;
  const double u = profile.params().k * (z - profile.center());
  const double sech = 1.0 / std::cosh(u);
  // 2 cos v + 2 = 4 sech^2 on the kink. The product form stays accurate to
  // ulps in the tails, where 2 cos_kink_value + 2 = 4 (1 - tanh^2) loses all
  // its digits to cancellation as tanh saturates.
  const double level = (1.0 - c * c) * 4.0 * sech * sech;
  if (level < 1e-15) {
    throw DegenerateProfilePoint("orbit tangent undefined: cos v + 1 underflows at z = " +
                                 std::to_string(z));
  }
  // sin v = 2 tanh sech in the Up orientation; the ratio -sin v / sqrt(level)
  // is orientation-independent (both sin v and v_z flip sign together).
  const double sin_v = 2.0 * std::tanh(u) * sech;
  return -sin_v / std::sqrt(level);
}

double pendulum_residual(const KinkProfile& profile, double z) {
  const double c = profile.params().c;
  // sin v via the half-angle closed form, not sin(kink_value(z)): the arcsin
  // in kink_value amplifies roundoff by ~e^{k|z|} in the tails, which would
  // swamp the residual there. Both terms here are exact up to a few ulps at
  // every z, so any formula inconsistency shows up cleanly.
  const double u = profile.params().k * (z - profile.center());
  const double sin_v =
      orientation_sign(profile.orientation()) * 2.0 * std::tanh(u) / std::cosh(u);
  return (c * c - 1.0) * kink_curvature(profile, z) - sin_v;
}

}  // namespace sgkink
