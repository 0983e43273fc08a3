#pragma once

// Riccati reduction of the linearized flow for complex spectral parameters.
// After the Liouville shift η = w'/w + c λ/(c^2-1), which removes the trace
// term, the slope η obeys
//
//   η' = Q(z) - η^2,   Q(z) = (cos v(z) - λ^2)/(c^2-1) + c^2 λ^2/(c^2-1)^2,
//
// an ODE on the Riemann sphere CP^1. The chart ζ = 1/η (ζ' = 1 - Q ζ^2)
// covers the pole. For λ off both symmetry axes the imaginary part of the
// field on the real η-axis has one sign, Im(η') = 2 Re λ Im λ/(c^2-1)^2, so
// one open hemisphere is forward invariant: a trajectory pinned there can
// never close up into the decaying-at-both-ends connection an eigenvalue
// needs. The witness integrates the trajectory from the unstable fixed
// point and certifies that confinement.

#include <complex>
#include <cstddef>
#include <vector>

#include "sgkink/lagrangian_flow.hpp"
#include "sgkink/profile.hpp"
#include "sgkink/spectral.hpp"

namespace sgkink {

enum class Chart { Eta, Zeta };

struct RiccatiState {
  double tau = 0.0;
  double z = 0.0;
  Chart chart = Chart::Eta;
  std::complex<double> value;  // η in the Eta chart, ζ = 1/η in the Zeta chart
};

struct RiccatiFixedPoints {
  std::complex<double> eta_u;  // forward-attracting: -sqrt(λ^2-(c^2-1))/(c^2-1)
  std::complex<double> eta_s;  // -eta_u
};

struct RiccatiControls {
  double epsilon = 1e-3;        // offset of the window from tau = +/-1
  double abs_tol = 1e-10;       // local error tolerance, per real component
  double max_step = 1e-2;       // max step in tau
  double delta = 1e-4;          // seed offset from the fixed point
  double chart_bound = 2.0;     // leave a chart when |value| exceeds this
  double hemisphere_tol = 1e-8; // slack allowed on the invariant-hemisphere check
  int max_chart_switches = 100;
  std::size_t max_steps = 4'000'000;
};

// Shift taking phase-plane slopes w'/w to the Riccati variable.
std::complex<double> liouville_shift(const WaveParameters& params, const SpectralParameter& lambda,
                                     std::complex<double> slope);

// Fixed points of the limit Riccati field (z -> +/-inf). Throws
// DegenerateSplitting when they collide (within 1e-8).
RiccatiFixedPoints riccati_fixed_points(const WaveParameters& params,
                                        const SpectralParameter& lambda);

// Field values, exposed for direct inspection and tests.
std::complex<double> riccati_potential(const KinkProfile& profile, const SpectralParameter& lambda,
                                       double z);
std::complex<double> riccati_potential_limit(const WaveParameters& params,
                                             const SpectralParameter& lambda);
std::complex<double> riccati_field_eta(const KinkProfile& profile, const SpectralParameter& lambda,
                                       double z, std::complex<double> eta);
std::complex<double> riccati_field_zeta(const KinkProfile& profile, const SpectralParameter& lambda,
                                        double z, std::complex<double> zeta);

struct ObstructionSigns {
  int eta_sign = 0;   // sign of Im(η') on the real η-axis: sign(Re λ · Im λ)
  int zeta_sign = 0;  // sign of Im(ζ') on the real ζ-axis: the opposite
};

// The z-independent sign obstruction. Throws DegenerateLambda when λ lies on
// a symmetry axis (Re λ · Im λ = 0), where the obstruction vanishes.
ObstructionSigns real_axis_obstruction(const WaveParameters& params,
                                       const SpectralParameter& lambda);

struct FixedPointAngles {
  double theta_u = 0.0;  // arg of the attracting fixed direction's square
  double theta_s = 0.0;  // theta_u - pi
  std::complex<double> eta_u;
  std::complex<double> eta_s;
};

// Polar form of the fixed points for λ = r e^{iθ} in the open first
// quadrant: theta_u = atan2(r^2 sin 2θ, r^2 cos 2θ + (1 - c^2)), which
// collapses to θ itself on the circle r^2 = 1 - c^2. Throws
// DegenerateLambda on the axes.
FixedPointAngles fixed_point_angles(const WaveParameters& params, const SpectralParameter& lambda);

enum class WitnessVerdict { NoEigenvalue, EigenvalueCandidate };

struct WitnessReport {
  std::complex<double> lambda;
  double min_im_eta = 0.0;   // min over the trajectory of Im η (reflected for Im λ < 0)
  double max_im_zeta = 0.0;  // max over Zeta-chart samples of Im ζ (same reflection)
  bool entered_forbidden_hemisphere = false;
  int chart_switches = 0;
  WitnessVerdict verdict = WitnessVerdict::NoEigenvalue;
  std::complex<double> terminal_eta;  // final state mapped back to the Eta chart
  std::vector<RiccatiState> samples;
  IntegratorStats stats;
};

// Integrates the Riccati trajectory seeded a distance delta from η_u at
// tau = -1+eps across the whole line, switching charts whenever the current
// value leaves the disk |value| <= chart_bound, and checks that it never
// leaves the invariant hemisphere {Im η > 0} (for Im λ > 0; the conjugate
// hemisphere otherwise) by more than hemisphere_tol. Requires Re λ > 0 and
// Im λ != 0: throws std::invalid_argument / DegenerateLambda otherwise, and
// ChartThrash if chart switches exceed their budget.
WitnessReport heteroclinic_witness(const KinkProfile& profile, const SpectralParameter& lambda,
                                   const RiccatiControls& controls = {});

}  // namespace sgkink
