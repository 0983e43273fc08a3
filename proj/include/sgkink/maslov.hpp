#pragma once

// Crossing detection and Maslov-type counting for the projectivized flow.
// An eigenvalue candidate on the real axis announces itself when the curve
// of unstable directions meets the stable asymptotic direction xi_s. Each
// transversal meeting contributes the sign of the crossing form
//
//   Γ(z, W) = ((cos v - λ^2)/(c^2-1)) w1^2 - (2 c λ/(c^2-1)) w1 w2 - w2^2,
//
// which for a unit frame is exactly the angular velocity of the flow, so
// detection, refinement and sign extraction all run through one quantity.

#include <functional>
#include <vector>

#include "sgkink/lagrangian_flow.hpp"
#include "sgkink/profile.hpp"

namespace sgkink {

struct CrossingControls {
  double guard_band = 1e-2;        // |tau| > 1 - guard_band classifies as endpoint
  double bisect_tol = 1e-12;       // tau resolution of the bisection refinement
  // Sign flips below this angular size are noise. Detection raises the
  // effective floor to the record's accumulated error budget (accepted steps
  // times the per-step estimate, with headroom) when that is larger.
  double noise_floor = 1e-6;
  double gamma_regularity = 1e-8;  // |Γ| below this is not a trustworthy sign
  // Optional predicate marking the profile's asymptotic tail, where a
  // sub-regularity |Γ| is the expected endpoint artifact rather than a
  // genuinely irregular interior crossing.
  std::function<bool(double z)> endpoint_tail;
};

struct CrossingEvent {
  double tau = 0.0;
  double z = 0.0;
  double gamma = 0.0;       // crossing form at the refined crossing
  int sign = 0;             // sign of gamma (0 only for endpoint artifacts)
  LagrangianFrame frame;    // the crossing line
};

struct CrossingScan {
  std::vector<CrossingEvent> crossings;           // counted, transversal, interior
  std::vector<CrossingEvent> endpoint_crossings;  // guard band or tail artifacts
};

// Γ at (z, frame) for the kink problem at real λ.
double crossing_form(const KinkProfile& profile, double lambda, double z,
                     const LagrangianFrame& frame);

// Scans a recorded trajectory for meetings with the line xi_s, refines each
// candidate to |tau| accuracy controls.bisect_tol by re-integrating through
// flow, and classifies it. Sign changes are prefiltered on the angular
// distance to xi_s so noise-level grazing in the asymptotic regime is not
// double counted. Throws IrregularCrossing for interior crossings with
// |Γ| < gamma_regularity outside the declared tail.
CrossingScan detect_crossings(const LineFlow& flow, const TrajectoryRecord& record,
                              const LagrangianFrame& xi_s, const CrossingControls& controls = {});

struct MaslovResult {
  double lambda = 0.0;
  std::vector<CrossingEvent> crossings;
  int count = 0;                // number of counted crossings
  int index = 0;                // sum of crossing signs
  int endpoint_crossings = 0;   // events excluded from the count
};

// Full pipeline at one real λ: seed at xi_u, flow across the compactified
// line, detect crossings with xi_s.
MaslovResult maslov_index(const KinkProfile& profile, double lambda,
                          const IntegrationControls& integration = {},
                          const CrossingControls& crossing = {});

struct SweepResult {
  std::vector<double> lambdas;
  std::vector<MaslovResult> sweep;
  int eigenvalue_count = 0;  // |count at the last grid point - count at the first|
  bool grid_jump = false;    // some adjacent pair changed count by 2 or more
};

// Crossing counts over a uniform λ grid with grid_n >= 2 points. The count
// difference between the endpoints bounds the number of real eigenvalues in
// between; a jump of 2+ between neighbours flags an under-resolved grid.
SweepResult eigenvalue_count(const KinkProfile& profile, double lambda1, double lambda2,
                             int grid_n, const IntegrationControls& integration = {},
                             const CrossingControls& crossing = {}, int jobs = 1);

}  // namespace sgkink
