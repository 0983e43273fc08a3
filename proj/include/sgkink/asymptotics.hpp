#pragma once

// Constant-coefficient asymptotics of the linearized travelling-wave
// problem. Writing the eigenvalue equation for a perturbation w(z) e^{λ t}
// about the kink as a first-order system W' = A(λ, z) W,
//
//   A(λ, z) = [ 0                          1                 ]
//             [ (cos v(z) - λ^2)/(c^2 - 1)  -2 c λ/(c^2 - 1) ],
//
// the z → ±inf limit (cos v → -1) has two eigenvalues γ_u, γ_s, the spatial
// growth rates of the unstable and stable bundles. For superluminal speeds
// no kink exists and the same quadratic, written for the background state,
// yields the characteristic exponents r_1, r_2 whose real-part signs decide
// whether a decaying-at-both-ends eigenfunction can exist.

#include <array>
#include <complex>
#include <vector>

#include "sgkink/profile.hpp"
#include "sgkink/spectral.hpp"
#include "sgkink/wave.hpp"

namespace sgkink {

template <class T>
struct Mat2 {
  T a11{}, a12{}, a21{}, a22{};
};
using Mat2d = Mat2<double>;
using Mat2c = Mat2<std::complex<double>>;

// A(λ, z) along the kink.
Mat2c coefficient_matrix(const KinkProfile& profile, const SpectralParameter& lambda, double z);

// The z → ±inf limit of A(λ, z); both tails share it.
Mat2c limit_matrix(const WaveParameters& params, const SpectralParameter& lambda);

struct AsymptoticData {
  std::complex<double> gamma_u;                    // growth rate, Re γ_u > 0 off the spectrum
  std::complex<double> gamma_s;                    // decay rate
  std::array<std::complex<double>, 2> xi_u{};      // unit eigenvector for γ_u
  std::array<std::complex<double>, 2> xi_s{};      // unit eigenvector for γ_s
};

// Eigenpairs of limit_matrix. Roots of (c^2-1) γ^2 + 2 c λ γ + (λ^2+1) = 0:
//   γ_{u,s} = (-c λ ∓ sqrt(λ^2 - (c^2-1))) / (c^2 - 1).
// Eigenvectors are normalized to unit length with the first significant
// component rotated to the positive real axis. Throws DegenerateSplitting
// when |γ_u - γ_s| < 1e-8.
AsymptoticData asymptotic_eigenpairs(const WaveParameters& params, const SpectralParameter& lambda);

struct LargeLambdaSystem {
  Mat2d matrix;       // leading-order system after rescaling z by 1/λ
  double rate_slow;   // eigenvalue -λ/(c+1)
  double rate_fast;   // eigenvalue -λ/(c-1)
};

// Leading-order rescaled system for |λ| → inf along the real axis: the
// potential term cos v is dominated by λ^2 and drops out, leaving a
// constant-coefficient matrix with the two rates above. Requires λ != 0.
LargeLambdaSystem large_lambda_matrix(const WaveParameters& params, double lambda);

struct CharacteristicExponents {
  std::complex<double> r1;  // (c λ + sqrt(λ^2 + 1 - c^2)) / (1 - c^2)
  std::complex<double> r2;  // (c λ - sqrt(λ^2 + 1 - c^2)) / (1 - c^2)
};

// Characteristic exponents of the superluminal background problem, the
// roots of (1-c^2) r^2 - 2 c λ r - (λ^2+1) = 0. Throws DegenerateSplitting
// when |λ^2 + 1 - c^2| < 1e-12 (double root). Requires a superluminal speed.
CharacteristicExponents superluminal_exponents(const WaveParameters& params,
                                               const SpectralParameter& lambda);

struct ExponentScanPoint {
  double c = 0.0;
  std::complex<double> lambda;
  bool degenerate = false;        // double root at c or at the FD stencil speeds
  int sign_re_r1 = 0;             // sign of Re r1 (+1 / 0 / -1)
  int sign_re_r2 = 0;
  bool signs_agree = false;       // sign_re_r1 == sign_re_r2 != 0
  double d_re_r1_dc = 0.0;        // centered finite-difference derivative in c
  double d_re_r2_dc = 0.0;
  bool derivative_matches = false;  // both FD derivative signs equal sign(Re λ)
};

struct ExponentSignScan {
  std::vector<ExponentScanPoint> points;
  int degenerate_count = 0;
  bool all_signs_agree = true;        // over non-degenerate points
  bool all_derivatives_match = true;  // diagnostic only; see report module
};

// Evaluates sign agreement of Re r1, Re r2 and the finite-difference
// c-derivative signs over a speed grid times a λ grid. Degenerate points
// are flagged and excluded from the summaries.
ExponentSignScan exponent_sign_scan(const std::vector<double>& c_grid,
                                    const std::vector<std::complex<double>>& lambda_grid);

}  // namespace sgkink
