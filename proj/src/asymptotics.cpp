#include "sgkink/asymptotics.hpp"

#include <cmath>
#include <string>

namespace sgkink {

namespace {

using cplx = std::complex<double>;

// Unit-length representative with the first significant component rotated
// onto the positive real axis, so equal lines give equal vectors.
std::array<cplx, 2> normalize_eigenvector(cplx w1, cplx w2) {
  const double norm = std::sqrt(std::norm(w1) + std::norm(w2));
  w1 /= norm;
  w2 /= norm;
  const cplx lead = std::abs(w1) > 1e-12 ? w1 : w2;
  const cplx phase = std::conj(lead) / std::abs(lead);
  return {w1 * phase, w2 * phase};
}

}  // namespace

Mat2c coefficient_matrix(const KinkProfile& profile, const SpectralParameter& lambda, double z) {
  const double c = profile.params().c;
  const double denom = c * c - 1.0;
  Mat2c a;
  a.a11 = 0.0;
  a.a12 = 1.0;
  a.a21 = (cos_kink_value(profile, z) - lambda.value * lambda.value) / denom;
  a.a22 = -2.0 * c * lambda.value / denom;
  return a;
}

Mat2c limit_matrix(const WaveParameters& params, const SpectralParameter& lambda) {
  const double c = params.c;
  const double denom = c * c - 1.0;
  Mat2c a;
  a.a11 = 0.0;
  a.a12 = 1.0;
  a.a21 = (-1.0 - lambda.value * lambda.value) / denom;
  a.a22 = -2.0 * c * lambda.value / denom;
  return a;
}

AsymptoticData asymptotic_eigenpairs(const WaveParameters& params,
                                     const SpectralParameter& lambda) {
  const double c = params.c;
  const double denom = c * c - 1.0;
  const cplx lam = lambda.value;
  const cplx root = std::sqrt(lam * lam - denom);
  AsymptoticData out;
  out.gamma_u = (-c * lam - root) / denom;
  out.gamma_s = (-c * lam + root) / denom;
  if (std::abs(out.gamma_u - out.gamma_s) < 1e-8) {
    throw DegenerateSplitting("stable/unstable rates coincide at lambda = (" +
                              std::to_string(lambda.p) + ", " + std::to_string(lambda.q) + ")");
  }
  // Eigenvector of [[0,1],[a21,a22]] for eigenvalue γ is (1, γ); the
  // equivalent scaling ((-cλ ± sqrt)/(λ^2+1), 1) is smooth through λ^2 = -1
  // only in the first form, so pick per magnitude of λ^2+1.
  const cplx s = lam * lam + 1.0;
  if (std::abs(s) > 1e-12) {
    out.xi_u = normalize_eigenvector((-c * lam + root) / s, 1.0);
    out.xi_s = normalize_eigenvector((-c * lam - root) / s, 1.0);
  } else {
    out.xi_u = normalize_eigenvector(1.0, out.gamma_u);
    out.xi_s = normalize_eigenvector(1.0, out.gamma_s);
  }
  return out;
}

LargeLambdaSystem large_lambda_matrix(const WaveParameters& params, double lambda) {
  if (lambda == 0.0) {
    throw std::invalid_argument("large-lambda rescaling needs lambda != 0");
  }
  const double c = params.c;
  const double denom = c * c - 1.0;
  LargeLambdaSystem out;
  out.matrix.a11 = 0.0;
  out.matrix.a12 = 1.0;
  out.matrix.a21 = -lambda * lambda / denom;
  out.matrix.a22 = -2.0 * c * lambda / denom;
  out.rate_slow = -lambda / (c + 1.0);
  out.rate_fast = -lambda / (c - 1.0);
  return out;
}

CharacteristicExponents superluminal_exponents(const WaveParameters& params,
                                               const SpectralParameter& lambda) {
  if (!(params.c > 1.0)) {
    throw std::invalid_argument("characteristic exponents are defined for superluminal speeds");
  }
  const double c = params.c;
  const cplx lam = lambda.value;
  const cplx disc = lam * lam + (1.0 - c * c);
  if (std::abs(disc) < 1e-12) {
    throw DegenerateSplitting("characteristic exponents collide: lambda^2 + 1 - c^2 ~ 0");
  }
  const cplx root = std::sqrt(disc);
  CharacteristicExponents out;
  out.r1 = (c * lam + root) / (1.0 - c * c);
  out.r2 = (c * lam - root) / (1.0 - c * c);
  return out;
}

namespace {

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

ExponentSignScan exponent_sign_scan(const std::vector<double>& c_grid,
                                    const std::vector<std::complex<double>>& lambda_grid) {
  ExponentSignScan scan;
  scan.points.reserve(c_grid.size() * lambda_grid.size());
  for (const double c : c_grid) {
    const WaveParameters params = classify_wave(c);
    // Stencil small enough to stay superluminal for any c in the regime.
    const double h = std::min(1e-4, 0.25 * (c - 1.0));
    for (const cplx lam : lambda_grid) {
      ExponentScanPoint pt;
      pt.c = c;
      pt.lambda = lam;
      const SpectralParameter sp(lam);
      try {
        const CharacteristicExponents mid = superluminal_exponents(params, sp);
        const CharacteristicExponents lo = superluminal_exponents(classify_wave(c - h), sp);
        const CharacteristicExponents hi = superluminal_exponents(classify_wave(c + h), sp);
        pt.sign_re_r1 = sign_of(mid.r1.real());
        pt.sign_re_r2 = sign_of(mid.r2.real());
        pt.signs_agree = pt.sign_re_r1 != 0 && pt.sign_re_r1 == pt.sign_re_r2;
        pt.d_re_r1_dc = (hi.r1.real() - lo.r1.real()) / (2.0 * h);
        pt.d_re_r2_dc = (hi.r2.real() - lo.r2.real()) / (2.0 * h);
        const int want = sign_of(lam.real());
        pt.derivative_matches =
            want != 0 && sign_of(pt.d_re_r1_dc) == want && sign_of(pt.d_re_r2_dc) == want;
      } catch (const DegenerateSplitting&) {
        pt.degenerate = true;
        ++scan.degenerate_count;
      }
      if (!pt.degenerate) {
        scan.all_signs_agree = scan.all_signs_agree && pt.signs_agree;
        scan.all_derivatives_match = scan.all_derivatives_match && pt.derivative_matches;
      }
      scan.points.push_back(pt);
    }
  }
  return scan;
}

}  // namespace sgkink
