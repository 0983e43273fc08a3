#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "sgkink/asymptotics.hpp"
#include "sgkink/errors.hpp"
#include "sgkink/profile.hpp"
#include "sgkink/spectral.hpp"
#include "sgkink/wave.hpp"

using namespace sgkink;
using cplx = std::complex<double>;

namespace {

// Independent eigensolve of a companion-form matrix [[0,1],[b,a]]: the
// eigenvalues are the roots of x^2 - a x - b, straight from the quadratic
// formula. Used as an oracle against asymptotic_eigenpairs.
std::array<cplx, 2> companion_roots(cplx b, cplx a) {
  const cplx disc = std::sqrt(a * a + 4.0 * b);
  return {(a + disc) / 2.0, (a - disc) / 2.0};
}

double set_distance(const std::array<cplx, 2>& u, const std::array<cplx, 2>& v) {
  const double direct = std::max(std::abs(u[0] - v[0]), std::abs(u[1] - v[1]));
  const double swapped = std::max(std::abs(u[0] - v[1]), std::abs(u[1] - v[0]));
  return std::min(direct, swapped);
}

cplx apply_minus_gamma(const Mat2c& m, cplx gamma, const std::array<cplx, 2>& w, int row) {
  if (row == 0) return (m.a11 - gamma) * w[0] + m.a12 * w[1];
  return m.a21 * w[0] + (m.a22 - gamma) * w[1];
}

}  // namespace

TEST_CASE("limit rates at c = 0.6, lambda = 1") {
  const WaveParameters params = classify_wave(0.6);
  const AsymptoticData data = asymptotic_eigenpairs(params, SpectralParameter(1.0, 0.0));
  CHECK(std::abs(data.gamma_u - cplx(2.938476324197765, 0.0)) <= 1e-12);
  CHECK(std::abs(data.gamma_s - cplx(-1.0634763241977654, 0.0)) <= 1e-12);
}

TEST_CASE("limit rates satisfy their quadratic") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> speed(0.0, 0.95);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = speed(rng);
    const cplx lam(re(rng), re(rng));
    if (std::abs(lam * lam - (c * c - 1.0)) < 1e-6) continue;  // near-double root
    const WaveParameters params = classify_wave(c);
    const AsymptoticData data = asymptotic_eigenpairs(params, SpectralParameter(lam));
    const double denom = c * c - 1.0;
    const double tol = 1e-10 * (1.0 + std::norm(lam));
    for (const cplx g : {data.gamma_u, data.gamma_s}) {
      const cplx residual = denom * g * g + 2.0 * c * lam * g + (lam * lam + 1.0);
      CHECK(std::abs(residual) <= tol);
    }
  }
}

TEST_CASE("limit rates match an independent eigensolve of the limit matrix") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> speed(0.0, 0.9);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = speed(rng);
    const cplx lam(re(rng), re(rng));
    if (std::abs(lam * lam - (c * c - 1.0)) < 1e-6) continue;
    const WaveParameters params = classify_wave(c);
    const SpectralParameter sp(lam);
    const Mat2c m = limit_matrix(params, sp);
    const AsymptoticData data = asymptotic_eigenpairs(params, sp);
    const std::array<cplx, 2> oracle = companion_roots(m.a21, m.a22);
    const double tol = 1e-11 * (1.0 + std::norm(lam)) / (1.0 - c * c);
    CHECK(set_distance({data.gamma_u, data.gamma_s}, oracle) <= tol);
  }
}

TEST_CASE("eigenvectors annihilate the limit matrix shifted by their rate") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> speed(0.0, 0.9);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = speed(rng);
    const cplx lam(re(rng), re(rng));
    if (std::abs(lam * lam - (c * c - 1.0)) < 1e-6) continue;
    const WaveParameters params = classify_wave(c);
    const SpectralParameter sp(lam);
    const Mat2c m = limit_matrix(params, sp);
    const AsymptoticData data = asymptotic_eigenpairs(params, sp);
    const double amax =
        std::max({1.0, std::abs(m.a21), std::abs(m.a22), std::abs(data.gamma_u)});
    const double tol = 1e-11 * amax;
    for (int row = 0; row < 2; ++row) {
      CHECK(std::abs(apply_minus_gamma(m, data.gamma_u, data.xi_u, row)) <= tol);
      CHECK(std::abs(apply_minus_gamma(m, data.gamma_s, data.xi_s, row)) <= tol);
    }
  }
}

TEST_CASE("eigenvectors are unit length with a positive-real leading component") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> speed(0.0, 0.9);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double c = speed(rng);
    const cplx lam(re(rng), re(rng));
    if (std::abs(lam * lam - (c * c - 1.0)) < 1e-6) continue;
    const AsymptoticData data =
        asymptotic_eigenpairs(classify_wave(c), SpectralParameter(lam));
    for (const auto& xi : {data.xi_u, data.xi_s}) {
      const double norm = std::sqrt(std::norm(xi[0]) + std::norm(xi[1]));
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));
      const cplx lead = std::abs(xi[0]) > 1e-12 ? xi[0] : xi[1];
      CHECK(lead.real() > 0.0);
      CHECK(std::abs(lead.imag()) <= 1e-13 * std::abs(lead));
    }
  }
}

TEST_CASE("rate gap at lambda = 0 equals twice the width parameter") {
  for (const double c : {0.0, 0.3, 0.6, 0.9, 0.99}) {
    const WaveParameters params = classify_wave(c);
    const AsymptoticData data = asymptotic_eigenpairs(params, SpectralParameter(0.0, 0.0));
    CHECK(std::abs(data.gamma_u - data.gamma_s) ==
          doctest::Approx(2.0 * params.k).epsilon(1e-13));
    CHECK(std::abs(data.gamma_u + data.gamma_s) <= 1e-13 * params.k);
  }
}

TEST_CASE("rates split across zero for spectral parameters off the imaginary axis") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> speed(0.0, 0.95);
  std::uniform_real_distribution<double> re(0.05, 3.0);
  std::uniform_real_distribution<double> im(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const AsymptoticData data = asymptotic_eigenpairs(
        classify_wave(speed(rng)), SpectralParameter(re(rng), im(rng)));
    CHECK(data.gamma_u.real() > 0.0);
    CHECK(data.gamma_s.real() < 0.0);
  }
}

TEST_CASE("double roots are refused") {
  // The rates collide where lambda^2 = c^2 - 1. A branch-point hit must be
  // exact in double arithmetic to land under the collision threshold, and
  // this q is a representable number with q*q == 1 - fl(0.4^2) exactly.
  const double q = 0.916515138991168;
  CHECK_THROWS_AS(asymptotic_eigenpairs(classify_wave(0.4), SpectralParameter(0.0, q)),
                  DegenerateSplitting);
  // Real spectral parameters never collide in the subluminal regime.
  for (double lam = -10.0; lam <= 10.0; lam += 0.5) {
    CHECK_NOTHROW(asymptotic_eigenpairs(classify_wave(0.5), SpectralParameter(lam, 0.0)));
  }
}

TEST_CASE("coefficient matrix reaches its limit in the tails") {
  const WaveParameters params = classify_wave(0.5);
  const KinkProfile profile(params, Orientation::Up, 0.0);
  const SpectralParameter sp(0.7, 0.0);
  const Mat2c limit = limit_matrix(params, sp);
  for (const double z : {-500.0, 500.0}) {
    const Mat2c m = coefficient_matrix(profile, sp, z);
    CHECK(m.a11 == limit.a11);
    CHECK(m.a12 == limit.a12);
    CHECK(m.a21 == limit.a21);  // cos v is exactly -1 this far out
    CHECK(m.a22 == limit.a22);
  }
}

TEST_CASE("tail convergence rate of the coefficient matrix is twice the width parameter") {
  const WaveParameters params = classify_wave(0.5);
  const KinkProfile profile(params, Orientation::Up, 0.0);
  const SpectralParameter sp(1.0, 0.0);
  const Mat2c limit = limit_matrix(params, sp);
  // Least-squares slope of log|a21(z) - a21(inf)| over a window where the
  // deviation is far from both the pure-tail regime and roundoff.
  std::vector<double> zs, logs;
  for (double z = 6.0; z <= 11.0 + 1e-9; z += 0.5) {
    const double d = std::abs(coefficient_matrix(profile, sp, z).a21 - limit.a21);
    zs.push_back(z);
    logs.push_back(std::log(d));
  }
  double sz = 0, sl = 0, szz = 0, szl = 0;
  const double n = static_cast<double>(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    sz += zs[i];
    sl += logs[i];
    szz += zs[i] * zs[i];
    szl += zs[i] * logs[i];
  }
  const double slope = (n * szl - sz * sl) / (n * szz - sz * sz);
  CHECK(slope == doctest::Approx(-2.0 * params.k).epsilon(1e-5));
}

TEST_CASE("rescaled system for large spectral parameters") {
  const WaveParameters params = classify_wave(0.5);
  const LargeLambdaSystem sys = large_lambda_matrix(params, 10.0);
  CHECK(sys.rate_slow == doctest::Approx(-20.0 / 3.0).epsilon(1e-14));
  CHECK(sys.rate_fast == doctest::Approx(20.0).epsilon(1e-14));
  // The stated rates are the eigenvalues of the stated matrix.
  CHECK(sys.matrix.a11 + sys.matrix.a22 ==
        doctest::Approx(sys.rate_slow + sys.rate_fast).epsilon(1e-13));
  CHECK(sys.matrix.a11 * sys.matrix.a22 - sys.matrix.a12 * sys.matrix.a21 ==
        doctest::Approx(sys.rate_slow * sys.rate_fast).epsilon(1e-13));
  CHECK_THROWS_AS(large_lambda_matrix(params, 0.0), std::invalid_argument);
}

TEST_CASE("characteristic exponents at c = sqrt(2)") {
  const WaveParameters params = classify_wave(std::sqrt(2.0));
  const CharacteristicExponents e = superluminal_exponents(params, SpectralParameter(2.0, 0.0));
  CHECK(std::abs(e.r1 - cplx(-4.560477932315066, 0.0)) <= 1e-12);
  CHECK(std::abs(e.r2 - cplx(-1.0963763171773127, 0.0)) <= 1e-12);
  // lambda^2 + 1 - c^2 = 0 is a double root.
  CHECK_THROWS_AS(superluminal_exponents(params, SpectralParameter(1.0, 0.0)),
                  DegenerateSplitting);
  CHECK_THROWS_AS(superluminal_exponents(classify_wave(0.5), SpectralParameter(2.0, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("characteristic exponents satisfy their quadratic") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> speed(1.05, 4.0);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  int checked = 0;
  while (checked < 200) {
    const double c = speed(rng);
    const cplx lam(re(rng), re(rng));
    if (std::abs(lam * lam + 1.0 - c * c) < 1e-6) continue;
    const CharacteristicExponents e =
        superluminal_exponents(classify_wave(c), SpectralParameter(lam));
    const double a = 1.0 - c * c;
    const double tol = 1e-10 * (1.0 + std::norm(lam));
    for (const cplx r : {e.r1, e.r2}) {
      const cplx residual = a * r * r - 2.0 * c * lam * r - (lam * lam + 1.0);
      CHECK(std::abs(residual) <= tol);
    }
    ++checked;
  }
}

TEST_CASE("exponent scan layout and degenerate flagging") {
  const std::vector<double> cs = {std::sqrt(2.0), 1.5};
  const std::vector<cplx> lams = {cplx(1.0, 0.0), cplx(1.0, 1.0)};
  const ExponentSignScan scan = exponent_sign_scan(cs, lams);
  REQUIRE(scan.points.size() == 4);
  // Speed-major ordering.
  CHECK(scan.points[0].c == cs[0]);
  CHECK(scan.points[1].c == cs[0]);
  CHECK(scan.points[2].c == cs[1]);
  CHECK(scan.points[0].lambda == lams[0]);
  CHECK(scan.points[1].lambda == lams[1]);
  // (sqrt(2), 1) is the double root; nothing else in this grid is.
  CHECK(scan.points[0].degenerate);
  CHECK_FALSE(scan.points[1].degenerate);
  CHECK_FALSE(scan.points[2].degenerate);
  CHECK_FALSE(scan.points[3].degenerate);
  CHECK(scan.degenerate_count == 1);
  CHECK(scan.all_signs_agree);  // degenerate point is excluded
}

TEST_CASE("exponent real parts share a sign in the open right half plane") {
  const std::vector<double> cs = {1.5, 2.0};
  const std::vector<cplx> lams = {cplx(0.5, 0.5), cplx(1.0, 1.0), cplx(2.0, 0.3),
                                  cplx(0.1, 2.0)};
  const ExponentSignScan scan = exponent_sign_scan(cs, lams);
  CHECK(scan.all_signs_agree);
  for (const ExponentScanPoint& pt : scan.points) {
    CHECK(pt.sign_re_r1 == -1);
    CHECK(pt.sign_re_r2 == -1);
  }
}

TEST_CASE("speed derivative of an exponent can oppose the real part of lambda") {
  // Near-sonic counterexample: at c = 1.1, lambda = 1 both real parts are
  // negative (signs agree) yet d Re r2 / dc is negative while Re lambda > 0,
  // so the derivative diagnostic fails. This pins the behavior so any later
  // "fix" that silently flips the diagnostic shows up.
  const ExponentSignScan scan = exponent_sign_scan({1.1}, {cplx(1.0, 0.0)});
  REQUIRE(scan.points.size() == 1);
  const ExponentScanPoint& pt = scan.points[0];
  CHECK_FALSE(pt.degenerate);
  CHECK(pt.signs_agree);
  CHECK(pt.d_re_r2_dc < -0.05);
  CHECK_FALSE(pt.derivative_matches);
  CHECK(scan.all_signs_agree);
  CHECK_FALSE(scan.all_derivatives_match);
}

TEST_CASE("finite-difference derivatives obey the trace identity") {
  // Re(r1 + r2) = 2 c Re(lambda) / (1 - c^2), so the summed c-derivative is
  // 2 Re(lambda (1 + c^2)) / (1 - c^2)^2. Independent check on the stencil.
  const double c = 1.5;
  const cplx lam(0.7, 0.4);
  const ExponentSignScan scan = exponent_sign_scan({c}, {lam});
  REQUIRE(scan.points.size() == 1);
  const double expected = 2.0 * lam.real() * (1.0 + c * c) /
                          ((1.0 - c * c) * (1.0 - c * c));
  CHECK(scan.points[0].d_re_r1_dc + scan.points[0].d_re_r2_dc ==
        doctest::Approx(expected).epsilon(1e-6));
}
