#pragma once

// Adaptive embedded Runge-Kutta integration (Dormand-Prince 5(4)) for the
// small dense systems used by the line flow and the Riccati flow. The
// callers need three hooks the usual library steppers do not expose
// together: a per-step admissibility guard (reject steps that rotate the
// tracked object too far, whatever the error estimate says), an observer
// that can stop the run mid-interval (coordinate chart switching), and a
// deterministic, restartable state (bisection refinement re-integrates
// short spans repeatedly). Hence this ~150-line stepper.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "sgkink/errors.hpp"

namespace sgkink::ode {

struct Options {
  double abs_tol = 1e-10;       // absolute local error tolerance per step
  double rel_tol = 0.0;         // optional relative contribution
  double max_step = 1e-2;       // upper bound on |h|
  double initial_step = 0.0;    // 0 = choose automatically
  std::size_t max_steps = 2'000'000;  // accepted + rejected attempts
};

struct Stats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double max_error_estimate = 0.0;  // largest accepted per-step error estimate
};

enum class StepDirective { Continue, Stop };

namespace detail {

// Dormand-Prince 5(4) tableau. The fifth-order weights are the last stage
// row (FSAL property is not exploited; these flows are cheap).
inline constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
inline constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
inline constexpr double kB5[7] = {35.0 / 384,      0.0,        500.0 / 1113, 125.0 / 192,
                                  -2187.0 / 6784, 11.0 / 84,  0.0};
inline constexpr double kB4[7] = {5179.0 / 57600,    0.0,          7571.0 / 16695, 393.0 / 640,
                                  -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

}  // namespace detail

// Integrates y' = f(t, y) from t0 to t1 (either direction). After every
// accepted step calls observe(t, y); a Stop directive ends the run early
// (state and time stay at the accepted point). guard(y_old, y_new) may veto
// a step that passed error control; vetoed steps are retried at half size.
// Throws IntegratorFailure on step underflow, non-finite states that do not
// resolve under refinement, or budget exhaustion. Returns stepping stats;
// callers that need the final time track it in the observer.
template <std::size_t N, class RHS, class Observer, class Guard>
Stats integrate(RHS&& f, std::array<double, N>& y, double t0, double t1, const Options& opt,
                Observer&& observe, Guard&& guard) {
  Stats stats;
  if (t1 == t0) return stats;
  const double dir = t1 > t0 ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  double t = t0;
  // Start at the span itself when it is already below max_step: refinement
  // re-integrates spans of every size, and a fixed fraction of a tiny span
  // would collide with the underflow guard.
  double h = opt.initial_step > 0.0 ? opt.initial_step : span;
  h = std::min(h, opt.max_step);

  std::array<std::array<double, N>, 7> k;
  std::array<double, N> y_stage, y5, y4;

  for (std::size_t attempts = 0;; ++attempts) {
    if (attempts > opt.max_steps) {
      throw IntegratorFailure("step budget exhausted before reaching the end of the interval");
    }
    const double remaining = std::abs(t1 - t);
    if (remaining <= 1e-14 * std::max(1.0, std::abs(t1))) break;
    double h_try = std::min(h, remaining);
    if (h_try < 1e-15 * std::max(1.0, std::abs(t))) {
      throw IntegratorFailure("step size underflow at t = " + std::to_string(t));
    }
    const double hs = dir * h_try;

    f(t, y, k[0]);
    for (int stage = 1; stage < 7; ++stage) {
      for (std::size_t i = 0; i < N; ++i) {
        double acc = 0.0;
        for (int j = 0; j < stage; ++j) acc += detail::kA[stage][j] * k[j][i];
        y_stage[i] = y[i] + hs * acc;
      }
      f(t + detail::kC[stage] * hs, y_stage, k[stage]);
    }
    double err = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < N; ++i) {
      double acc5 = 0.0, acc4 = 0.0;
      for (int j = 0; j < 7; ++j) {
        acc5 += detail::kB5[j] * k[j][i];
        acc4 += detail::kB4[j] * k[j][i];
      }
      y5[i] = y[i] + hs * acc5;
      y4[i] = y[i] + hs * acc4;
      if (!std::isfinite(y5[i])) finite = false;
      const double scale =
          opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(y5[i] - y4[i]) / scale);
    }

    if (!finite || err > 1.0) {
      ++stats.rejected;
      const double shrink = finite ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.2;
      h = h_try * shrink;
      continue;
    }
    if (!guard(y, y5)) {
      ++stats.rejected;
      h = 0.5 * h_try;
      continue;
    }

    t += hs;
    y = y5;
    ++stats.accepted;
    stats.max_error_estimate = std::max(stats.max_error_estimate, err * opt.abs_tol);
    const double grow = err > 0.0 ? std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2))) : 5.0;
    h = std::min(opt.max_step, h_try * grow);
    if (observe(t, y) == StepDirective::Stop) break;
  }
  return stats;
}

template <std::size_t N, class RHS, class Observer>
Stats integrate(RHS&& f, std::array<double, N>& y, double t0, double t1, const Options& opt,
                Observer&& observe) {
  return integrate<N>(std::forward<RHS>(f), y, t0, t1, opt, std::forward<Observer>(observe),
                      [](const std::array<double, N>&, const std::array<double, N>&) {
                        return true;
                      });
}

}  // namespace sgkink::ode
