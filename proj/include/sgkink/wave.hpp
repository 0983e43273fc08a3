#pragma once

// Travelling-wave speed classification for the sine-Gordon equation
//   u_tt - u_xx + sin u = 0
// in the co-moving coordinate z = x + c t. Speeds below light speed
// (c^2 < 1) admit heteroclinic kink profiles; speeds above it admit
// periodic waves whose spectral analysis runs through characteristic
// exponents instead. c = 1 itself is degenerate: the profile equation
// loses its second-order term.

#include "sgkink/errors.hpp"

namespace sgkink {

enum class Regime { Subluminal, Superluminal };

// A speed only counts as non-degenerate when |c - 1| exceeds this.
inline constexpr double kSpeedDegeneracyThreshold = 1e-6;

// Wave speed bundled with the derived scale constants used everywhere else:
// mu = |1 - c^2| and the spatial rate k = 1/sqrt(mu) of the kink.
struct WaveParameters {
  double c = 0.0;
  Regime regime = Regime::Subluminal;
  double mu = 1.0;
  double k = 1.0;

  bool subluminal() const { return regime == Regime::Subluminal; }
};

// Classifies a speed c >= 0. Throws DegenerateSpeed when |c - 1| is at or
// below the threshold and std::invalid_argument for negative or non-finite c.
WaveParameters classify_wave(double c);

}  // namespace sgkink
