#include "sgkink/wave.hpp"

#include <cmath>
#include <string>

namespace sgkink {

WaveParameters classify_wave(double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw std::invalid_argument("wave speed must be finite and non-negative, got " +
                                std::to_string(c));
  }
  if (std::abs(c - 1.0) <= kSpeedDegeneracyThreshold) {
    throw DegenerateSpeed("wave speed c = " + std::to_string(c) +
                          " is within 1e-6 of the light speed c = 1");
  }
  WaveParameters p;
  p.c = c;
  p.regime = c < 1.0 ? Regime::Subluminal : Regime::Superluminal;
  p.mu = std::abs(1.0 - c * c);
  p.k = 1.0 / std::sqrt(p.mu);
  return p;
}

}  // namespace sgkink
