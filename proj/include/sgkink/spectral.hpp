#pragma once

// Spectral parameter wrapper. The eigenvalue problem is posed for a complex
// parameter lambda; most formulas want its Cartesian and polar pieces at
// once, so this caches p = Re, q = Im, r = |lambda|, theta = arg.

#include <complex>

namespace sgkink {

struct SpectralParameter {
  std::complex<double> value{0.0, 0.0};
  double p = 0.0;      // real part
  double q = 0.0;      // imaginary part
  double r = 0.0;      // modulus
  double theta = 0.0;  // principal argument

  SpectralParameter() = default;

  explicit SpectralParameter(std::complex<double> v)
      : value(v), p(v.real()), q(v.imag()), r(std::abs(v)), theta(std::arg(v)) {}

  SpectralParameter(double re, double im) : SpectralParameter(std::complex<double>(re, im)) {}

  bool real() const { return q == 0.0; }
};

}  // namespace sgkink
