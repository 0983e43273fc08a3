#pragma once

#include <stdexcept>

namespace sgkink {

// Base type for every domain failure raised by this library. Callers that
// want to distinguish "the computation told us no" from programming errors
// catch this; preconditions violated by the caller throw std::invalid_argument.
// kind() names the concrete failure for diagnostics and exit messages.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual const char* kind() const { return "Error"; }
};

// |c - 1| is below the degeneracy threshold: the wave equation loses its
// second-order character and no kink profile exists.
struct DegenerateSpeed : Error {
  using Error::Error;
  const char* kind() const override { return "DegenerateSpeed"; }
};

// A profile-local quantity (e.g. the orbit tangent slope) is requested at a
// point where its defining expression underflows.
struct DegenerateProfilePoint : Error {
  using Error::Error;
  const char* kind() const override { return "DegenerateProfilePoint"; }
};

// The asymptotic system's two characteristic roots coincide to within
// tolerance, so there is no well-separated stable/unstable splitting.
struct DegenerateSplitting : Error {
  using Error::Error;
  const char* kind() const override { return "DegenerateSplitting"; }
};

// The spectral parameter sits on a symmetry axis (Re or Im zero) where the
// requested sign obstruction is identically zero.
struct DegenerateLambda : Error {
  using Error::Error;
  const char* kind() const override { return "DegenerateLambda"; }
};

// The adaptive integrator could not meet its tolerance contract: step size
// underflow, step budget exhausted, or a non-finite state.
struct IntegratorFailure : Error {
  using Error::Error;
  const char* kind() const override { return "IntegratorFailure"; }
};

// A detected conjugate-line crossing has |crossing form| below the
// regularity floor away from the profile's asymptotic tail, so its sign
// contribution is not trustworthy.
struct IrregularCrossing : Error {
  using Error::Error;
  const char* kind() const override { return "IrregularCrossing"; }
};

// The Riccati witness bounced between coordinate charts more times than the
// configured budget allows.
struct ChartThrash : Error {
  using Error::Error;
  const char* kind() const override { return "ChartThrash"; }
};

}  // namespace sgkink
