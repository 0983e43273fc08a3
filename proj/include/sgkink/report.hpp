#pragma once

// Whole-speed stability analysis. For a subluminal speed the report runs
// the real-axis crossing sweep plus the complex-quadrant Riccati witnesses;
// for a superluminal speed it runs the characteristic-exponent sign scan.
// Every sub-computation failure is embedded in the report and demotes the
// verdict to Inconclusive: an error never silently passes as stability.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sgkink/asymptotics.hpp"
#include "sgkink/maslov.hpp"
#include "sgkink/riccati.hpp"
#include "sgkink/wave.hpp"

namespace sgkink {

struct AnalysisConfig {
  double lambda_max = 10.0;    // real-axis sweep over [-lambda_max, lambda_max]
  int lambda_steps = 101;
  double complex_re_max = 3.0; // witness lattice over (0, re_max] x (0, im_max]
  double complex_im_max = 3.0;
  int complex_steps = 10;      // lattice points per side
  double epsilon = 1e-3;       // compactified-window offset
  double tol = 1e-10;          // integrator tolerance
  int jobs = 1;

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

// key = value lines, '#' comments; unknown keys are errors.
AnalysisConfig parse_config(const std::string& text);
AnalysisConfig load_config(const std::string& path);

enum class Verdict { SpectrallyStable, EigenvalueCandidateFound, Inconclusive };

std::string verdict_name(Verdict v);

struct RealAxisCell {
  double lambda = 0.0;
  int count = 0;
  int index = 0;
  int endpoint_crossings = 0;
  std::vector<CrossingEvent> crossings;
  std::string error;  // empty when the cell evaluated cleanly
};

struct ComplexCell {
  std::complex<double> lambda;
  int eta_sign = 0;
  int zeta_sign = 0;
  double min_im_eta = 0.0;
  double max_im_zeta = 0.0;
  int chart_switches = 0;
  std::string witness_verdict;  // "no_eigenvalue" or "eigenvalue_candidate"
  std::string error;
};

struct StabilityReport {
  double c = 0.0;
  Regime regime = Regime::Subluminal;
  AnalysisConfig config;

  std::vector<RealAxisCell> real_axis;      // subluminal only
  int real_eigenvalue_count = 0;            // endpoint crossing-count difference
  bool grid_jump = false;
  std::vector<ComplexCell> complex_plane;   // subluminal only
  std::optional<ExponentSignScan> exponents;  // superluminal only

  std::vector<std::string> candidates;
  std::vector<std::string> errors;
  std::vector<std::string> caveats;
  Verdict verdict = Verdict::Inconclusive;
};

// Runs the full analysis at speed c. Throws DegenerateSpeed for |c-1| at or
// under threshold (there is nothing to analyze); all other domain errors
// are captured per grid cell.
StabilityReport analyze(double c, const AnalysisConfig& config = {});

// Deterministic JSON rendering: equal reports give byte-identical strings
// (no timestamps, no locale, no pointer values).
std::string report_to_json(const StabilityReport& report);

}  // namespace sgkink
