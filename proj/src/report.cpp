#include "sgkink/report.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "sgkink/format.hpp"
#include "sgkink/parallel.hpp"
#include "sgkink/version.hpp"

namespace sgkink {

void AnalysisConfig::validate() const {
  const auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) fail("lambda_max must be positive");
  if (lambda_steps < 2) fail("lambda_steps must be at least 2");
  if (!(complex_re_max > 0.0) || !std::isfinite(complex_re_max)) {
    fail("complex_re_max must be positive");
  }
  if (!(complex_im_max > 0.0) || !std::isfinite(complex_im_max)) {
    fail("complex_im_max must be positive");
  }
  if (complex_steps < 2) fail("complex_steps must be at least 2");
  if (!(epsilon > 0.0) || !(epsilon <= 0.5)) fail("epsilon must lie in (0, 0.5]");
  if (!(tol > 0.0)) fail("tol must be positive");
  if (jobs < 1) fail("jobs must be at least 1");
}

AnalysisConfig parse_config(const std::string& text) {
  AnalysisConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    const auto as_double = [&] {
      std::size_t used = 0;
      const double v = std::stod(value, &used);
      if (used != value.size()) {
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": malformed number '" + value + "'");
      }
      return v;
    };
    const auto as_int = [&] {
      std::size_t used = 0;
      const int v = std::stoi(value, &used);
      if (used != value.size()) {
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": malformed integer '" + value + "'");
      }
      return v;
    };
    if (key == "lambda_max") {
      config.lambda_max = as_double();
    } else if (key == "lambda_steps") {
      config.lambda_steps = as_int();
    } else if (key == "complex_re_max") {
      config.complex_re_max = as_double();
    } else if (key == "complex_im_max") {
      config.complex_im_max = as_double();
    } else if (key == "complex_steps") {
      config.complex_steps = as_int();
    } else if (key == "epsilon") {
      config.epsilon = as_double();
    } else if (key == "tol") {
      config.tol = as_double();
    } else if (key == "jobs") {
      config.jobs = as_int();
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SpectrallyStable:
      return "SpectrallyStable";
    case Verdict::EigenvalueCandidateFound:
      return "EigenvalueCandidateFound";
    default:
      return "Inconclusive";
  }
}

namespace {

std::string regime_name(Regime r) {
  return r == Regime::Subluminal ? "subluminal" : "superluminal";
}

void analyze_subluminal(const WaveParameters& params, const AnalysisConfig& config,
                        StabilityReport& report) {
  const KinkProfile profile(params);
  IntegrationControls ic;
  ic.epsilon = config.epsilon;
  ic.abs_tol = config.tol;
  const CrossingControls cc;
  RiccatiControls rc;
  rc.epsilon = config.epsilon;
  rc.abs_tol = config.tol;

  // Real axis: crossing counts over the symmetric λ window.
  const std::size_t n_real = static_cast<std::size_t>(config.lambda_steps);
  report.real_axis.resize(n_real);
  parallel_for(n_real, config.jobs, [&](std::size_t i) {
    RealAxisCell& cell = report.real_axis[i];
    cell.lambda = -config.lambda_max +
                  2.0 * config.lambda_max * static_cast<double>(i) /
                      static_cast<double>(n_real - 1);
    try {
      const MaslovResult r = maslov_index(profile, cell.lambda, ic, cc);
      cell.count = r.count;
      cell.index = r.index;
      cell.endpoint_crossings = r.endpoint_crossings;
      cell.crossings = r.crossings;
    } catch (const Error& e) {
      cell.error = e.what();
    }
  });
  for (const RealAxisCell& cell : report.real_axis) {
    if (!cell.error.empty()) {
      report.errors.push_back("real axis lambda = " + format_double(cell.lambda) + ": " +
                              cell.error);
      continue;
    }
    if (cell.count > 0) {
      report.candidates.push_back("real eigenvalue candidate: " + std::to_string(cell.count) +
                                  " crossing(s) at lambda = " + format_double(cell.lambda));
    }
  }
  if (report.real_axis.front().error.empty() && report.real_axis.back().error.empty()) {
    report.real_eigenvalue_count =
        std::abs(report.real_axis.back().count - report.real_axis.front().count);
    // Unresolved approach of a crossing to the window ends shows up as an
    // endpoint event at the extreme grid values; treat it as a candidate.
    for (const RealAxisCell* cell : {&report.real_axis.front(), &report.real_axis.back()}) {
      if (cell->endpoint_crossings > 0) {
        report.candidates.push_back(
            "endpoint crossing at the real-axis window edge lambda = " +
            format_double(cell->lambda));
      }
    }
  }
  for (std::size_t i = 0; i + 1 < report.real_axis.size(); ++i) {
    if (report.real_axis[i].error.empty() && report.real_axis[i + 1].error.empty() &&
        std::abs(report.real_axis[i + 1].count - report.real_axis[i].count) >= 2) {
      report.grid_jump = true;
    }
  }

  // Complex quadrant: Riccati witnesses on the open lattice (0, max]^2.
  const std::size_t side = static_cast<std::size_t>(config.complex_steps);
  report.complex_plane.resize(side * side);
  parallel_for(side * side, config.jobs, [&](std::size_t idx) {
    ComplexCell& cell = report.complex_plane[idx];
    const std::size_t i = idx / side;
    const std::size_t j = idx % side;
    const double re =
        config.complex_re_max * static_cast<double>(i + 1) / static_cast<double>(side);
    const double im =
        config.complex_im_max * static_cast<double>(j + 1) / static_cast<double>(side);
    cell.lambda = {re, im};
    try {
      const SpectralParameter sp(cell.lambda);
      const ObstructionSigns signs = real_axis_obstruction(params, sp);
      cell.eta_sign = signs.eta_sign;
      cell.zeta_sign = signs.zeta_sign;
      const WitnessReport w = heteroclinic_witness(profile, sp, rc);
      cell.min_im_eta = w.min_im_eta;
      cell.max_im_zeta = w.max_im_zeta;
      cell.chart_switches = w.chart_switches;
      cell.witness_verdict =
          w.verdict == WitnessVerdict::NoEigenvalue ? "no_eigenvalue" : "eigenvalue_candidate";
    } catch (const Error& e) {
      cell.error = e.what();
    }
  });
  for (const ComplexCell& cell : report.complex_plane) {
    if (!cell.error.empty()) {
      report.errors.push_back("witness at lambda = " + format_complex(cell.lambda) + ": " +
                              cell.error);
    } else if (cell.witness_verdict != "no_eigenvalue") {
      report.candidates.push_back("complex eigenvalue candidate near lambda = " +
                                  format_complex(cell.lambda));
    }
  }

  report.caveats.push_back(
      "lambda = 0 is the translation symmetry; its curve meets the stable direction only in "
      "the endpoint limit and is reported as no crossing");
}

void analyze_superluminal(const WaveParameters& params, const AnalysisConfig& config,
                          StabilityReport& report) {
  std::vector<std::complex<double>> lattice;
  const int side = config.complex_steps;
  lattice.reserve(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
  for (int i = 1; i <= side; ++i) {
    for (int j = 1; j <= side; ++j) {
      lattice.emplace_back(config.complex_re_max * i / side, config.complex_im_max * j / side);
    }
  }
  report.exponents = exponent_sign_scan({params.c}, lattice);
  const ExponentSignScan& scan = *report.exponents;
  for (const ExponentScanPoint& pt : scan.points) {
    if (!pt.degenerate && !pt.signs_agree) {
      report.candidates.push_back("exponent sign disagreement at lambda = " +
                                  format_complex(pt.lambda));
    }
  }
  report.caveats.push_back(
      "finite-difference derivative signs are recorded as diagnostics; the verdict rests on "
      "exponent sign agreement");
}

}  // namespace

StabilityReport analyze(double c, const AnalysisConfig& config) {
  config.validate();
  const WaveParameters params = classify_wave(c);

  StabilityReport report;
  report.c = c;
  report.regime = params.regime;
  report.config = config;

  if (params.subluminal()) {
    analyze_subluminal(params, config, report);
  } else {
    analyze_superluminal(params, config, report);
  }

  report.caveats.push_back(
      "point spectrum on the imaginary axis is outside the certified region; no conclusion is "
      "drawn there");
  report.caveats.push_back(
      "grid verdicts are numerical evidence over the sampled parameters, not proof");

  if (!report.errors.empty()) {
    report.verdict = Verdict::Inconclusive;
  } else if (!report.candidates.empty()) {
    report.verdict = Verdict::EigenvalueCandidateFound;
  } else {
    report.verdict = Verdict::SpectrallyStable;
  }
  return report;
}

std::string report_to_json(const StabilityReport& report) {
  using json = nlohmann::ordered_json;
  json root;
  root["tool"] = kToolName;
  root["version"] = kVersion;
  root["c"] = report.c;
  root["regime"] = regime_name(report.regime);
  root["verdict"] = verdict_name(report.verdict);

  json config;
  config["lambda_max"] = report.config.lambda_max;
  config["lambda_steps"] = report.config.lambda_steps;
  config["complex_re_max"] = report.config.complex_re_max;
  config["complex_im_max"] = report.config.complex_im_max;
  config["complex_steps"] = report.config.complex_steps;
  config["epsilon"] = report.config.epsilon;
  config["tol"] = report.config.tol;
  config["jobs"] = report.config.jobs;
  root["config"] = config;

  json tolerances;
  tolerances["speed_degeneracy"] = kSpeedDegeneracyThreshold;
  tolerances["crossing_regularity"] = CrossingControls{}.gamma_regularity;
  tolerances["crossing_noise_floor"] = CrossingControls{}.noise_floor;
  tolerances["crossing_guard_band"] = CrossingControls{}.guard_band;
  tolerances["crossing_bisect"] = CrossingControls{}.bisect_tol;
  tolerances["hemisphere"] = RiccatiControls{}.hemisphere_tol;
  root["tolerances"] = tolerances;

  root["caveats"] = report.caveats;
  root["candidates"] = report.candidates;
  root["errors"] = report.errors;

  if (report.regime == Regime::Subluminal) {
    json real_axis;
    real_axis["lambda_min"] = -report.config.lambda_max;
    real_axis["lambda_max"] = report.config.lambda_max;
    real_axis["eigenvalue_count"] = report.real_eigenvalue_count;
    real_axis["grid_jump"] = report.grid_jump;
    json points = json::array();
    for (const RealAxisCell& cell : report.real_axis) {
      json p;
      p["lambda"] = cell.lambda;
      if (!cell.error.empty()) {
        p["error"] = cell.error;
      } else {
        p["count"] = cell.count;
        p["index"] = cell.index;
        p["endpoint_crossings"] = cell.endpoint_crossings;
        json crossings = json::array();
        for (const CrossingEvent& e : cell.crossings) {
          crossings.push_back({{"z", e.z}, {"gamma", e.gamma}});
        }
        p["crossings"] = crossings;
      }
      points.push_back(p);
    }
    real_axis["points"] = points;
    root["real_axis"] = real_axis;

    json complex_plane;
    complex_plane["re_max"] = report.config.complex_re_max;
    complex_plane["im_max"] = report.config.complex_im_max;
    json cells = json::array();
    for (const ComplexCell& cell : report.complex_plane) {
      json p;
      p["lambda"] = {{"re", cell.lambda.real()}, {"im", cell.lambda.imag()}};
      if (!cell.error.empty()) {
        p["error"] = cell.error;
      } else {
        p["eta_sign"] = cell.eta_sign;
        p["zeta_sign"] = cell.zeta_sign;
        p["min_im_eta"] = cell.min_im_eta;
        p["max_im_zeta"] = cell.max_im_zeta;
        p["chart_switches"] = cell.chart_switches;
        p["witness_verdict"] = cell.witness_verdict;
      }
      cells.push_back(p);
    }
    complex_plane["points"] = cells;
    root["complex_plane"] = complex_plane;
  }

  if (report.exponents) {
    json scan;
    scan["degenerate_count"] = report.exponents->degenerate_count;
    scan["all_signs_agree"] = report.exponents->all_signs_agree;
    scan["all_derivatives_match"] = report.exponents->all_derivatives_match;
    json points = json::array();
    for (const ExponentScanPoint& pt : report.exponents->points) {
      json p;
      p["c"] = pt.c;
      p["lambda"] = {{"re", pt.lambda.real()}, {"im", pt.lambda.imag()}};
      p["degenerate"] = pt.degenerate;
      if (!pt.degenerate) {
        p["sign_re_r1"] = pt.sign_re_r1;
        p["sign_re_r2"] = pt.sign_re_r2;
        p["signs_agree"] = pt.signs_agree;
        p["d_re_r1_dc"] = pt.d_re_r1_dc;
        p["d_re_r2_dc"] = pt.d_re_r2_dc;
        p["derivative_matches"] = pt.derivative_matches;
      }
      points.push_back(p);
    }
    scan["points"] = points;
    root["exponents"] = scan;
  }

  return root.dump(2) + "\n";
}

}  // namespace sgkink
