// Command-line front end: certifies spectral stability of sine-Gordon
// travelling kinks. Subcommands expose each analysis stage (profile,
// exponents, flow, maslov, riccati) plus the full report. Exit codes:
// 0 success, 1 computation or I/O failure, 2 usage errors.

#include <complex>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgkink/format.hpp"
#include "sgkink/lagrangian_flow.hpp"
#include "sgkink/maslov.hpp"
#include "sgkink/profile.hpp"
#include "sgkink/report.hpp"
#include "sgkink/riccati.hpp"
#include "sgkink/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sgkink;

struct GlobalOptions {
  int jobs = 1;
  unsigned long long seed = 42;
  bool quiet = false;
};

void emit(const std::string& content, const std::string& out_path, const GlobalOptions& global) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  atomic_write(out_path, content);
  if (!global.quiet) std::cerr << "wrote " << out_path << "\n";
}

json complex_json(std::complex<double> v) { return {{"re", v.real()}, {"im", v.imag()}}; }

// ---------------------------------------------------------------- profile

struct ProfileArgs {
  double c = 0.0;
  double z_min = -15.0;
  double z_max = 15.0;
  int samples = 601;
  std::string format = "csv";
  std::string out;
};

int run_profile(const ProfileArgs& args, const GlobalOptions& global) {
  if (args.samples < 2) {
    std::cerr << "error: --samples must be at least 2\n";
    return 2;
  }
  if (!(args.z_min < args.z_max)) {
    std::cerr << "error: --z-min must be below --z-max\n";
    return 2;
  }
  const KinkProfile profile(classify_wave(args.c));
  std::ostringstream out;
  json root;
  if (args.format == "json") {
    root["c"] = args.c;
    root["samples"] = json::array();
  } else {
    out << "z,v,v_z\n";
  }
  for (int i = 0; i < args.samples; ++i) {
    const double z =
        args.z_min + (args.z_max - args.z_min) * static_cast<double>(i) / (args.samples - 1);
    const double v = kink_value(profile, z);
    const double vz = kink_slope(profile, z);
    if (args.format == "json") {
      root["samples"].push_back({{"z", z}, {"v", v}, {"v_z", vz}});
    } else {
      out << format_double(z) << ',' << format_double(v) << ',' << format_double(vz) << '\n';
    }
  }
  emit(args.format == "json" ? root.dump(2) + "\n" : out.str(), args.out, global);
  return 0;
}

// -------------------------------------------------------------- exponents

struct ExponentsArgs {
  double c = 0.0;
  std::string lambda;
  double re_max = 3.0;
  double im_max = 3.0;
  int steps = 10;
  int random = 0;
  bool lattice = false;
  std::string format = "json";
  std::string out;
};

json exponent_point_json(const ExponentScanPoint& pt) {
  json p;
  p["c"] = pt.c;
  p["lambda"] = complex_json(pt.lambda);
  p["degenerate"] = pt.degenerate;
  if (!pt.degenerate) {
    p["sign_re_r1"] = pt.sign_re_r1;
    p["sign_re_r2"] = pt.sign_re_r2;
    p["signs_agree"] = pt.signs_agree;
    p["d_re_r1_dc"] = pt.d_re_r1_dc;
    p["d_re_r2_dc"] = pt.d_re_r2_dc;
    p["derivative_matches"] = pt.derivative_matches;
  }
  return p;
}

int run_exponents(const ExponentsArgs& args, const GlobalOptions& global) {
  const WaveParameters params = classify_wave(args.c);
  if (!args.lambda.empty()) {
    std::complex<double> lambda;
    try {
      lambda = parse_complex(args.lambda);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: --lambda: " << e.what() << "\n";
      return 2;
    }
    const CharacteristicExponents exps =
        superluminal_exponents(params, SpectralParameter(lambda));
    json root;
    root["c"] = args.c;
    root["lambda"] = complex_json(lambda);
    root["r1"] = complex_json(exps.r1);
    root["r2"] = complex_json(exps.r2);
    emit(root.dump(2) + "\n", args.out, global);
    return 0;
  }

  std::vector<std::complex<double>> lattice;
  if (args.random > 0) {
    std::mt19937_64 rng(global.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    lattice.reserve(static_cast<std::size_t>(args.random));
    for (int i = 0; i < args.random; ++i) {
      const double re = args.re_max * (1.0 - unit(rng));
      const double im = args.im_max * (1.0 - unit(rng));
      lattice.emplace_back(re, im);
    }
  } else {
    if (args.steps < 2) {
      std::cerr << "error: --steps must be at least 2\n";
      return 2;
    }
    for (int i = 1; i <= args.steps; ++i) {
      for (int j = 1; j <= args.steps; ++j) {
        lattice.emplace_back(args.re_max * i / args.steps, args.im_max * j / args.steps);
      }
    }
  }
  const ExponentSignScan scan = exponent_sign_scan({args.c}, lattice);
  if (args.format == "csv") {
    std::ostringstream out;
    out << "c,lambda_re,lambda_im,degenerate,sign_re_r1,sign_re_r2,signs_agree,"
           "d_re_r1_dc,d_re_r2_dc,derivative_matches\n";
    for (const ExponentScanPoint& pt : scan.points) {
      out << format_double(pt.c) << ',' << format_double(pt.lambda.real()) << ','
          << format_double(pt.lambda.imag()) << ',' << (pt.degenerate ? 1 : 0) << ','
          << pt.sign_re_r1 << ',' << pt.sign_re_r2 << ',' << (pt.signs_agree ? 1 : 0) << ','
          << format_double(pt.d_re_r1_dc) << ',' << format_double(pt.d_re_r2_dc) << ','
          << (pt.derivative_matches ? 1 : 0) << '\n';
    }
    emit(out.str(), args.out, global);
  } else {
    json root;
    root["c"] = args.c;
    root["degenerate_count"] = scan.degenerate_count;
    root["all_signs_agree"] = scan.all_signs_agree;
    root["all_derivatives_match"] = scan.all_derivatives_match;
    root["points"] = json::array();
    for (const ExponentScanPoint& pt : scan.points) root["points"].push_back(exponent_point_json(pt));
    emit(root.dump(2) + "\n", args.out, global);
  }
  return 0;
}

// ------------------------------------------------------------------- flow

struct FlowArgs {
  double c = 0.0;
  double lambda = 0.0;
  double epsilon = 1e-3;
  double tol = 1e-10;
  std::string out;
};

int run_flow(const FlowArgs& args, const GlobalOptions& global) {
  const KinkProfile profile(classify_wave(args.c));
  IntegrationControls controls;
  controls.epsilon = args.epsilon;
  controls.abs_tol = args.tol;
  const TrajectoryRecord record = unstable_curve(profile, args.lambda, controls);
  std::ostringstream out;
  out << "tau,z,theta,w1,w2\n";
  for (std::size_t i = 0; i < record.tau.size(); ++i) {
    const double theta = record.theta[i];
    out << format_double(record.tau[i]) << ',' << format_double(tau_to_z(record.tau[i])) << ','
        << format_double(theta) << ',' << format_double(std::cos(theta)) << ','
        << format_double(std::sin(theta)) << '\n';
  }
  emit(out.str(), args.out, global);
  return 0;
}

// ----------------------------------------------------------------- maslov

struct MaslovArgs {
  double c = 0.0;
  double lambda_min = -10.0;
  double lambda_max = 10.0;
  int steps = 101;
  double epsilon = 1e-3;
  double tol = 1e-10;
  std::string format = "json";
  std::string out;
};

int run_maslov(const MaslovArgs& args, const GlobalOptions& global) {
  if (args.steps < 2) {
    std::cerr << "error: --steps must be at least 2\n";
    return 2;
  }
  const KinkProfile profile(classify_wave(args.c));
  IntegrationControls controls;
  controls.epsilon = args.epsilon;
  controls.abs_tol = args.tol;
  const SweepResult sweep = eigenvalue_count(profile, args.lambda_min, args.lambda_max,
                                             args.steps, controls, {}, global.jobs);
  if (args.format == "csv") {
    std::ostringstream out;
    out << "lambda,count,index,endpoint_crossings\n";
    for (const MaslovResult& r : sweep.sweep) {
      out << format_double(r.lambda) << ',' << r.count << ',' << r.index << ','
          << r.endpoint_crossings << '\n';
    }
    emit(out.str(), args.out, global);
  } else {
    json root;
    root["c"] = args.c;
    root["results"] = json::array();
    for (const MaslovResult& r : sweep.sweep) {
      json item;
      item["lambda"] = r.lambda;
      item["count"] = r.count;
      item["index"] = r.index;
      item["crossings"] = json::array();
      for (const CrossingEvent& e : r.crossings) {
        item["crossings"].push_back({{"z", e.z}, {"gamma", e.gamma}});
      }
      item["endpoint_crossings"] = r.endpoint_crossings;
      root["results"].push_back(item);
    }
    emit(root.dump(2) + "\n", args.out, global);
  }
  return 0;
}

// ---------------------------------------------------------------- riccati

struct RiccatiArgs {
  double c = 0.0;
  std::string lambda;
  double epsilon = 1e-3;
  double tol = 1e-10;
  std::string out;
};

int run_riccati(const RiccatiArgs& args, const GlobalOptions& global) {
  std::complex<double> lambda;
  try {
    lambda = parse_complex(args.lambda);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: --lambda: " << e.what() << "\n";
    return 2;
  }
  const WaveParameters params = classify_wave(args.c);
  const KinkProfile profile(params);
  const SpectralParameter sp(lambda);
  RiccatiControls controls;
  controls.epsilon = args.epsilon;
  controls.abs_tol = args.tol;

  const RiccatiFixedPoints fp = riccati_fixed_points(params, sp);
  const ObstructionSigns signs = real_axis_obstruction(params, sp);
  const WitnessReport witness = heteroclinic_witness(profile, sp, controls);

  json root;
  root["c"] = args.c;
  root["lambda"] = complex_json(lambda);
  root["eta_u"] = complex_json(fp.eta_u);
  root["eta_s"] = complex_json(fp.eta_s);
  root["eta_sign"] = signs.eta_sign;
  root["zeta_sign"] = signs.zeta_sign;
  json w;
  w["min_im_eta"] = witness.min_im_eta;
  w["max_im_zeta"] = witness.max_im_zeta;
  w["chart_switches"] = witness.chart_switches;
  w["verdict"] =
      witness.verdict == WitnessVerdict::NoEigenvalue ? "no_eigenvalue" : "eigenvalue_candidate";
  root["witness"] = w;
  emit(root.dump(2) + "\n", args.out, global);
  return 0;
}

// ----------------------------------------------------------------- report

struct ReportArgs {
  double c = 0.0;
  std::string config_path;
  std::string out;
};

int run_report(const ReportArgs& args, const GlobalOptions& global) {
  AnalysisConfig config;
  if (!args.config_path.empty()) config = load_config(args.config_path);
  config.jobs = global.jobs;
  const StabilityReport report = analyze(args.c, config);
  emit(report_to_json(report), args.out, global);
  if (!global.quiet && !args.out.empty()) {
    std::cerr << "verdict: " << verdict_name(report.verdict) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral stability certification for sine-Gordon travelling kink waves"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--jobs", global.jobs, "worker threads for grid sweeps")
      ->capture_default_str();
  app.add_option("--seed", global.seed, "seed for randomized scans")->capture_default_str();
  app.add_flag("--quiet", global.quiet, "suppress progress notes on stderr");

  ProfileArgs profile_args;
  CLI::App* profile_cmd = app.add_subcommand("profile", "tabulate the kink profile");
  profile_cmd->add_option("--c", profile_args.c, "wave speed")->required();
  profile_cmd->add_option("--z-min", profile_args.z_min, "left end of the window")
      ->capture_default_str();
  profile_cmd->add_option("--z-max", profile_args.z_max, "right end of the window")
      ->capture_default_str();
  profile_cmd->add_option("--samples", profile_args.samples, "sample count")
      ->capture_default_str();
  profile_cmd->add_option("--format", profile_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  profile_cmd->add_option("--out", profile_args.out, "output path (default stdout)");

  ExponentsArgs exponents_args;
  CLI::App* exponents_cmd =
      app.add_subcommand("exponents", "superluminal characteristic exponents");
  exponents_cmd->add_option("--c", exponents_args.c, "wave speed (> 1)")->required();
  exponents_cmd->add_option("--lambda", exponents_args.lambda,
                            "single spectral parameter, e.g. 1.5+0.5i");
  exponents_cmd->add_option("--re-max", exponents_args.re_max, "lattice Re bound")
      ->capture_default_str();
  exponents_cmd->add_option("--im-max", exponents_args.im_max, "lattice Im bound")
      ->capture_default_str();
  exponents_cmd->add_option("--steps", exponents_args.steps, "lattice points per side")
      ->capture_default_str();
  exponents_cmd->add_option("--random", exponents_args.random,
                            "sample this many random λ instead of the lattice");
  exponents_cmd->add_option("--format", exponents_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  exponents_cmd->add_option("--out", exponents_args.out, "output path (default stdout)");

  FlowArgs flow_args;
  CLI::App* flow_cmd = app.add_subcommand("flow", "projectivized flow trajectory (CSV)");
  flow_cmd->add_option("--c", flow_args.c, "wave speed (< 1)")->required();
  flow_cmd->add_option("--lambda", flow_args.lambda, "real spectral parameter")->required();
  flow_cmd->add_option("--epsilon", flow_args.epsilon, "compactified window offset")
      ->capture_default_str();
  flow_cmd->add_option("--tol", flow_args.tol, "integrator tolerance")->capture_default_str();
  flow_cmd->add_option("--out", flow_args.out, "output path (default stdout)");

  MaslovArgs maslov_args;
  CLI::App* maslov_cmd = app.add_subcommand("maslov", "crossing counts over a real λ grid");
  maslov_cmd->add_option("--c", maslov_args.c, "wave speed (< 1)")->required();
  maslov_cmd->add_option("--lambda-min", maslov_args.lambda_min, "grid start")
      ->capture_default_str();
  maslov_cmd->add_option("--lambda-max", maslov_args.lambda_max, "grid end")
      ->capture_default_str();
  maslov_cmd->add_option("--steps", maslov_args.steps, "grid points")->capture_default_str();
  maslov_cmd->add_option("--epsilon", maslov_args.epsilon, "compactified window offset")
      ->capture_default_str();
  maslov_cmd->add_option("--tol", maslov_args.tol, "integrator tolerance")
      ->capture_default_str();
  maslov_cmd->add_option("--format", maslov_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  maslov_cmd->add_option("--out", maslov_args.out, "output path (default stdout)");

  RiccatiArgs riccati_args;
  CLI::App* riccati_cmd =
      app.add_subcommand("riccati", "Riccati witness at one complex λ");
  riccati_cmd->add_option("--c", riccati_args.c, "wave speed (< 1)")->required();
  riccati_cmd->add_option("--lambda", riccati_args.lambda, "complex λ, e.g. 0.5+0.5i")
      ->required();
  riccati_cmd->add_option("--epsilon", riccati_args.epsilon, "compactified window offset")
      ->capture_default_str();
  riccati_cmd->add_option("--tol", riccati_args.tol, "integrator tolerance")
      ->capture_default_str();
  riccati_cmd->add_option("--out", riccati_args.out, "output path (default stdout)");

  ReportArgs report_args;
  CLI::App* report_cmd = app.add_subcommand("report", "full stability report");
  report_cmd->add_option("--c", report_args.c, "wave speed")->required();
  report_cmd->add_option("--config", report_args.config_path, "key = value config file");
  report_cmd->add_option("--out", report_args.out, "output path (default stdout)");

  // Global flags may appear after the subcommand name as well as before it.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (profile_cmd->parsed()) return run_profile(profile_args, global);
    if (exponents_cmd->parsed()) return run_exponents(exponents_args, global);
    if (flow_cmd->parsed()) return run_flow(flow_args, global);
    if (maslov_cmd->parsed()) return run_maslov(maslov_args, global);
    if (riccati_cmd->parsed()) return run_riccati(riccati_args, global);
    if (report_cmd->parsed()) return run_report(report_args, global);
  } catch (const sgkink::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
