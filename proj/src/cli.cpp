// Copyright 2026 The HBSA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hbsa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hbsa::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kTeleportFidelityFloor = 1.0 - 1e-10;
constexpr double kCliNormTolerance = 1e-9;

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string_view model_name(HomodyneModel::Mode mode) {
  return mode == HomodyneModel::Mode::ideal ? "ideal" : "gaussian";
}

Json photon_json(const PhotonOutcome& o) {
  Json j;
  j["pol"] = to_string(o.pol);
  j["f"] = to_string(o.f);
  j["s"] = to_string(o.s);
  return j;
}

Json config_json(const RunConfig& config) {
  Json j;
  j["seed"] = config.seed;
  j["theta"] = config.theta;
  j["alpha"] = config.alpha;
  j["model"] = model_name(config.model);
  return j;
}

int emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
  if (!config.output_path) {
    out << text;
    out.flush();
    return static_cast<int>(ExitCode::ok);
  }
  std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write " << *config.output_path << "\n";
    return static_cast<int>(ExitCode::verification_failed);
  }
  return static_cast<int>(ExitCode::ok);
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return static_cast<int>(ExitCode::usage);
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

void RunConfig::validate() const {
  KerrParams{theta, alpha}.validate();
  if (model == HomodyneModel::Mode::ideal && theta <= 0.0) {
    throw std::invalid_argument("theta must be positive");
  }
  if (model == HomodyneModel::Mode::gaussian && alpha <= 0.0) {
    throw std::invalid_argument("the gaussian model needs alpha > 0");
  }
}

HomodyneModel RunConfig::homodyne_model() const {
  if (model == HomodyneModel::Mode::ideal) return {HomodyneModel::Mode::ideal, {theta, alpha}};
  return HomodyneModel::gaussian({theta, alpha});
}

Grid Grid::parse(const std::string& text) {
  const auto to_double = [&text](const std::string& piece) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != piece.size() || !std::isfinite(v)) {
      throw std::invalid_argument("malformed grid '" + text + "'");
    }
    return v;
  };
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const double v = to_double(text);
    return {v, v, 1.0};
  }
  const std::size_t colon = text.find(':', dots + 2);
  if (colon == std::string::npos) throw std::invalid_argument("grid '" + text + "' lacks :step");
  return {to_double(text.substr(0, dots)), to_double(text.substr(dots + 2, colon - dots - 2)),
          to_double(text.substr(colon + 1))};
}

std::vector<double> Grid::values() const {
  std::vector<double> out;
  if (step <= 0.0 || stop < start) return out;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

Complex parse_amplitude(const std::string& text) {
  const std::size_t colon = text.find(':');
  const auto number = [&text](const std::string& piece) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != piece.size()) throw std::invalid_argument("malformed amplitude '" + text + "'");
    return v;
  };
  if (colon == std::string::npos) return {number(text), 0.0};
  return {number(text.substr(0, colon)), number(text.substr(colon + 1))};
}

Json record_to_json(const AnalysisRecord& record) {
  Json j;
  j["input"] = record.input_label ? Json(to_string(*record.input_label)) : Json(nullptr);
  j["probe_sig"] = Json::array({to_string(record.probe_sig.s1), to_string(record.probe_sig.s2),
                                to_string(record.probe_sig.s3)});
  j["detection"]["first"] = photon_json(record.detection.first);
  j["detection"]["second"] = photon_json(record.detection.second);
  j["decoded"] = to_string(record.decoded);
  const auto correct = record.correct();
  j["correct"] = correct ? Json(*correct) : Json(nullptr);
  return j;
}

std::string csv_header() {
  return "input,s1,s2,s3,first_pol,first_f,first_s,second_pol,second_f,second_s,decoded,correct";
}

std::string record_to_csv(const AnalysisRecord& record) {
  std::ostringstream row;
  // Labels contain commas, so they are quoted.
  row << '"' << (record.input_label ? to_string(*record.input_label) : "") << "\",";
  row << to_string(record.probe_sig.s1) << ',' << to_string(record.probe_sig.s2) << ','
      << to_string(record.probe_sig.s3) << ',';
  for (const PhotonOutcome& o : {record.detection.first, record.detection.second}) {
    row << to_string(o.pol) << ',' << to_string(o.f) << ',' << to_string(o.s) << ',';
  }
  row << '"' << to_string(record.decoded) << "\",";
  const auto correct = record.correct();
  row << (correct ? (*correct ? "true" : "false") : "");
  return row.str();
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const HomodyneModel model = config.homodyne_model();
  const std::vector<AnalysisRecord> records = verify_all(model, config.seed);
  const VerificationSummary summary = summarize(records);

  std::string text;
  if (config.format == OutputFormat::json) {
    Json j;
    j["command"] = "verify";
    j["config"] = config_json(config);
    j["records"] = Json::array();
    for (const AnalysisRecord& r : records) j["records"].push_back(record_to_json(r));
    Json& s = j["summary"];
    s["total"] = summary.total;
    s["correct"] = summary.correct;
    s["error_rate"] = summary.error_rate();
    s["injective"] = summary.injective;
    s["table1_consistent"] = summary.table1_consistent;
    s["table2_consistent"] = summary.table2_consistent;
    text = json_text(j);
  } else {
    text = csv_header() + "\n";
    for (const AnalysisRecord& r : records) text += record_to_csv(r) + "\n";
    err << "summary: correct=" << summary.correct << "/" << summary.total
        << " error_rate=" << format_double(summary.error_rate())
        << " injective=" << summary.injective << " table1=" << summary.table1_consistent
        << " table2=" << summary.table2_consistent << "\n";
  }

  if (const int rc = emit(config, text, out, err); rc != 0) return rc;
  if (config.model == HomodyneModel::Mode::ideal && !summary.passed()) {
    return static_cast<int>(ExitCode::verification_failed);
  }
  return static_cast<int>(ExitCode::ok);
}

int cmd_analyze(const RunConfig& config, const std::string& label_text, std::ostream& out,
                std::ostream& err) {
  const auto label = parse_hyper_bell_label(label_text);
  if (!label) return usage_error(err, "cannot parse label '" + label_text + "'");
  Rng rng = derive_stream(config.seed, static_cast<std::uint64_t>(label->index()));
  const AnalysisRecord record = analyze_label(*label, config.homodyne_model(), rng);

  const std::string text = config.format == OutputFormat::json
                               ? json_text(record_to_json(record))
                               : csv_header() + "\n" + record_to_csv(record) + "\n";
  if (const int rc = emit(config, text, out, err); rc != 0) return rc;
  if (config.model == HomodyneModel::Mode::ideal && !record.correct().value_or(false)) {
    return static_cast<int>(ExitCode::verification_failed);
  }
  return static_cast<int>(ExitCode::ok);
}

int cmd_teleport(const RunConfig& config, const TeleportRequest& request, std::ostream& out,
                 std::ostream& err) {
  if (request.random_runs.has_value() == request.amplitudes.has_value()) {
    return usage_error(err, "teleport needs exactly one of --random N or --amps");
  }
  std::array<DofAmplitudes, 3> fixed{};
  if (request.amplitudes) {
    fixed = *request.amplitudes;
    for (DofAmplitudes& d : fixed) {
      if (!d.is_normalized(kCliNormTolerance)) {
        return usage_error(err, "teleport amplitudes are not normalized");
      }
      const double norm = std::sqrt(std::norm(d.a) + std::norm(d.b));
      d = {d.a / norm, d.b / norm};
    }
  }
  const std::size_t runs = request.random_runs.value_or(1);
  if (runs == 0) return usage_error(err, "--random needs at least one run");

  const HomodyneModel model = config.homodyne_model();
  std::vector<TeleportResult> results;
  results.reserve(runs);
  for (std::size_t i = 0; i < runs; ++i) {
    Rng rng = derive_stream(config.seed, i);
    std::array<DofAmplitudes, 3> amps = fixed;
    if (request.random_runs) {
      for (DofAmplitudes& d : amps) d = random_dof_amplitudes(rng);
    }
    results.push_back(teleport(amps[0], amps[1], amps[2], model, rng));
  }

  double min_fidelity = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const TeleportResult& r : results) {
    min_fidelity = std::min(min_fidelity, r.fidelity);
    sum += r.fidelity;
  }
  const double mean_fidelity = sum / static_cast<double>(runs);

  std::string text;
  if (config.format == OutputFormat::json) {
    Json j;
    j["command"] = "teleport";
    j["config"] = config_json(config);
    j["runs"] = Json::array();
    for (std::size_t i = 0; i < runs; ++i) {
      Json run;
      run["run"] = i;
      run["label"] = to_string(results[i].label);
      run["fidelity"] = results[i].fidelity;
      j["runs"].push_back(run);
    }
    j["summary"]["runs"] = runs;
    j["summary"]["min_fidelity"] = min_fidelity;
    j["summary"]["mean_fidelity"] = mean_fidelity;
    text = json_text(j);
  } else {
    text = "run,label,fidelity\n";
    for (std::size_t i = 0; i < runs; ++i) {
      text += std::to_string(i) + ",\"" + to_string(results[i].label) + "\"," +
              format_double(results[i].fidelity) + "\n";
    }
    err << "summary: runs=" << runs << " min_fidelity=" << format_double(min_fidelity)
        << " mean_fidelity=" << format_double(mean_fidelity) << "\n";
  }

  if (const int rc = emit(config, text, out, err); rc != 0) return rc;
  if (config.model == HomodyneModel::Mode::ideal && min_fidelity < kTeleportFidelityFloor) {
    return static_cast<int>(ExitCode::verification_failed);
  }
  return static_cast<int>(ExitCode::ok);
}

int cmd_noise_sweep(const RunConfig& config, const Grid& alpha, const Grid& theta,
                    std::size_t trials, std::ostream& out, std::ostream& err) {
  const std::vector<double> alphas = alpha.values();
  const std::vector<double> thetas = theta.values();
  if (alphas.empty() || thetas.empty()) return usage_error(err, "empty alpha or theta grid");
  if (trials == 0) return usage_error(err, "--trials must be positive");

  struct Row {
    double alpha, theta, analytic, empirical;
  };
  std::vector<Row> rows;
  for (double a : alphas) {
    for (double t : thetas) {
      const KerrParams params{t, a};
      try {
        HomodyneModel::gaussian(params);
      } catch (const std::invalid_argument& e) {
        return usage_error(err, "grid cell (alpha=" + format_double(a) +
                                    ", theta=" + format_double(t) + "): " + e.what());
      }
      Rng rng = derive_stream(config.seed, rows.size());
      rows.push_back({a, t, error_probability(params), empirical_error_rate(params, trials, rng)});
    }
  }

  std::string text;
  if (config.format == OutputFormat::json) {
    Json j;
    j["command"] = "noise-sweep";
    j["seed"] = config.seed;
    j["trials"] = trials;
    j["rows"] = Json::array();
    for (const Row& r : rows) {
      Json row;
      row["alpha"] = r.alpha;
      row["theta"] = r.theta;
      row["analytic"] = r.analytic;
      row["empirical"] = r.empirical;
      j["rows"].push_back(row);
    }
    text = json_text(j);
  } else {
    text = "alpha,theta,analytic,empirical,trials\n";
    for (const Row& r : rows) {
      text += format_double(r.alpha) + "," + format_double(r.theta) + "," +
              format_double(r.analytic) + "," + format_double(r.empirical) + "," +
              std::to_string(trials) + "\n";
    }
  }
  return emit(config, text, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperentangled Bell-state analysis simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string model = "ideal";
  std::string format = "json";
  std::string out_path;
  app.add_option("--seed", config.seed, "master seed")->capture_default_str();
  app.add_option("--theta", config.theta, "cross-Kerr phase per photon (radians)")
      ->capture_default_str();
  app.add_option("--alpha", config.alpha, "probe coherent amplitude")->capture_default_str();
  app.add_option("--model", model, "homodyne model")
      ->check(CLI::IsMember({"ideal", "gaussian"}))
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this file");

  auto* verify = app.add_subcommand("verify", "analyze all 64 hyper-Bell states");

  auto* analyze = app.add_subcommand("analyze", "analyze one hyper-Bell state");
  std::string label;
  analyze->add_option("label", label, "e.g. phi+,psi-,phi+ (P,F,S)")->required();

  auto* teleport = app.add_subcommand("teleport", "three-DOF teleportation");
  std::size_t random_runs = 0;
  std::vector<std::string> amp_text;
  auto* random_opt = teleport->add_option("--random", random_runs, "random inputs to teleport");
  auto* amps_opt = teleport->add_option("--amps", amp_text, "aP bP aF bF aS bS (re or re:im)")
                       ->expected(6);
  random_opt->excludes(amps_opt);

  auto* sweep = app.add_subcommand("noise-sweep", "homodyne error rate over an (alpha, theta) grid");
  std::string alpha_grid;
  std::string theta_grid;
  std::size_t trials = 10000;
  sweep->add_option("--alpha", alpha_grid, "start..stop:step")->required();
  sweep->add_option("--theta", theta_grid, "start..stop:step")->required();
  sweep->add_option("--trials", trials, "trials per cell")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(ExitCode::ok);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return static_cast<int>(ExitCode::ok);
  } catch (const CLI::ParseError& e) {
    return usage_error(err, e.what());
  }

  config.model = model == "ideal" ? HomodyneModel::Mode::ideal : HomodyneModel::Mode::gaussian;
  config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!out_path.empty()) config.output_path = out_path;

  try {
    if (*sweep) {
      return cmd_noise_sweep(config, Grid::parse(alpha_grid), Grid::parse(theta_grid), trials, out,
                             err);
    }
    config.validate();
    if (*verify) return cmd_verify(config, out, err);
    if (*analyze) return cmd_analyze(config, label, out, err);

    TeleportRequest request;
    if (*random_opt) request.random_runs = random_runs;
    if (*amps_opt) {
      std::array<DofAmplitudes, 3> amps;
      for (std::size_t k = 0; k < 3; ++k) {
        amps[k] = {parse_amplitude(amp_text[2 * k]), parse_amplitude(amp_text[2 * k + 1])};
      }
      request.amplitudes = amps;
    }
    return cmd_teleport(config, request, out, err);
  } catch (const std::invalid_argument& e) {
    return usage_error(err, e.what());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::verification_failed);
  }
}

}  // namespace hbsa::cli
