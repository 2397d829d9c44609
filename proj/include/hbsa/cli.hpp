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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbsa/analyzer.hpp"
#include "hbsa/teleport.hpp"

namespace hbsa::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240521;

enum class ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

enum class OutputFormat : std::uint8_t { json, csv };

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  double theta = 0.5;
  double alpha = 50.0;
  HomodyneModel::Mode model = HomodyneModel::Mode::ideal;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output_path;

  /// Throws std::invalid_argument on out-of-range parameters. The ideal model
  /// additionally requires theta > 0.
  void validate() const;
  HomodyneModel homodyne_model() const;
};

/// Inclusive grid "start..stop:step", or a single value.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// Throws std::invalid_argument on malformed text.
  static Grid parse(const std::string& text);
  /// Empty when stop < start or step <= 0.
  std::vector<double> values() const;
};

struct TeleportRequest {
  std::optional<std::size_t> random_runs;
  std::optional<std::array<DofAmplitudes, 3>> amplitudes;
};

/// Parses "re" or "re:im".
Complex parse_amplitude(const std::string& text);

nlohmann::ordered_json record_to_json(const AnalysisRecord& record);
std::string csv_header();
std::string record_to_csv(const AnalysisRecord& record);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, const std::string& label, std::ostream& out,
                std::ostream& err);
int cmd_teleport(const RunConfig& config, const TeleportRequest& request, std::ostream& out,
                 std::ostream& err);
int cmd_noise_sweep(const RunConfig& config, const Grid& alpha, const Grid& theta,
                    std::size_t trials, std::ostream& out, std::ostream& err);

/// Full command line, excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbsa::cli
