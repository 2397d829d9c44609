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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hbsa/elements.hpp"
#include "hbsa/hilbert.hpp"
#include "hbsa/kerr.hpp"

namespace hbsa {

/// Readouts of the three probes, in P1, P2, P3 order.
struct ProbeSignature {
  ProbeOutcome s1 = ProbeOutcome::zero;
  ProbeOutcome s2 = ProbeOutcome::zero;
  ProbeOutcome s3 = ProbeOutcome::zero;

  /// s1 most significant; eight values.
  int index() const {
    return 4 * static_cast<int>(s1) + 2 * static_cast<int>(s2) + static_cast<int>(s3);
  }

  friend bool operator==(const ProbeSignature&, const ProbeSignature&) = default;
};

/// Whether the two photons agreed in each detected degree of freedom.
struct ParityClasses {
  bool pol_equal = true;
  bool f_equal = true;
  bool s_equal = true;

  int index() const { return 4 * pol_equal + 2 * f_equal + s_equal; }

  friend bool operator==(const ParityClasses&, const ParityClasses&) = default;
};

struct DetectionSignature {
  PhotonOutcome first;
  PhotonOutcome second;

  ParityClasses parity_classes() const;

  friend bool operator==(const DetectionSignature&, const DetectionSignature&) = default;
};

struct AnalysisRecord {
  std::optional<HyperBellLabel> input_label;
  ProbeSignature probe_sig;
  DetectionSignature detection;
  HyperBellLabel decoded;

  std::optional<bool> correct() const;
};

/// Signal state after one or more probe stages together with what the
/// probes reported so far.
struct ProbedState {
  ProbeSignature signature;
  PureState state;
};

/// P1 and P2: cross-Kerr couplings on F and S, then both homodyne readouts.
ProbedState probe_parity(const PureState& state, const PhotonPair& pair,
                         const HomodyneModel& model, Rng& rng);

/// Full pre-detection evolution: probe_parity, F beam splitters, P3, stage_c.
ProbedState run_to_detection(const PureState& state, const PhotonPair& pair,
                             const HomodyneModel& model, Rng& rng);

struct PipelineRun {
  AnalysisRecord record;
  PureState post;  // full register after both photons are detected
};

/// run_to_detection, detection of both photons, decode.
PipelineRun run_pipeline(const PureState& state, const PhotonPair& pair,
                         const HomodyneModel& model, Rng& rng);

AnalysisRecord analyze(const PureState& state, const PhotonPair& pair,
                       const HomodyneModel& model, Rng& rng);

/// analyze() on hyper_bell_state(label) over (A, B), with the input recorded.
AnalysisRecord analyze_label(const HyperBellLabel& label, const HomodyneModel& model, Rng& rng);

/// Reads the label off the probes and the detector parity classes:
///   F parity  <- s1,     F phase <- s3,   S parity <- s2,
///   S phase   <- s-parity of the detectors,
///   P parity  <- f-parity XOR s3,
///   P phase   <- pol-parity XOR s1.
/// The PBSs copy the phase of the F pair onto polarization, and that F phase
/// is the original F parity after the first pair of beam splitters.
HyperBellLabel decode(const ProbeSignature& probe_sig, const DetectionSignature& detection);

/// One record per label, in HyperBellLabel::index() order, each run on its
/// own stream derived from `seed`.
std::vector<AnalysisRecord> verify_all(const HomodyneModel& model, std::uint64_t seed);

/// The probe signature printed for `label` in the grouping table of the
/// three probes.
ProbeSignature table1_signature(const HyperBellLabel& label);

/// Group 1..8 of the phase-sign triple (P, F, S), with S most significant,
/// then P, then F: 1=(+,+,+), 2=(+,-,+), 3=(-,+,+), ..., 8=(-,-,-).
int table2_group(const HyperBellLabel& label);

struct VerificationSummary {
  std::size_t total = 0;
  std::size_t correct = 0;
  bool injective = false;
  bool table1_consistent = false;
  bool table2_consistent = false;

  double error_rate() const;
  bool passed() const;
};

VerificationSummary summarize(const std::vector<AnalysisRecord>& records);

/// Fraction of wrongly decoded labels over `trials` uniformly drawn inputs.
double sample_error_rate(const HomodyneModel& model, std::size_t trials, std::uint64_t seed);

}  // namespace hbsa
