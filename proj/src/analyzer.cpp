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

#include "hbsa/analyzer.hpp"

#include <set>
#include <stdexcept>

namespace hbsa {
namespace {

bool shifted(ProbeOutcome o) { return o == ProbeOutcome::theta_mag; }

PureState read_probes(const PureState& state, const PhotonPair& pair,
                      std::initializer_list<ProbeId> probes, const HomodyneModel& model,
                      Rng& rng, ProbeSignature& signature) {
  TaggedState tagged = attach_probes(state);
  for (ProbeId probe : probes) {
    for (const Coupling& c : couplings_for(probe, pair)) tagged = cross_kerr(tagged, c);
  }
  for (ProbeId probe : probes) {
    auto result = homodyne_x(tagged, probe, model, rng);
    switch (probe) {
      case ProbeId::P1:
        signature.s1 = result.outcome;
        break;
      case ProbeId::P2:
        signature.s2 = result.outcome;
        break;
      case ProbeId::P3:
        signature.s3 = result.outcome;
        break;
    }
    tagged = std::move(result.post);
  }
  return strip_probes(tagged);
}

void require_pair(const PureState& state, const PhotonPair& pair) {
  if (pair.first == pair.second) throw std::invalid_argument("analyzer needs two distinct photons");
  for (const QubitAddress& q : pair_register(pair)) state.require_position(q);
}

}  // namespace

ParityClasses DetectionSignature::parity_classes() const {
  return {first.pol == second.pol, first.f == second.f, first.s == second.s};
}

std::optional<bool> AnalysisRecord::correct() const {
  if (!input_label) return std::nullopt;
  return *input_label == decoded;
}

ProbedState probe_parity(const PureState& state, const PhotonPair& pair,
                         const HomodyneModel& model, Rng& rng) {
  require_pair(state, pair);
  ProbeSignature signature;
  PureState out = read_probes(state, pair, {ProbeId::P1, ProbeId::P2}, model, rng, signature);
  return {signature, std::move(out)};
}

ProbedState run_to_detection(const PureState& state, const PhotonPair& pair,
                             const HomodyneModel& model, Rng& rng) {
  ProbedState probed = probe_parity(state, pair, model, rng);
  PureState current = bs_hadamard(probed.state, pair.first, DofKind::F);
  current = bs_hadamard(current, pair.second, DofKind::F);
  current = read_probes(current, pair, {ProbeId::P3}, model, rng, probed.signature);
  return {probed.signature, stage_c(current, pair)};
}

PipelineRun run_pipeline(const PureState& state, const PhotonPair& pair,
                         const HomodyneModel& model, Rng& rng) {
  ProbedState probed = run_to_detection(state, pair, model, rng);
  PhotonMeasurement first = measure_photon(probed.state, pair.first, rng);
  PhotonMeasurement second = measure_photon(first.post, pair.second, rng);

  AnalysisRecord record;
  record.probe_sig = probed.signature;
  record.detection = {first.outcome, second.outcome};
  record.decoded = decode(record.probe_sig, record.detection);
  return {record, std::move(second.post)};
}

AnalysisRecord analyze(const PureState& state, const PhotonPair& pair,
                       const HomodyneModel& model, Rng& rng) {
  return run_pipeline(state, pair, model, rng).record;
}

AnalysisRecord analyze_label(const HyperBellLabel& label, const HomodyneModel& model, Rng& rng) {
  const PhotonPair pair{PhotonId::A, PhotonId::B};
  AnalysisRecord record = analyze(hyper_bell_state(label, pair), pair, model, rng);
  record.input_label = label;
  return record;
}

HyperBellLabel decode(const ProbeSignature& probe_sig, const DetectionSignature& detection) {
  const ParityClasses classes = detection.parity_classes();
  const auto parity = [](bool psi) { return psi ? Parity::psi : Parity::phi; };
  const auto phase = [](bool minus) { return minus ? Phase::minus : Phase::plus; };

  HyperBellLabel label;
  label.f = {parity(shifted(probe_sig.s1)), phase(shifted(probe_sig.s3))};
  label.s = {parity(shifted(probe_sig.s2)), phase(!classes.s_equal)};
  label.p = {parity(!classes.f_equal != shifted(probe_sig.s3)),
             phase(!classes.pol_equal != shifted(probe_sig.s1))};
  return label;
}

std::vector<AnalysisRecord> verify_all(const HomodyneModel& model, std::uint64_t seed) {
  std::vector<AnalysisRecord> records;
  records.reserve(HyperBellLabel::kCount);
  for (int k = 0; k < HyperBellLabel::kCount; ++k) {
    Rng rng = derive_stream(seed, static_cast<std::uint64_t>(k));
    records.push_back(analyze_label(HyperBellLabel::from_index(k), model, rng));
  }
  return records;
}

ProbeSignature table1_signature(const HyperBellLabel& label) {
  struct Row {
    BellLabel f;
    Parity s;
    ProbeSignature sig;
  };
  constexpr auto Z = ProbeOutcome::zero;
  constexpr auto T = ProbeOutcome::theta_mag;
  static const std::array<Row, 8> rows = {{
      {kPhiPlus, Parity::phi, {Z, Z, Z}},
      {kPhiMinus, Parity::phi, {Z, Z, T}},
      {kPhiPlus, Parity::psi, {Z, T, Z}},
      {kPhiMinus, Parity::psi, {Z, T, T}},
      {kPsiPlus, Parity::phi, {T, Z, Z}},
      {kPsiMinus, Parity::phi, {T, Z, T}},
      {kPsiPlus, Parity::psi, {T, T, Z}},
      {kPsiMinus, Parity::psi, {T, T, T}},
  }};
  for (const Row& row : rows) {
    if (row.f == label.f && row.s == label.s.parity) return row.sig;
  }
  throw std::logic_error("label missing from the probe table");
}

int table2_group(const HyperBellLabel& label) {
  const int p_minus = label.p.phase == Phase::minus;
  const int f_minus = label.f.phase == Phase::minus;
  const int s_minus = label.s.phase == Phase::minus;
  return 1 + 4 * s_minus + 2 * p_minus + f_minus;
}

double VerificationSummary::error_rate() const {
  if (total == 0) return 0.0;
  return static_cast<double>(total - correct) / static_cast<double>(total);
}

bool VerificationSummary::passed() const {
  return total == HyperBellLabel::kCount && correct == total && injective &&
         table1_consistent && table2_consistent;
}

VerificationSummary summarize(const std::vector<AnalysisRecord>& records) {
  VerificationSummary summary;
  summary.total = records.size();
  summary.table1_consistent = true;
  summary.table2_consistent = true;
  std::set<int> keys;
  std::set<int> labels;
  for (const AnalysisRecord& r : records) {
    if (r.correct().value_or(false)) ++summary.correct;
    keys.insert(8 * r.probe_sig.index() + r.detection.parity_classes().index());
    if (r.input_label) {
      labels.insert(r.input_label->index());
      summary.table1_consistent &= table1_signature(*r.input_label) == r.probe_sig;
      summary.table2_consistent &= table2_group(r.decoded) == table2_group(*r.input_label);
    }
  }
  summary.injective = keys.size() == records.size() && labels.size() == records.size();
  return summary;
}

double sample_error_rate(const HomodyneModel& model, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("at least one trial is required");
  Rng rng = derive_stream(seed, 0);
  std::uniform_int_distribution<int> pick(0, HyperBellLabel::kCount - 1);
  std::size_t wrong = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const HyperBellLabel label = HyperBellLabel::from_index(pick(rng));
    if (!analyze_label(label, model, rng).correct().value_or(false)) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(trials);
}

}  // namespace hbsa
