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

#include "hbsa/kerr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hbsa {
namespace {

constexpr int kMaxTag = 2;

std::size_t slot(ProbeId probe) { return static_cast<std::size_t>(probe); }

}  // namespace

void KerrParams::validate() const {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi / 2) {
    throw std::invalid_argument("theta must lie in [0, pi/2]");
  }
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw std::invalid_argument("alpha must be non-negative");
  }
}

HomodyneModel HomodyneModel::gaussian(KerrParams params) {
  params.validate();
  if (params.alpha <= 0.0) {
    throw std::invalid_argument("the gaussian homodyne model needs alpha > 0");
  }
  return {Mode::gaussian, params};
}

TaggedState::TaggedState(PureState base)
    : base_(std::move(base)), tags_(base_.dimension(), Tags{}) {}

TaggedState::TaggedState(PureState base, std::vector<Tags> tags)
    : base_(std::move(base)), tags_(std::move(tags)) {
  if (tags_.size() != base_.dimension()) {
    throw std::invalid_argument("one tag vector per basis branch is required");
  }
  for (const Tags& t : tags_) {
    for (int v : t) {
      if (std::abs(v) > kMaxTag) throw ModelViolation("probe tag outside [-2, 2]");
    }
  }
}

bool TaggedState::all_tags_zero() const {
  return std::all_of(tags_.begin(), tags_.end(), [](const Tags& t) {
    return std::all_of(t.begin(), t.end(), [](int v) { return v == 0; });
  });
}

TaggedState attach_probes(const PureState& state) { return TaggedState(state); }

PureState strip_probes(const TaggedState& tagged) {
  if (!tagged.all_tags_zero()) {
    throw std::invalid_argument("signal is still entangled with a probe");
  }
  return tagged.base();
}

TaggedState cross_kerr(const TaggedState& tagged, const Coupling& c) {
  if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("coupling sign must be +1 or -1");
  if (c.mode_value != 0 && c.mode_value != 1) {
    throw std::invalid_argument("coupling mode value must be 0 or 1");
  }
  const std::size_t pos = tagged.base().require_position({c.photon, c.dof});
  std::vector<TaggedState::Tags> tags = tagged.tags();
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (static_cast<int>((i >> pos) & 1U) == c.mode_value) tags[i][slot(c.probe)] += c.sign;
  }
  return TaggedState(tagged.base(), std::move(tags));
}

HomodyneResult homodyne_x(const TaggedState& tagged, ProbeId probe, const HomodyneModel& model,
                          Rng& rng) {
  const auto& amps = tagged.base().amplitudes();
  std::array<double, 2> weight{};
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const int magnitude = std::abs(tagged.tag(i, probe));
    if (magnitude >= 2) {
      throw ModelViolation("probe phase of two or more units reached the homodyne stage");
    }
    weight[static_cast<std::size_t>(magnitude)] += std::norm(amps[i]);
  }
  const double total = weight[0] + weight[1];
  if (total <= 0.0) throw std::invalid_argument("cannot read a probe of the zero vector");

  std::uniform_real_distribution<double> uniform(0.0, total);
  const int produced = uniform(rng) < weight[0] ? 0 : 1;

  std::vector<Complex> conditioned = amps;
  std::vector<TaggedState::Tags> tags = tagged.tags();
  int reported = produced;
  if (model.mode == HomodyneModel::Mode::ideal) {
    for (std::size_t i = 0; i < conditioned.size(); ++i) {
      if (std::abs(tags[i][slot(probe)]) != produced) conditioned[i] = 0.0;
    }
  } else {
    const KerrParams& p = model.params;
    const std::array<double, 2> mean = {2.0 * p.alpha, 2.0 * p.alpha * std::cos(p.theta)};
    std::normal_distribution<double> quadrature(mean[static_cast<std::size_t>(produced)], 1.0);
    const double x = quadrature(rng);
    reported = x > homodyne_threshold(p) ? 0 : 1;
    // Each branch is scaled by the square root of the likelihood of x, relative
    // to the likelier class so the factors cannot underflow together.
    std::array<double, 2> exponent{};
    for (std::size_t k = 0; k < 2; ++k) exponent[k] = (x - mean[k]) * (x - mean[k]) / 4.0;
    const double reference = weight[0] > 0.0 && weight[1] > 0.0
                                 ? std::min(exponent[0], exponent[1])
                                 : exponent[static_cast<std::size_t>(produced)];
    for (std::size_t i = 0; i < conditioned.size(); ++i) {
      if (conditioned[i] == 0.0) continue;
      const auto k = static_cast<std::size_t>(std::abs(tags[i][slot(probe)]));
      conditioned[i] *= std::exp(reference - exponent[k]);
    }
  }
  for (TaggedState::Tags& t : tags) t[slot(probe)] = 0;
  PureState post = PureState(tagged.base().qubits(), std::move(conditioned)).normalized();
  return {reported == 0 ? ProbeOutcome::zero : ProbeOutcome::theta_mag,
          TaggedState(std::move(post), std::move(tags))};
}

double error_probability(const KerrParams& params) {
  params.validate();
  const double separation = params.alpha * (1.0 - std::cos(params.theta));
  return 0.5 * std::erfc(separation / std::numbers::sqrt2);
}

double homodyne_threshold(const KerrParams& params) {
  return params.alpha * (1.0 + std::cos(params.theta));
}

std::vector<Coupling> couplings_for(ProbeId probe, const PhotonPair& pair) {
  const DofKind dof = probe == ProbeId::P2 ? DofKind::S : DofKind::F;
  return {{probe, pair.first, dof, 1, +1}, {probe, pair.second, dof, 1, -1}};
}

std::vector<Coupling> standard_couplings(const PhotonPair& pair) {
  std::vector<Coupling> out;
  for (ProbeId probe : {ProbeId::P1, ProbeId::P2, ProbeId::P3}) {
    const auto c = couplings_for(probe, pair);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

double empirical_error_rate(const KerrParams& params, std::size_t trials, Rng& rng) {
  if (trials == 0) throw std::invalid_argument("at least one trial is required");
  const HomodyneModel model = HomodyneModel::gaussian(params);
  const std::vector<QubitAddress> reg{{PhotonId::A, DofKind::F}};
  const Coupling coupling{ProbeId::P1, PhotonId::A, DofKind::F, 1, +1};
  const std::array<TaggedState, 2> sources = {
      attach_probes(PureState::basis(reg, 0)),
      cross_kerr(attach_probes(PureState::basis(reg, 1)), coupling)};

  std::size_t wrong = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t truth = t % 2;
    const auto result = homodyne_x(sources[truth], ProbeId::P1, model, rng);
    if (static_cast<std::size_t>(result.outcome) != truth) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(trials);
}

std::string_view to_string(ProbeOutcome outcome) {
  return outcome == ProbeOutcome::zero ? "0" : "theta";
}

}  // namespace hbsa
