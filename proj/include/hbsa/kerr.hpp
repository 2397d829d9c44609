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
#include <stdexcept>
#include <vector>

#include "hbsa/hilbert.hpp"

namespace hbsa {

/// Raised when a probe readout meets a state the protocol never produces
/// (a branch whose probe phase is two or more units of theta).
class ModelViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// theta is the cross-phase imprinted per photon (chi * t); alpha is the
/// probe amplitude. theta = 0 is accepted as the degenerate no-signal point.
struct KerrParams {
  double theta = 0.5;
  double alpha = 50.0;

  /// Throws std::invalid_argument unless 0 <= theta <= pi/2 and alpha >= 0.
  void validate() const;
};

enum class ProbeId : std::uint8_t { P1, P2, P3 };
inline constexpr std::size_t kNumProbes = 3;

struct Coupling {
  ProbeId probe;
  PhotonId photon;
  DofKind dof;
  int mode_value;  // 0 or 1
  int sign;        // +1 or -1
};

/// Joint signal-probe state: each basis branch of `base` carries the phase
/// of every probe in units of theta.
class TaggedState {
 public:
  using Tags = std::array<int, kNumProbes>;

  explicit TaggedState(PureState base);
  TaggedState(PureState base, std::vector<Tags> tags);

  const PureState& base() const { return base_; }
  const std::vector<Tags>& tags() const { return tags_; }
  int tag(std::size_t branch, ProbeId probe) const {
    return tags_.at(branch)[static_cast<std::size_t>(probe)];
  }
  bool all_tags_zero() const;

 private:
  PureState base_;
  std::vector<Tags> tags_;
};

enum class ProbeOutcome : std::uint8_t { zero, theta_mag };

struct HomodyneModel {
  enum class Mode : std::uint8_t { ideal, gaussian };

  Mode mode = Mode::ideal;
  KerrParams params{};

  static HomodyneModel ideal() { return {}; }
  /// Requires alpha > 0.
  static HomodyneModel gaussian(KerrParams params);
};

TaggedState attach_probes(const PureState& state);

/// Drops the tags; throws std::invalid_argument if any tag is nonzero.
PureState strip_probes(const TaggedState& tagged);

/// Adds c.sign to the probe tag of every branch whose addressed qubit equals
/// c.mode_value. Amplitudes are untouched.
TaggedState cross_kerr(const TaggedState& tagged, const Coupling& c);

struct HomodyneResult {
  ProbeOutcome outcome;
  TaggedState post;
};

/// X-quadrature readout of one probe. The ideal model projects onto the
/// Born-sampled class (|tag| = 0 or 1). The gaussian model draws x around
/// 2 alpha cos(|tag| theta), reports by the midpoint threshold and weights each
/// branch by the square root of its likelihood of x, so a misread leaves the
/// state partly in the unreported class. In both models the +theta and
/// -theta branches stay coherent and the probe's tags are cleared.
HomodyneResult homodyne_x(const TaggedState& tagged, ProbeId probe,
                          const HomodyneModel& model, Rng& rng);

/// Chance of mistaking a theta shift for no shift (or vice versa) with the
/// midpoint threshold, for x = a + a^dagger with unit variance.
double error_probability(const KerrParams& params);

/// Decision threshold alpha * (1 + cos theta).
double homodyne_threshold(const KerrParams& params);

/// Coupling layout of the three probes: the I (P1, P3) or l (P2) mode of the
/// first photon with +1 and of the second with -1.
std::vector<Coupling> standard_couplings(const PhotonPair& pair = {PhotonId::A, PhotonId::B});
std::vector<Coupling> couplings_for(ProbeId probe,
                                    const PhotonPair& pair = {PhotonId::A, PhotonId::B});

/// Fraction of misreported probe readings over `trials` single-probe runs,
/// alternating the true class between zero and theta.
double empirical_error_rate(const KerrParams& params, std::size_t trials, Rng& rng);

std::string_view to_string(ProbeOutcome outcome);

}  // namespace hbsa
