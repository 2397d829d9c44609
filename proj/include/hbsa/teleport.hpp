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

#include "hbsa/analyzer.hpp"
#include "hbsa/hilbert.hpp"
#include "hbsa/kerr.hpp"

namespace hbsa {

/// a|0> + b|1> for one degree of freedom.
struct DofAmplitudes {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};

  bool is_normalized(double tol = kTolerance) const;
};

/// Pauli correction on one degree of freedom. ZX applies X first, then Z.
enum class Correction : std::uint8_t { I, Z, X, ZX };

struct CorrectionOp {
  std::array<Correction, 3> per_dof{};  // P, F, S

  friend bool operator==(const CorrectionOp&, const CorrectionOp&) = default;
};

Matrix2 correction_matrix(Correction c);
std::string_view to_string(Correction c);

/// Product state of photon X; throws std::invalid_argument unless every
/// factor is normalized.
PureState make_input(const DofAmplitudes& p, const DofAmplitudes& f, const DofAmplitudes& s,
                     PhotonId photon = PhotonId::X);

/// All-plus hyper-Bell channel shared by A and B.
PureState make_channel();

/// phi+ -> I, phi- -> Z, psi+ -> X, psi- -> ZX.
CorrectionOp correction_for(const HyperBellLabel& label);

PureState apply_correction(const PureState& state, PhotonId photon, const CorrectionOp& op);

struct TeleportResult {
  HyperBellLabel label;
  PureState bob_state;  // photon B after correction
  double fidelity = 0.0;
};

/// Runs the analyzer on (X, A), corrects B by the decoded label and scores
/// B against the input.
TeleportResult teleport(const DofAmplitudes& p, const DofAmplitudes& f, const DofAmplitudes& s,
                        const HomodyneModel& model, Rng& rng);

/// Same protocol with the analyzer outcome forced to `label` by projection.
TeleportResult teleport_forced(const DofAmplitudes& p, const DofAmplitudes& f,
                               const DofAmplitudes& s, const HyperBellLabel& label);

/// Haar-uniform qubit amplitudes.
DofAmplitudes random_dof_amplitudes(Rng& rng);

}  // namespace hbsa
