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

#include "hbsa/teleport.hpp"

#include <cmath>
#include <stdexcept>

namespace hbsa {
namespace {

constexpr PhotonPair kAlicePair{PhotonId::X, PhotonId::A};

Correction correction_of(const BellLabel& label) {
  if (label.parity == Parity::phi) {
    return label.phase == Phase::plus ? Correction::I : Correction::Z;
  }
  return label.phase == Phase::plus ? Correction::X : Correction::ZX;
}

PureState dof_qubit(const DofAmplitudes& amps, PhotonId photon, DofKind dof) {
  if (!amps.is_normalized()) {
    throw std::invalid_argument("amplitudes of " + std::string(to_string(dof)) +
                                " are not normalized");
  }
  return PureState({{photon, dof}}, {amps.a, amps.b});
}

TeleportResult finish(const HyperBellLabel& label, const PureState& bob_raw,
                      const PureState& target) {
  PureState bob = apply_correction(bob_raw, PhotonId::B, correction_for(label));
  const double f = fidelity(target, bob);
  return {label, std::move(bob), f};
}

}  // namespace

bool DofAmplitudes::is_normalized(double tol) const {
  return std::abs(std::norm(a) + std::norm(b) - 1.0) <= tol;
}

Matrix2 correction_matrix(Correction c) {
  switch (c) {
    case Correction::I:
      return gates::identity();
    case Correction::Z:
      return gates::pauli_z();
    case Correction::X:
      return gates::pauli_x();
    case Correction::ZX:
      return gates::multiply(gates::pauli_z(), gates::pauli_x());
  }
  return gates::identity();
}

std::string_view to_string(Correction c) {
  switch (c) {
    case Correction::I:
      return "I";
    case Correction::Z:
      return "Z";
    case Correction::X:
      return "X";
    case Correction::ZX:
      return "ZX";
  }
  return "?";
}

PureState make_input(const DofAmplitudes& p, const DofAmplitudes& f, const DofAmplitudes& s,
                     PhotonId photon) {
  return tensor(tensor(dof_qubit(p, photon, DofKind::P), dof_qubit(f, photon, DofKind::F)),
                dof_qubit(s, photon, DofKind::S));
}

PureState make_channel() {
  return hyper_bell_state({kPhiPlus, kPhiPlus, kPhiPlus}, {PhotonId::A, PhotonId::B});
}

CorrectionOp correction_for(const HyperBellLabel& label) {
  return {{correction_of(label.p), correction_of(label.f), correction_of(label.s)}};
}

PureState apply_correction(const PureState& state, PhotonId photon, const CorrectionOp& op) {
  PureState out = state;
  for (std::size_t k = 0; k < 3; ++k) {
    out = apply_one_qubit(out, {photon, kAllDofs[k]}, correction_matrix(op.per_dof[k]));
  }
  return out;
}

TeleportResult teleport(const DofAmplitudes& p, const DofAmplitudes& f, const DofAmplitudes& s,
                        const HomodyneModel& model, Rng& rng) {
  const PureState joint = tensor(make_input(p, f, s), make_channel());
  const PipelineRun run = run_pipeline(joint, kAlicePair, model, rng);
  const std::array<PhotonId, 2> measured{kAlicePair.first, kAlicePair.second};
  const PureState bob = extract_factor(run.post, measured);
  return finish(run.record.decoded, bob, make_input(p, f, s, PhotonId::B));
}

TeleportResult teleport_forced(const DofAmplitudes& p, const DofAmplitudes& f,
                               const DofAmplitudes& s, const HyperBellLabel& label) {
  const PureState joint = tensor(make_input(p, f, s), make_channel());
  const PureState bob = project_pair(joint, kAlicePair, label).normalized();
  return finish(label, bob, make_input(p, f, s, PhotonId::B));
}

DofAmplitudes random_dof_amplitudes(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Complex a{gauss(rng), gauss(rng)};
  Complex b{gauss(rng), gauss(rng)};
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  return {a / norm, b / norm};
}

}  // namespace hbsa
