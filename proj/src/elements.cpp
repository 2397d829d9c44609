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

#include "hbsa/elements.hpp"

#include <stdexcept>

namespace hbsa {

PureState bs_hadamard(const PureState& state, PhotonId photon, DofKind dof) {
  if (dof == DofKind::P) {
    throw std::invalid_argument("a beam splitter acts on spatial modes, not polarization");
  }
  return apply_one_qubit(state, {photon, dof}, gates::hadamard());
}

PureState pbs0(const PureState& state, PhotonId photon) {
  const std::size_t control = state.require_position({photon, DofKind::P});
  const std::size_t target = state.require_position({photon, DofKind::F});
  const std::size_t control_mask = std::size_t{1} << control;
  const std::size_t target_mask = std::size_t{1} << target;

  std::vector<Complex> amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & control_mask) != 0 && (i & target_mask) == 0) {
      std::swap(amps[i], amps[i | target_mask]);
    }
  }
  return PureState(state.qubits(), std::move(amps));
}

PureState stage_c(const PureState& state, const PhotonPair& pair) {
  for (const QubitAddress& q : pair_register(pair)) state.require_position(q);
  PureState out = pbs0(state, pair.first);
  out = pbs0(out, pair.second);
  out = bs_hadamard(out, pair.first, DofKind::S);
  return bs_hadamard(out, pair.second, DofKind::S);
}

PureState apply_element(const PureState& state, PhotonId photon, const Element& element) {
  switch (element.kind) {
    case ElementKind::bs_hadamard:
      return bs_hadamard(state, photon, element.dof);
    case ElementKind::pbs0:
      return pbs0(state, photon);
    case ElementKind::pbs45_basis_marker:
      break;
  }
  throw std::invalid_argument("PBS45 selects the detection basis and has no unitary action");
}

}  // namespace hbsa
