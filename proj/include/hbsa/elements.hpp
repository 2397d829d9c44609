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

#include "hbsa/hilbert.hpp"

namespace hbsa {

/// Logical linear-optical elements of the analyzer. PBS45 only declares the
/// +/- detection basis used by measure_photon; it has no unitary action.
enum class ElementKind : std::uint8_t { bs_hadamard, pbs0, pbs45_basis_marker };

struct Element {
  ElementKind kind;
  DofKind dof = DofKind::F;  // meaningful for bs_hadamard only
};

/// 50:50 beam splitter on a momentum qubit (F or S).
PureState bs_hadamard(const PureState& state, PhotonId photon, DofKind dof);

/// PBS at 0 degrees: a V photon has its F mode swapped (E <-> I), an H
/// photon passes unchanged.
PureState pbs0(const PureState& state, PhotonId photon);

/// PBSs on both photons followed by S-mode beam splitters on both photons.
PureState stage_c(const PureState& state, const PhotonPair& pair);

/// Throws std::invalid_argument for pbs45_basis_marker.
PureState apply_element(const PureState& state, PhotonId photon, const Element& element);

}  // namespace hbsa
