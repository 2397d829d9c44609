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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hbsa {

enum class PhotonId : std::uint8_t { A, B, X };

/// Photonic degree of freedom. P is polarization (H=0, V=1), F the first
/// longitudinal momentum (E=0, I=1), S the second (r=0, l=1).
enum class DofKind : std::uint8_t { P, F, S };

inline constexpr std::array<DofKind, 3> kAllDofs = {DofKind::P, DofKind::F,
                                                    DofKind::S};

struct QubitAddress {
  PhotonId photon;
  DofKind dof;

  friend constexpr auto operator<=>(const QubitAddress&,
                                    const QubitAddress&) = default;
};

struct PhotonPair {
  PhotonId first;
  PhotonId second;

  friend constexpr bool operator==(const PhotonPair&,
                                   const PhotonPair&) = default;
};

enum class Parity : std::uint8_t { phi, psi };
enum class Phase : std::uint8_t { plus, minus };

/// One of the four two-qubit Bell states. phi has equal-value branches, psi
/// opposite-value branches; the phase sign sits on the second branch.
struct BellLabel {
  Parity parity = Parity::phi;
  Phase phase = Phase::plus;

  /// phi+ = 0, phi- = 1, psi+ = 2, psi- = 3.
  constexpr int index() const {
    return 2 * static_cast<int>(parity) + static_cast<int>(phase);
  }
  static constexpr BellLabel from_index(int i) {
    return {static_cast<Parity>((i >> 1) & 1), static_cast<Phase>(i & 1)};
  }

  friend constexpr bool operator==(const BellLabel&,
                                   const BellLabel&) = default;
};

inline constexpr BellLabel kPhiPlus{Parity::phi, Phase::plus};
inline constexpr BellLabel kPhiMinus{Parity::phi, Phase::minus};
inline constexpr BellLabel kPsiPlus{Parity::psi, Phase::plus};
inline constexpr BellLabel kPsiMinus{Parity::psi, Phase::minus};

/// Product of one Bell label per degree of freedom; 64 values.
struct HyperBellLabel {
  BellLabel p;
  BellLabel f;
  BellLabel s;

  static constexpr int kCount = 64;

  /// Index in [0, 64) with P most significant.
  constexpr int index() const { return 16 * p.index() + 4 * f.index() + s.index(); }
  static constexpr HyperBellLabel from_index(int i) {
    return {BellLabel::from_index((i >> 4) & 3), BellLabel::from_index((i >> 2) & 3),
            BellLabel::from_index(i & 3)};
  }

  constexpr const BellLabel& operator[](DofKind dof) const {
    switch (dof) {
      case DofKind::P:
        return p;
      case DofKind::F:
        return f;
      default:
        return s;
    }
  }

  friend constexpr bool operator==(const HyperBellLabel&,
                                   const HyperBellLabel&) = default;
};

std::string_view to_string(PhotonId photon);
std::string_view to_string(DofKind dof);
std::string to_string(const QubitAddress& addr);
std::string_view to_string(const BellLabel& label);

/// "phi+,psi-,phi+" in P,F,S order.
std::string to_string(const HyperBellLabel& label);

std::optional<BellLabel> parse_bell_label(std::string_view text);
std::optional<HyperBellLabel> parse_hyper_bell_label(std::string_view text);

}  // namespace hbsa
