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
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hbsa/labels.hpp"

namespace hbsa {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Random stream shared by every sampling routine.
using Rng = std::mt19937_64;

/// Independent stream for task `index` under a master seed.
Rng derive_stream(std::uint64_t master_seed, std::uint64_t index);

/// Tolerance for exact-arithmetic checks on amplitudes.
inline constexpr double kTolerance = 1e-12;

namespace gates {
Matrix2 identity();
Matrix2 pauli_x();
Matrix2 pauli_z();
Matrix2 hadamard();
Matrix2 multiply(const Matrix2& lhs, const Matrix2& rhs);
bool is_unitary(const Matrix2& u, double tol = kTolerance);
}  // namespace gates

/// Dense amplitude vector over an ordered register of binary qubits. Bit k
/// of a basis index is the value of register position k.
class PureState {
 public:
  /// Throws std::invalid_argument on duplicate addresses or a size mismatch.
  /// Normalization is not enforced here; projections produce sub-normalized
  /// vectors.
  PureState(std::vector<QubitAddress> reg, std::vector<Complex> amplitudes);

  static PureState basis(std::vector<QubitAddress> reg, std::size_t index);

  const std::vector<QubitAddress>& qubits() const { return register_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  std::size_t num_qubits() const { return register_.size(); }
  std::size_t dimension() const { return amplitudes_.size(); }
  Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }

  std::optional<std::size_t> position_of(const QubitAddress& addr) const;
  /// Throws std::invalid_argument if absent.
  std::size_t require_position(const QubitAddress& addr) const;
  bool contains(PhotonId photon) const;

  double norm_squared() const;
  PureState normalized() const;

  /// Same state expressed over `order`, which must be a permutation of the
  /// current register.
  PureState permuted(const std::vector<QubitAddress>& order) const;

 private:
  std::vector<QubitAddress> register_;
  std::vector<Complex> amplitudes_;
};

/// The three qubits of `photon` in P,F,S order.
std::vector<QubitAddress> photon_register(PhotonId photon);

/// Canonical register of a photon pair: first photon's P,F,S then second's.
std::vector<QubitAddress> pair_register(const PhotonPair& pair);

PureState bell_state(const BellLabel& label, DofKind dof, const PhotonPair& pair);

/// Tensor product of the three Bell pairs over pair_register(pair).
PureState hyper_bell_state(const HyperBellLabel& label, const PhotonPair& pair);

PureState tensor(const PureState& a, const PureState& b);

PureState apply_one_qubit(const PureState& state, const QubitAddress& addr,
                          const Matrix2& u);

/// <a|b>; b is aligned to a's register first.
Complex inner_product(const PureState& a, const PureState& b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const PureState& a, const PureState& b);

/// Rotates the first amplitude with magnitude above kTolerance to the
/// positive real axis.
PureState normalize_global_phase(const PureState& state);

/// Maximum per-amplitude deviation between two states on the same register.
double max_amplitude_distance(const PureState& a, const PureState& b);

using HyperBellAmplitudes = std::array<Complex, HyperBellLabel::kCount>;

/// Coordinates of a 6-qubit pair state in the hyper-Bell basis, indexed by
/// HyperBellLabel::index().
HyperBellAmplitudes decompose_hyper_bell(const PureState& state,
                                         const PhotonPair& pair);

/// Inverse of decompose_hyper_bell.
PureState compose_hyper_bell(const HyperBellAmplitudes& coefficients,
                             const PhotonPair& pair);

/// (<label|_pair (x) 1) |state>: the unnormalized state of the qubits that
/// remain once the pair is projected onto hyper_bell_state(label).
PureState project_pair(const PureState& state, const PhotonPair& pair,
                       const HyperBellLabel& label);

/// State of the qubits outside `photons`, assuming the state factorizes
/// across that cut. Picks the slice of largest weight and normalizes it.
PureState extract_factor(const PureState& state, std::span<const PhotonId> photons);

enum class PolOutcome : std::uint8_t { plus, minus };
enum class FMode : std::uint8_t { E, I };
enum class SMode : std::uint8_t { r, l };

/// Detector click of one photon: polarization in the +/- basis, momentum
/// modes in their computational bases.
struct PhotonOutcome {
  PolOutcome pol = PolOutcome::plus;
  FMode f = FMode::E;
  SMode s = SMode::r;

  /// pol most significant: (+,E,r) = 0 ... (-,I,l) = 7.
  constexpr int index() const {
    return 4 * static_cast<int>(pol) + 2 * static_cast<int>(f) + static_cast<int>(s);
  }
  static constexpr PhotonOutcome from_index(int i) {
    return {static_cast<PolOutcome>((i >> 2) & 1), static_cast<FMode>((i >> 1) & 1),
            static_cast<SMode>(i & 1)};
  }

  friend constexpr bool operator==(const PhotonOutcome&,
                                   const PhotonOutcome&) = default;
};

std::string_view to_string(PolOutcome pol);
std::string_view to_string(FMode mode);
std::string_view to_string(SMode mode);

struct PhotonMeasurement {
  PhotonOutcome outcome;
  double probability = 0.0;
  PureState post;
};

/// Born-sampled detection of one photon. The post-state keeps the full
/// register, projected onto the observed outcome and renormalized.
PhotonMeasurement measure_photon(const PureState& state, PhotonId photon, Rng& rng);

struct SupportEntry {
  std::vector<PhotonOutcome> outcomes;  // one per requested photon, in order
  double probability = 0.0;
};

/// Every joint detection outcome with probability above kTolerance, sorted
/// lexicographically by PhotonOutcome::index() in the order of `photons`.
std::vector<SupportEntry> outcome_support(const PureState& state,
                                          std::span<const PhotonId> photons);

}  // namespace hbsa
