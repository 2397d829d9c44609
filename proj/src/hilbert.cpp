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

#include "hbsa/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace hbsa {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool bit(std::size_t index, std::size_t position) {
  return ((index >> position) & 1U) != 0;
}

// Copy of `state` with a Hadamard on the polarization qubit of each photon,
// so that computational-basis P bits read as the +/- outcome (0 = +).
PureState rotate_to_detection_basis(const PureState& state,
                                    std::span<const PhotonId> photons) {
  PureState rotated = state;
  for (PhotonId photon : photons) {
    rotated = apply_one_qubit(rotated, {photon, DofKind::P}, gates::hadamard());
  }
  return rotated;
}

struct PhotonBits {
  std::array<std::size_t, 3> positions;  // P, F, S
};

PhotonBits photon_bits(const PureState& state, PhotonId photon) {
  if (!state.contains(photon)) {
    throw std::invalid_argument("photon " + std::string(to_string(photon)) +
                                " is not in the register");
  }
  PhotonBits out{};
  for (std::size_t k = 0; k < 3; ++k) {
    out.positions[k] = state.require_position({photon, kAllDofs[k]});
  }
  return out;
}

int outcome_index(std::size_t basis_index, const PhotonBits& bits) {
  return 4 * bit(basis_index, bits.positions[0]) + 2 * bit(basis_index, bits.positions[1]) +
         bit(basis_index, bits.positions[2]);
}

}  // namespace

Rng derive_stream(std::uint64_t master_seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace gates {

Matrix2 identity() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
Matrix2 pauli_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
Matrix2 pauli_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }
Matrix2 hadamard() { return {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}}; }

Matrix2 multiply(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = lhs[i][0] * rhs[0][j] + lhs[i][1] * rhs[1][j];
    }
  }
  return out;
}

bool is_unitary(const Matrix2& u, double tol) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // (U^dagger U)_{ij}
      const Complex entry = std::conj(u[0][i]) * u[0][j] + std::conj(u[1][i]) * u[1][j];
      const Complex expected = i == j ? 1.0 : 0.0;
      if (std::abs(entry - expected) > tol) return false;
    }
  }
  return true;
}

}  // namespace gates

PureState::PureState(std::vector<QubitAddress> reg, std::vector<Complex> amplitudes)
    : register_(std::move(reg)), amplitudes_(std::move(amplitudes)) {
  if (register_.size() > 20) {
    throw std::invalid_argument("register too large for dense storage");
  }
  if (amplitudes_.size() != (std::size_t{1} << register_.size())) {
    throw std::invalid_argument("amplitude count does not match register size");
  }
  auto sorted = register_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("register holds a qubit address twice");
  }
}

PureState PureState::basis(std::vector<QubitAddress> reg, std::size_t index) {
  std::vector<Complex> amps(std::size_t{1} << reg.size(), 0.0);
  amps.at(index) = 1.0;
  return PureState(std::move(reg), std::move(amps));
}

std::optional<std::size_t> PureState::position_of(const QubitAddress& addr) const {
  const auto it = std::find(register_.begin(), register_.end(), addr);
  if (it == register_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - register_.begin());
}

std::size_t PureState::require_position(const QubitAddress& addr) const {
  const auto pos = position_of(addr);
  if (!pos) {
    throw std::invalid_argument("qubit " + to_string(addr) + " is not in the register");
  }
  return *pos;
}

bool PureState::contains(PhotonId photon) const {
  return std::any_of(register_.begin(), register_.end(),
                     [photon](const QubitAddress& a) { return a.photon == photon; });
}

double PureState::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

PureState PureState::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  std::vector<Complex> amps = amplitudes_;
  for (Complex& a : amps) a /= norm;
  return PureState(register_, std::move(amps));
}

PureState PureState::permuted(const std::vector<QubitAddress>& order) const {
  if (order.size() != register_.size()) {
    throw std::invalid_argument("permutation has the wrong number of qubits");
  }
  std::vector<std::size_t> source(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) source[k] = require_position(order[k]);
  std::vector<Complex> amps(amplitudes_.size());
  for (std::size_t j = 0; j < amps.size(); ++j) {
    std::size_t i = 0;
    for (std::size_t k = 0; k < source.size(); ++k) {
      if (bit(j, k)) i |= std::size_t{1} << source[k];
    }
    amps[j] = amplitudes_[i];
  }
  return PureState(order, std::move(amps));
}

std::vector<QubitAddress> photon_register(PhotonId photon) {
  return {{photon, DofKind::P}, {photon, DofKind::F}, {photon, DofKind::S}};
}

std::vector<QubitAddress> pair_register(const PhotonPair& pair) {
  auto reg = photon_register(pair.first);
  const auto second = photon_register(pair.second);
  reg.insert(reg.end(), second.begin(), second.end());
  return reg;
}

PureState bell_state(const BellLabel& label, DofKind dof, const PhotonPair& pair) {
  if (pair.first == pair.second) {
    throw std::invalid_argument("a Bell pair needs two distinct photons");
  }
  std::vector<Complex> amps(4, 0.0);
  const double sign = label.phase == Phase::plus ? 1.0 : -1.0;
  // Bit 0 belongs to the first photon.
  if (label.parity == Parity::phi) {
    amps[0b00] = kInvSqrt2;
    amps[0b11] = sign * kInvSqrt2;
  } else {
    amps[0b10] = kInvSqrt2;  // first 0, second 1
    amps[0b01] = sign * kInvSqrt2;
  }
  return PureState({{pair.first, dof}, {pair.second, dof}}, std::move(amps));
}

PureState hyper_bell_state(const HyperBellLabel& label, const PhotonPair& pair) {
  const PureState product =
      tensor(tensor(bell_state(label.p, DofKind::P, pair), bell_state(label.f, DofKind::F, pair)),
             bell_state(label.s, DofKind::S, pair));
  return product.permuted(pair_register(pair));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<QubitAddress> reg = a.qubits();
  reg.insert(reg.end(), b.qubits().begin(), b.qubits().end());
  std::vector<Complex> amps(a.dimension() * b.dimension());
  for (std::size_t j = 0; j < b.dimension(); ++j) {
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      amps[i + j * a.dimension()] = a.amplitudes()[i] * b.amplitudes()[j];
    }
  }
  // The constructor rejects overlapping registers.
  return PureState(std::move(reg), std::move(amps));
}

PureState apply_one_qubit(const PureState& state, const QubitAddress& addr, const Matrix2& u) {
  if (!gates::is_unitary(u)) throw std::invalid_argument("matrix is not unitary");
  const std::size_t pos = state.require_position(addr);
  const std::size_t mask = std::size_t{1} << pos;
  std::vector<Complex> amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) != 0) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | mask];
    amps[i] = u[0][0] * a0 + u[0][1] * a1;
    amps[i | mask] = u[1][0] * a0 + u[1][1] * a1;
  }
  return PureState(state.qubits(), std::move(amps));
}

Complex inner_product(const PureState& a, const PureState& b) {
  const PureState aligned = b.permuted(a.qubits());
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    sum += std::conj(a.amplitudes()[i]) * aligned.amplitudes()[i];
  }
  return sum;
}

double fidelity(const PureState& a, const PureState& b) { return std::norm(inner_product(a, b)); }

PureState normalize_global_phase(const PureState& state) {
  for (const Complex& a : state.amplitudes()) {
    if (std::abs(a) > kTolerance) {
      const Complex rotation = std::abs(a) / a;
      std::vector<Complex> amps = state.amplitudes();
      for (Complex& x : amps) x *= rotation;
      return PureState(state.qubits(), std::move(amps));
    }
  }
  return state;
}

double max_amplitude_distance(const PureState& a, const PureState& b) {
  const PureState aligned = b.permuted(a.qubits());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a.amplitudes()[i] - aligned.amplitudes()[i]));
  }
  return worst;
}

HyperBellAmplitudes decompose_hyper_bell(const PureState& state, const PhotonPair& pair) {
  if (state.num_qubits() != 6) {
    throw std::invalid_argument("hyper-Bell decomposition needs exactly the pair's 6 qubits");
  }
  const PureState aligned = state.permuted(pair_register(pair));
  HyperBellAmplitudes out{};
  for (int k = 0; k < HyperBellLabel::kCount; ++k) {
    out[k] = inner_product(hyper_bell_state(HyperBellLabel::from_index(k), pair), aligned);
  }
  return out;
}

PureState compose_hyper_bell(const HyperBellAmplitudes& coefficients, const PhotonPair& pair) {
  std::vector<Complex> amps(64, 0.0);
  for (int k = 0; k < HyperBellLabel::kCount; ++k) {
    if (coefficients[k] == 0.0) continue;
    const PureState term = hyper_bell_state(HyperBellLabel::from_index(k), pair);
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += coefficients[k] * term.amplitudes()[i];
  }
  return PureState(pair_register(pair), std::move(amps));
}

PureState project_pair(const PureState& state, const PhotonPair& pair,
                       const HyperBellLabel& label) {
  std::vector<QubitAddress> order = pair_register(pair);
  std::vector<QubitAddress> rest;
  for (const QubitAddress& q : state.qubits()) {
    if (q.photon != pair.first && q.photon != pair.second) rest.push_back(q);
  }
  order.insert(order.end(), rest.begin(), rest.end());
  const PureState aligned = state.permuted(order);
  const PureState bra = hyper_bell_state(label, pair);

  std::vector<Complex> amps(std::size_t{1} << rest.size(), 0.0);
  for (std::size_t r = 0; r < amps.size(); ++r) {
    for (std::size_t j = 0; j < 64; ++j) {
      amps[r] += std::conj(bra.amplitudes()[j]) * aligned.amplitudes()[j + 64 * r];
    }
  }
  return PureState(std::move(rest), std::move(amps));
}

PureState extract_factor(const PureState& state, std::span<const PhotonId> photons) {
  std::vector<QubitAddress> order;
  for (PhotonId photon : photons) {
    for (const QubitAddress& q : state.qubits()) {
      if (q.photon == photon) order.push_back(q);
    }
  }
  const std::size_t traced = order.size();
  std::vector<QubitAddress> rest;
  for (const QubitAddress& q : state.qubits()) {
    if (std::find(order.begin(), order.end(), q) == order.end()) rest.push_back(q);
  }
  order.insert(order.end(), rest.begin(), rest.end());
  const PureState aligned = state.permuted(order);

  const std::size_t outer = std::size_t{1} << traced;
  const std::size_t inner = std::size_t{1} << rest.size();
  std::size_t best = 0;
  double best_weight = -1.0;
  for (std::size_t j = 0; j < outer; ++j) {
    double weight = 0.0;
    for (std::size_t r = 0; r < inner; ++r) weight += std::norm(aligned.amplitudes()[j + outer * r]);
    if (weight > best_weight) {
      best_weight = weight;
      best = j;
    }
  }
  std::vector<Complex> amps(inner);
  for (std::size_t r = 0; r < inner; ++r) amps[r] = aligned.amplitudes()[best + outer * r];
  return PureState(std::move(rest), std::move(amps)).normalized();
}

std::string_view to_string(PolOutcome pol) { return pol == PolOutcome::plus ? "+" : "-"; }
std::string_view to_string(FMode mode) { return mode == FMode::E ? "E" : "I"; }
std::string_view to_string(SMode mode) { return mode == SMode::r ? "r" : "l"; }

PhotonMeasurement measure_photon(const PureState& state, PhotonId photon, Rng& rng) {
  const PhotonBits bits = photon_bits(state, photon);
  const std::array<PhotonId, 1> which{photon};
  const PureState rotated = rotate_to_detection_basis(state, which);

  std::array<double, 8> probs{};
  for (std::size_t i = 0; i < rotated.dimension(); ++i) {
    probs[outcome_index(i, bits)] += std::norm(rotated.amplitudes()[i]);
  }
  double total = 0.0;
  for (double p : probs) total += p;
  if (total <= 0.0) throw std::invalid_argument("cannot measure the zero vector");

  std::uniform_real_distribution<double> uniform(0.0, total);
  const double draw = uniform(rng);
  int chosen = -1;
  double cumulative = 0.0;
  for (int k = 0; k < 8; ++k) {
    if (probs[k] <= 0.0) continue;
    chosen = k;
    cumulative += probs[k];
    if (draw < cumulative) break;
  }

  std::vector<Complex> amps = rotated.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (outcome_index(i, bits) != chosen) amps[i] = 0.0;
  }
  PureState projected(rotated.qubits(), std::move(amps));
  projected = apply_one_qubit(projected, {photon, DofKind::P}, gates::hadamard());

  return {PhotonOutcome::from_index(chosen), probs[chosen] / total, projected.normalized()};
}

std::vector<SupportEntry> outcome_support(const PureState& state,
                                          std::span<const PhotonId> photons) {
  std::vector<PhotonBits> bits;
  for (PhotonId photon : photons) bits.push_back(photon_bits(state, photon));
  const PureState rotated = rotate_to_detection_basis(state, photons);

  std::map<std::size_t, double> weights;
  for (std::size_t i = 0; i < rotated.dimension(); ++i) {
    const double w = std::norm(rotated.amplitudes()[i]);
    if (w == 0.0) continue;
    std::size_t key = 0;
    for (const PhotonBits& b : bits) key = key * 8 + static_cast<std::size_t>(outcome_index(i, b));
    weights[key] += w;
  }

  std::vector<SupportEntry> out;
  for (const auto& [key, weight] : weights) {
    if (weight <= kTolerance) continue;
    SupportEntry entry;
    entry.probability = weight;
    entry.outcomes.resize(bits.size());
    std::size_t rem = key;
    for (std::size_t k = bits.size(); k-- > 0;) {
      entry.outcomes[k] = PhotonOutcome::from_index(static_cast<int>(rem % 8));
      rem /= 8;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace hbsa
