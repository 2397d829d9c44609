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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "oracle.hpp"

namespace hbsa {
namespace {

constexpr PhotonPair kAB{PhotonId::A, PhotonId::B};
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInv2Sqrt2 = 0.35355339059327376220;

PureState random_state(std::vector<QubitAddress> reg, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << reg.size());
  for (Complex& a : amps) a = {g(rng), g(rng)};
  return PureState(std::move(reg), std::move(amps)).normalized();
}

Matrix2 random_unitary(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2 * M_PI);
  const double t = u(rng) / 4, a = u(rng), b = u(rng), c = u(rng);
  const Complex ea = std::polar(1.0, a), eb = std::polar(1.0, b), ec = std::polar(1.0, c);
  return {{{ea * std::cos(t), eb * std::sin(t)}, {-std::conj(eb) * ec * std::sin(t), std::conj(ea) * ec * std::cos(t)}}};
}

TEST(BellState, PhiPlusPolarization) {
  const PureState s = bell_state(kPhiPlus, DofKind::P, kAB);
  ASSERT_EQ(s.qubits(), (std::vector<QubitAddress>{{PhotonId::A, DofKind::P}, {PhotonId::B, DofKind::P}}));
  EXPECT_NEAR(std::abs(s.amplitude(0b00) - kInvSqrt2), 0.0, 1e-15);  // HH
  EXPECT_NEAR(std::abs(s.amplitude(0b11) - kInvSqrt2), 0.0, 1e-15);  // VV
  EXPECT_EQ(s.amplitude(0b01), Complex(0.0));
  EXPECT_EQ(s.amplitude(0b10), Complex(0.0));
}

TEST(BellState, PsiMinusSpatialCarriesSignOnLr) {
  const PureState s = bell_state(kPsiMinus, DofKind::S, kAB);
  // bit 0 = A, bit 1 = B; rl = A r, B l.
  EXPECT_NEAR(std::abs(s.amplitude(0b10) - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(0b01) + kInvSqrt2), 0.0, 1e-15);
}

TEST(BellState, NormalizedAndRejectsDuplicatePhoton) {
  const PureState s = bell_state(kPhiPlus, DofKind::F, kAB);
  EXPECT_NEAR(std::abs(inner_product(s, s) - 1.0), 0.0, kTolerance);
  EXPECT_THROW(bell_state(kPhiPlus, DofKind::F, {PhotonId::A, PhotonId::A}), std::invalid_argument);
  EXPECT_THROW(hyper_bell_state({}, {PhotonId::B, PhotonId::B}), std::invalid_argument);
}

TEST(HyperBell, MatchesClosedFormForAllLabels) {
  for (int k = 0; k < HyperBellLabel::kCount; ++k) {
    const HyperBellLabel label = HyperBellLabel::from_index(k);
    const PureState s = hyper_bell_state(label, kAB);
    ASSERT_EQ(s.qubits(), pair_register(kAB));
    const oracle::Vec expected = oracle::hyper_bell(label);
    int nonzero = 0;
    for (std::size_t i = 0; i < 64; ++i) {
      EXPECT_NEAR(std::abs(s.amplitude(i) - expected[i]), 0.0, kTolerance) << to_string(label) << " " << i;
      if (std::abs(s.amplitude(i)) > kTolerance) {
        ++nonzero;
        EXPECT_NEAR(std::abs(s.amplitude(i)), kInv2Sqrt2, kTolerance);
      }
    }
    EXPECT_EQ(nonzero, 8);
  }
}

TEST(HyperBell, AllPlusSupport) {
  const PureState s = hyper_bell_state({kPhiPlus, kPhiPlus, kPhiPlus}, kAB);
  for (std::size_t i = 0; i < 64; ++i) {
    const bool equal = ((i & 7) == (i >> 3));
    EXPECT_NEAR(s.amplitude(i).real(), equal ? kInv2Sqrt2 : 0.0, 1e-15);
    EXPECT_EQ(s.amplitude(i).imag(), 0.0);
  }
}

TEST(HyperBell, PsiOnSecondMomentumSupport) {
  const PureState s = hyper_bell_state({kPhiPlus, kPhiPlus, kPsiPlus}, kAB);
  for (std::size_t i = 0; i < 64; ++i) {
    const std::size_t a = i & 7, b = i >> 3;
    const bool in_support = (a & 3) == (b & 3) && ((a >> 2) != (b >> 2));
    EXPECT_EQ(std::abs(s.amplitude(i)) > 0.1, in_support) << i;
  }
}

TEST(HyperBell, PairwiseOrthogonal) {
  std::vector<PureState> basis;
  for (int k = 0; k < 64; ++k) basis.push_back(hyper_bell_state(HyperBellLabel::from_index(k), kAB));
  int pairs = 0;
  for (int i = 0; i < 64; ++i) {
    EXPECT_NEAR(basis[i].norm_squared(), 1.0, kTolerance);
    for (int j = i + 1; j < 64; ++j) {
      EXPECT_LT(std::abs(inner_product(basis[i], basis[j])), kTolerance);
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 2016);
}

TEST(Tensor, ProductsOfBasisAndBellStates) {
  const PureState a = PureState::basis({{PhotonId::A, DofKind::P}}, 1);
  const PureState b = PureState::basis({{PhotonId::B, DofKind::S}}, 0);
  const PureState ab = tensor(a, b);
  EXPECT_EQ(ab.amplitude(0b01), Complex(1.0));
  EXPECT_NEAR(ab.norm_squared(), 1.0, kTolerance);

  const PureState bb = tensor(bell_state(kPhiPlus, DofKind::P, kAB), bell_state(kPsiMinus, DofKind::F, kAB));
  int nonzero = 0;
  for (const Complex& x : bb.amplitudes()) {
    if (std::abs(x) > kTolerance) {
      ++nonzero;
      EXPECT_NEAR(std::abs(x), 0.5, kTolerance);
    }
  }
  EXPECT_EQ(nonzero, 4);
  EXPECT_NEAR(bb.norm_squared(), 1.0, kTolerance);
}

TEST(Tensor, RejectsOverlap) {
  const PureState s = bell_state(kPhiPlus, DofKind::P, kAB);
  EXPECT_THROW(tensor(s, s), std::invalid_argument);
}

TEST(ApplyOneQubit, IdentityAndInvolution) {
  Rng rng(7);
  const PureState s = random_state(pair_register(kAB), rng);
  EXPECT_LT(max_amplitude_distance(s, apply_one_qubit(s, {PhotonId::B, DofKind::F}, gates::identity())), 1e-15);
  const QubitAddress ap{PhotonId::A, DofKind::P};
  const PureState twice = apply_one_qubit(apply_one_qubit(s, ap, gates::pauli_x()), ap, gates::pauli_x());
  EXPECT_LT(max_amplitude_distance(s, twice), 1e-15);
}

TEST(ApplyOneQubit, HadamardOnFirstPhotonMomentum) {
  const std::vector<QubitAddress> reg{{PhotonId::A, DofKind::F}, {PhotonId::B, DofKind::F}};
  const PureState out = apply_one_qubit(PureState::basis(reg, 0), {PhotonId::A, DofKind::F}, gates::hadamard());
  EXPECT_NEAR(std::abs(out.amplitude(0b00) - kInvSqrt2), 0.0, 1e-15);  // EE
  EXPECT_NEAR(std::abs(out.amplitude(0b01) - kInvSqrt2), 0.0, 1e-15);  // IE
  EXPECT_EQ(out.amplitude(0b10), Complex(0.0));
  EXPECT_EQ(out.amplitude(0b11), Complex(0.0));
}

TEST(ApplyOneQubit, Errors) {
  const PureState s = bell_state(kPhiPlus, DofKind::P, kAB);
  EXPECT_THROW(apply_one_qubit(s, {PhotonId::X, DofKind::P}, gates::hadamard()), std::invalid_argument);
  Matrix2 bad = gates::identity();
  bad[0][0] = 1.0 + 1e-9;
  EXPECT_THROW(apply_one_qubit(s, {PhotonId::A, DofKind::P}, bad), std::invalid_argument);
}

TEST(ApplyOneQubit, RandomUnitariesPreserveNorm) {
  Rng rng(11);
  PureState s = random_state(pair_register(kAB), rng);
  const auto reg = pair_register(kAB);
  for (int k = 0; k < 200; ++k) {
    s = apply_one_qubit(s, reg[static_cast<std::size_t>(k) % reg.size()], random_unitary(rng));
    ASSERT_NEAR(s.norm_squared(), 1.0, kTolerance);
  }
}

TEST(PureState, PermutationRoundTripAndInvariants) {
  Rng rng(3);
  const PureState s = random_state(pair_register(kAB), rng);
  std::vector<QubitAddress> reversed(s.qubits().rbegin(), s.qubits().rend());
  const PureState p = s.permuted(reversed);
  EXPECT_LT(max_amplitude_distance(s, p), 1e-15);
  EXPECT_NEAR(std::abs(inner_product(s, p)), 1.0, kTolerance);
  EXPECT_THROW(PureState({{PhotonId::A, DofKind::P}}, {1.0}), std::invalid_argument);
  EXPECT_THROW(PureState({{PhotonId::A, DofKind::P}, {PhotonId::A, DofKind::P}}, {1.0, 0.0, 0.0, 0.0}),
               std::invalid_argument);
}

TEST(Decompose, BasisAndSuperposition) {
  for (int k = 0; k < 64; ++k) {
    const HyperBellAmplitudes c = decompose_hyper_bell(hyper_bell_state(HyperBellLabel::from_index(k), kAB), kAB);
    for (int j = 0; j < 64; ++j) ASSERT_NEAR(std::abs(c[j] - (j == k ? 1.0 : 0.0)), 0.0, kTolerance);
  }
  const HyperBellLabel l1{kPhiMinus, kPsiPlus, kPhiPlus};
  const HyperBellLabel l2{kPsiMinus, kPhiPlus, kPsiMinus};
  std::vector<Complex> amps(64);
  const PureState s1 = hyper_bell_state(l1, kAB), s2 = hyper_bell_state(l2, kAB);
  for (std::size_t i = 0; i < 64; ++i) amps[i] = (s1.amplitude(i) + s2.amplitude(i)) * kInvSqrt2;
  const HyperBellAmplitudes c = decompose_hyper_bell(PureState(pair_register(kAB), amps), kAB);
  EXPECT_NEAR(std::abs(c[l1.index()] - kInvSqrt2), 0.0, kTolerance);
  EXPECT_NEAR(std::abs(c[l2.index()] - kInvSqrt2), 0.0, kTolerance);
}

TEST(Decompose, ParsevalAndReconstructionAgainstBruteForce) {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState s = random_state(pair_register(kAB), rng);
    const HyperBellAmplitudes c = decompose_hyper_bell(s, kAB);
    double sum = 0.0;
    for (int k = 0; k < 64; ++k) {
      const oracle::Vec basis = oracle::hyper_bell(HyperBellLabel::from_index(k));
      const oracle::Cx brute = oracle::dot(basis, s.amplitudes());
      EXPECT_NEAR(std::abs(c[k] - brute), 0.0, kTolerance);
      sum += std::norm(c[k]);
    }
    EXPECT_NEAR(sum, 1.0, kTolerance);
    EXPECT_LT(max_amplitude_distance(s, compose_hyper_bell(c, kAB)), kTolerance);
  }
}

TEST(Decompose, AcceptsAnyQubitOrderButRejectsWrongRegister) {
  Rng rng(5);
  const PureState s = random_state(pair_register(kAB), rng);
  std::vector<QubitAddress> reversed(s.qubits().rbegin(), s.qubits().rend());
  const auto a = decompose_hyper_bell(s, kAB);
  const auto b = decompose_hyper_bell(s.permuted(reversed), kAB);
  for (int k = 0; k < 64; ++k) EXPECT_NEAR(std::abs(a[k] - b[k]), 0.0, kTolerance);
  EXPECT_THROW(decompose_hyper_bell(bell_state(kPhiPlus, DofKind::P, kAB), kAB), std::invalid_argument);
  EXPECT_THROW(decompose_hyper_bell(s, {PhotonId::A, PhotonId::X}), std::invalid_argument);
}

PureState plus_e_r(PhotonId photon) {
  const PureState pol({{photon, DofKind::P}}, {kInvSqrt2, kInvSqrt2});
  return tensor(tensor(pol, PureState::basis({{photon, DofKind::F}}, 0)), PureState::basis({{photon, DofKind::S}}, 0));
}

TEST(MeasurePhoton, DeterministicProductOutcome) {
  Rng rng(1);
  const PhotonMeasurement m = measure_photon(plus_e_r(PhotonId::A), PhotonId::A, rng);
  EXPECT_EQ(m.outcome, (PhotonOutcome{PolOutcome::plus, FMode::E, SMode::r}));
  EXPECT_NEAR(m.probability, 1.0, kTolerance);
  EXPECT_NEAR(m.post.norm_squared(), 1.0, kTolerance);
  EXPECT_THROW(measure_photon(plus_e_r(PhotonId::A), PhotonId::B, rng), std::invalid_argument);
}

PureState phi_plus_pol_with_fixed_momenta() {
  PureState s = bell_state(kPhiPlus, DofKind::P, kAB);
  for (PhotonId p : {PhotonId::A, PhotonId::B}) {
    s = tensor(s, PureState::basis({{p, DofKind::F}}, 1));
    s = tensor(s, PureState::basis({{p, DofKind::S}}, 0));
  }
  return s;
}

TEST(MeasurePhoton, PhiPlusPolarizationIsUnbiasedInPlusMinusBasis) {
  const PureState s = phi_plus_pol_with_fixed_momenta();
  // phi+ = (|++> + |-->)/sqrt2 so A alone reads + or - with 1/2 each.
  const std::array<PhotonId, 1> a{PhotonId::A};
  const auto support = outcome_support(s, a);
  ASSERT_EQ(support.size(), 2u);
  for (const auto& e : support) EXPECT_NEAR(e.probability, 0.5, kTolerance);
  EXPECT_EQ(support[0].outcomes[0], (PhotonOutcome{PolOutcome::plus, FMode::I, SMode::r}));
  EXPECT_EQ(support[1].outcomes[0], (PhotonOutcome{PolOutcome::minus, FMode::I, SMode::r}));

  Rng rng(99);
  const PhotonMeasurement m = measure_photon(s, PhotonId::A, rng);
  EXPECT_NEAR(m.probability, 0.5, kTolerance);
  // Collapse: B now reads the same sign with certainty.
  const std::array<PhotonId, 1> b{PhotonId::B};
  const auto after = outcome_support(m.post, b);
  ASSERT_EQ(after.size(), 1u);
  EXPECT_EQ(after[0].outcomes[0].pol, m.outcome.pol);
}

TEST(OutcomeSupport, BasisKetAndCompleteness) {
  const std::array<PhotonId, 2> ab{PhotonId::A, PhotonId::B};
  const PureState ket = PureState::basis(pair_register(kAB), 0b010'100);
  // A: P=H, F=E, S=l; B: P=H, F=I, S=r. H reads + or - in the detection basis.
  const auto support = outcome_support(ket, ab);
  EXPECT_EQ(support.size(), 4u);

  Rng rng(4);
  const PureState s = random_state(pair_register(kAB), rng);
  double total = 0.0;
  for (const auto& e : outcome_support(s, ab)) total += e.probability;
  EXPECT_NEAR(total, 1.0, 1e-10);

  const PureState plus = tensor(plus_e_r(PhotonId::A), plus_e_r(PhotonId::B));
  const auto single = outcome_support(plus, ab);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_NEAR(single[0].probability, 1.0, kTolerance);
}

TEST(OutcomeSupport, SamplingAgreesWithinFiveSigma) {
  Rng state_rng(17);
  const PureState s = random_state(pair_register(kAB), state_rng);
  const std::array<PhotonId, 1> a{PhotonId::A};
  const auto support = outcome_support(s, a);
  constexpr int kSamples = 20000;
  std::map<int, int> counts;
  Rng rng(18);
  for (int i = 0; i < kSamples; ++i) ++counts[measure_photon(s, PhotonId::A, rng).outcome.index()];
  for (const auto& e : support) {
    const double p = e.probability;
    const double observed = counts[e.outcomes[0].index()] / static_cast<double>(kSamples);
    EXPECT_LE(std::abs(observed - p), 5.0 * std::sqrt(p * (1 - p) / kSamples)) << e.outcomes[0].index();
  }
}

TEST(ProjectPair, EqualWeightsOfProductWithChannel) {
  // Projecting (X (x) channel on A,B) onto any label of (X, A) leaves 1/64.
  Rng rng(8);
  const PureState x = random_state(photon_register(PhotonId::X), rng);
  const PureState joint = tensor(x, hyper_bell_state({}, kAB));
  for (int k = 0; k < 64; ++k) {
    const PureState rest = project_pair(joint, {PhotonId::X, PhotonId::A}, HyperBellLabel::from_index(k));
    EXPECT_EQ(rest.qubits(), photon_register(PhotonId::B));
    EXPECT_NEAR(rest.norm_squared(), 1.0 / 64.0, kTolerance);
  }
}

TEST(GlobalPhase, NormalizationMakesFirstAmplitudePositive) {
  const PureState s({{PhotonId::A, DofKind::P}}, {Complex(0.0, -0.6), Complex(0.8, 0.0)});
  const PureState n = normalize_global_phase(s);
  EXPECT_NEAR(n.amplitude(0).real(), 0.6, 1e-15);
  EXPECT_NEAR(n.amplitude(0).imag(), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(n.amplitude(1) - Complex(0.0, 0.8)), 0.0, 1e-15);
  EXPECT_NEAR(fidelity(s, n), 1.0, kTolerance);
}

}  // namespace
}  // namespace hbsa
