// Copyright 2026 The QQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <numbers>

#include "common/error.hpp"
#include "common/rng.hpp"
#include "oracle.hpp"
#include "sim/circuit.hpp"
#include "sim/gate.hpp"
#include "sim/statevector.hpp"

namespace qqc::sim {
namespace {

using testing::all_gates;
using testing::random_state;

TEST(Statevector, StartsInAllZeros) {
  Statevector s(3);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s.amplitudes()[0], Complex(1.0, 0.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(Statevector, RejectsBadSizes) {
  EXPECT_THROW(Statevector(0), Error);
  EXPECT_THROW(Statevector(kMaxQubits + 1), Error);
  EXPECT_THROW(Statevector::from_amplitudes({1.0, 0.0, 0.0}), Error);
  EXPECT_THROW(Statevector::from_amplitudes({1.0, 1.0}), Error);
}

TEST(Statevector, OutcomeStringPutsHighQubitFirst) {
  EXPECT_EQ(outcome_string(1, 3), "001");
  EXPECT_EQ(outcome_string(4, 3), "100");
  EXPECT_EQ(outcome_string(6, 3), "110");
}

TEST(Gates, MatchDenseOracleUpToThreeQubits) {
  Rng rng(11);
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (double angle : {0.0, 0.3, -1.7, std::numbers::pi, 2.9}) {
      for (const auto& g : all_gates(n, angle)) {
        const auto psi = random_state(n, rng);
        const auto got = apply_gate(psi, g);
        const auto want = testing::mat_vec(testing::full_matrix(g, n), psi.amplitudes());
        for (std::size_t i = 0; i < want.size(); ++i)
          worst = std::max(worst, std::abs(got.amplitudes()[i] - want[i]));
      }
    }
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Gates, BellStateFromHadamardAndCx) {
  Statevector s(2);
  apply_gate_inplace(s, Gate::single(GateKind::H, 0));
  apply_gate_inplace(s, Gate::two(GateKind::CX, 0, 1));
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(s.amplitudes()[0].real(), r, 1e-15);
  EXPECT_NEAR(s.amplitudes()[3].real(), r, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitudes()[1]), 0.0, 1e-15);
}

TEST(Gates, InverseUndoesEveryGate) {
  Rng rng(5);
  for (const auto& g : all_gates(3, 0.77)) {
    const auto psi = random_state(3, rng);
    const auto back = apply_gate(apply_gate(psi, g), inverse_gate(g));
    for (std::size_t i = 0; i < psi.dimension(); ++i)
      EXPECT_NEAR(std::abs(back.amplitudes()[i] - psi.amplitudes()[i]), 0.0, 1e-12);
  }
}

TEST(Gates, ValidationErrors) {
  Statevector s(2);
  EXPECT_THROW(apply_gate_inplace(s, Gate::single(GateKind::H, 2)), Error);
  EXPECT_THROW(apply_gate_inplace(s, Gate::two(GateKind::CX, 1, 1)), Error);
  EXPECT_THROW(apply_gate_inplace(s, Gate::pauli_rotation({Pauli::Z}, {0, 1}, 0.1)), Error);
  EXPECT_THROW(parse_pauli_word("XQ"), Error);
  EXPECT_THROW(parse_pauli_word(""), Error);
}

TEST(Gates, RandomCircuitsPreserveNorm) {
  Rng rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const auto pool = all_gates(n, rng.uniform(-4.0, 4.0));
    Statevector s(n);
    for (int g = 0; g < 30; ++g) apply_gate_inplace(s, pool[rng.below(pool.size())]);
    worst = std::max(worst, std::abs(s.norm_squared() - 1.0));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Sampling, CountsSumToShotsAndFollowProbabilities) {
  Statevector s(2);
  apply_gate_inplace(s, Gate::single(GateKind::RY, 0, 2.0 * std::acos(std::sqrt(0.3))));
  const auto counts = sample_counts(s, 200000, 9);
  EXPECT_EQ(counts.shots, 200000u);
  std::uint64_t total = 0;
  for (const auto& [k, v] : counts.counts) total += v;
  EXPECT_EQ(total, 200000u);
  EXPECT_NEAR(counts.count("00") / 200000.0, 0.3, 0.005);
  EXPECT_NEAR(counts.count("01") / 200000.0, 0.7, 0.005);
  EXPECT_EQ(counts.count("10"), 0u);
}

TEST(Sampling, SameSeedSameCounts) {
  Statevector s(3);
  for (int q = 0; q < 3; ++q) apply_gate_inplace(s, Gate::single(GateKind::H, q));
  EXPECT_EQ(sample_index_counts(s, 1000, 4), sample_index_counts(s, 1000, 4));
  EXPECT_NE(sample_index_counts(s, 1000, 4), sample_index_counts(s, 1000, 5));
}

TEST(Circuit, BindsSymbolsAndRejectsUnbound) {
  ParameterizedCircuit c(2);
  c.add_parameter("a");
  c.add_parameter("b");
  c.add(Gate::single(GateKind::H, 0));
  c.add_affine(Gate::single(GateKind::RZ, 0), "a", 2.0, 0.5);
  AngleExpr prod;
  prod.kind = AngleExpr::Kind::kProduct;
  prod.symbols = {0, 1};
  prod.shift = std::numbers::pi;
  c.add(Gate::pauli_rotation(parse_pauli_word("ZZ"), {0, 1}, 0.0), prod);
  const std::vector<double> v = {0.3, 1.1};
  const auto gates = c.bind(v);
  ASSERT_EQ(gates.size(), 3u);
  EXPECT_DOUBLE_EQ(gates[1].angle, 2.0 * 0.3 + 0.5);
  EXPECT_DOUBLE_EQ(gates[2].angle, (std::numbers::pi - 0.3) * (std::numbers::pi - 1.1));
  EXPECT_EQ(c.resolve(Binding{{"a", 0.3}, {"b", 1.1}}), v);
  try {
    c.resolve(Binding{{"a", 0.3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnboundSymbol);
  }
  EXPECT_THROW(c.add_parameter("a"), Error);
  EXPECT_THROW(c.add_affine(Gate::single(GateKind::RX, 1), "missing"), Error);
}

TEST(Circuit, InverseRestoresState) {
  ParameterizedCircuit c(3);
  c.add_parameter("p");
  c.add(Gate::single(GateKind::H, 0));
  c.add_affine(Gate::single(GateKind::RY, 1), "p", 1.5, 0.2);
  c.add(Gate::two(GateKind::CX, 0, 2));
  c.add_affine(Gate::pauli_rotation(parse_pauli_word("XY"), {1, 2}, 0.0), "p", -0.7);
  c.add(Gate::single(GateKind::Phase, 2, 0.4));
  const std::vector<double> v = {0.9};
  auto s = apply_circuit(c, v, Statevector(3));
  s = apply_circuit(c.inverse(), v, std::move(s));
  EXPECT_NEAR(std::abs(s.amplitudes()[0]), 1.0, 1e-12);
}

TEST(Circuit, AppendMergesParametersByName) {
  ParameterizedCircuit a(2), b(2);
  a.add_parameter("x");
  a.add_affine(Gate::single(GateKind::RX, 0), "x");
  b.add_parameter("x");
  b.add_parameter("y");
  b.add_affine(Gate::single(GateKind::RY, 1), "y");
  b.add_affine(Gate::single(GateKind::RZ, 0), "x");
  a.append(b);
  EXPECT_EQ(a.parameters(), (std::vector<std::string>{"x", "y"}));
  const std::vector<double> v = {0.1, 0.2};
  const auto g = a.bind(v);
  EXPECT_DOUBLE_EQ(g[1].angle, 0.2);
  EXPECT_DOUBLE_EQ(g[2].angle, 0.1);
}

TEST(Circuit, DepthUsesAsapLayering) {
  ParameterizedCircuit c(3);
  EXPECT_EQ(circuit_depth(c), 0);
  c.add(Gate::single(GateKind::H, 0));
  c.add(Gate::single(GateKind::H, 1));
  c.add(Gate::single(GateKind::H, 2));
  EXPECT_EQ(circuit_depth(c), 1);
  c.add(Gate::two(GateKind::CZ, 0, 1));
  c.add(Gate::single(GateKind::X, 2));
  EXPECT_EQ(circuit_depth(c), 2);
  c.add(Gate::two(GateKind::CZ, 1, 2));
  c.add(Gate::single(GateKind::X, 0));
  EXPECT_EQ(circuit_depth(c), 3);
  c.add(Gate::pauli_rotation(parse_pauli_word("ZZZ"), {0, 1, 2}, 0.1));
  EXPECT_EQ(circuit_depth(c), 4);
}

}  // namespace
}  // namespace qqc::sim
