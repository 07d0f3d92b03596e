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

#ifndef QQC_SIM_GATE_HPP
#define QQC_SIM_GATE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sim/statevector.hpp"

namespace qqc::sim {

// Conventions:
//   RX(t) = exp(-i t X / 2), RY and RZ likewise.
//   Phase(t) = diag(1, e^{it}).
//   PauliRotation(P, t) = exp(+i t P), P a tensor product of X/Y/Z letters with
//   letter k acting on targets[k].
//   CX targets = {control, target}; CZ is symmetric.
enum class GateKind { H, X, Y, Z, RX, RY, RZ, Phase, CX, CZ, PauliRotation };

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> targets;
  double angle = 0.0;
  std::vector<Pauli> paulis;  // PauliRotation only

  bool operator==(const Gate&) const = default;

  static Gate single(GateKind kind, int q, double angle = 0.0) {
    return Gate{kind, {q}, angle, {}};
  }
  static Gate two(GateKind kind, int a, int b) { return Gate{kind, {a, b}, 0.0, {}}; }
  static Gate pauli_rotation(std::vector<Pauli> word, std::vector<int> qubits,
                             double angle) {
    return Gate{GateKind::PauliRotation, std::move(qubits), angle, std::move(word)};
  }
};

bool is_parameterized(GateKind kind);

std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

std::vector<Pauli> parse_pauli_word(std::string_view word);
std::string pauli_word_string(const std::vector<Pauli>& word);

/// Throws kInvalidArgument / kDimension on malformed gates for n_qubits.
void validate_gate(const Gate& gate, int n_qubits);

/// In-place application; validates first.
void apply_gate_inplace(Statevector& state, const Gate& gate);

Statevector apply_gate(const Statevector& state, const Gate& gate);

/// Adjoint gate: self-inverse kinds are returned unchanged, angles negated
/// otherwise.
Gate inverse_gate(const Gate& gate);

}  // namespace qqc::sim

#endif  // QQC_SIM_GATE_HPP
