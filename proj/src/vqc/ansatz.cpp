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

#include "vqc/ansatz.hpp"

#include "common/error.hpp"

namespace qqc::vqc {

namespace {
constexpr std::string_view kModule = "vqc";
}

void AnsatzSpec::validate() const {
  require(n_qubits >= 1 && n_qubits <= sim::kMaxQubits, ErrorCode::kCapacity, kModule,
          "ansatz qubit count " + std::to_string(n_qubits) + " out of range");
  require(reps >= 1, ErrorCode::kInvalidArgument, kModule,
          "ansatz reps must be >= 1, got " + std::to_string(reps));
  require(!rotation_gates.empty(), ErrorCode::kInvalidArgument, kModule,
          "ansatz needs at least one rotation gate");
  for (auto g : rotation_gates)
    require(g == sim::GateKind::RX || g == sim::GateKind::RY || g == sim::GateKind::RZ,
            ErrorCode::kInvalidArgument, kModule,
            "rotation gate '" + std::string(sim::gate_kind_name(g)) +
                "' not in {rx, ry, rz}");
  require(entangle_gate == sim::GateKind::CZ || entangle_gate == sim::GateKind::CX,
          ErrorCode::kInvalidArgument, kModule,
          "entangling gate '" + std::string(sim::gate_kind_name(entangle_gate)) +
              "' not in {cz, cx}");
}

std::size_t AnsatzSpec::parameter_count() const {
  return static_cast<std::size_t>(n_qubits) * rotation_gates.size() *
         static_cast<std::size_t>(reps + 1);
}

std::string AnsatzSpec::canonical() const {
  std::string s = "two_local;n=" + std::to_string(n_qubits) + ";rot=";
  for (std::size_t i = 0; i < rotation_gates.size(); ++i) {
    if (i) s += ',';
    s += sim::gate_kind_name(rotation_gates[i]);
  }
  s += ";ent_gate=" + std::string(sim::gate_kind_name(entangle_gate));
  s += ";ent=" + std::string(encoding::entanglement_name(entanglement));
  s += ";reps=" + std::to_string(reps);
  return s;
}

sim::ParameterizedCircuit build_two_local(const AnsatzSpec& spec) {
  spec.validate();
  const int n = spec.n_qubits;
  sim::ParameterizedCircuit c(n);
  std::vector<std::pair<int, int>> pairs;
  if (n >= 2) pairs = encoding::entangler_pairs(n, spec.entanglement);

  std::size_t next = 0;
  auto rotation_layer = [&] {
    for (auto kind : spec.rotation_gates) {
      for (int q = 0; q < n; ++q) {
        const std::string name = "t" + std::to_string(next++);
        c.add_parameter(name);
        c.add_affine(sim::Gate::single(kind, q), name);
      }
    }
  };
  for (int r = 0; r < spec.reps; ++r) {
    rotation_layer();
    for (auto [a, b] : pairs) c.add(sim::Gate::two(spec.entangle_gate, a, b));
  }
  rotation_layer();
  return c;
}

}  // namespace qqc::vqc
