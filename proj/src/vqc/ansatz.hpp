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

#ifndef QQC_VQC_ANSATZ_HPP
#define QQC_VQC_ANSATZ_HPP

#include <string>
#include <vector>

#include "encoding/feature_map.hpp"
#include "sim/circuit.hpp"

namespace qqc::vqc {

/// TwoLocal: `reps` blocks of (rotation layer, entangling layer) followed by
/// a final rotation layer. A 1-qubit ansatz has no entangling layers.
struct AnsatzSpec {
  int n_qubits = 2;
  std::vector<sim::GateKind> rotation_gates = {sim::GateKind::RY, sim::GateKind::RZ};
  sim::GateKind entangle_gate = sim::GateKind::CZ;
  encoding::Entanglement entanglement = encoding::Entanglement::kFull;
  int reps = 1;

  void validate() const;
  std::size_t parameter_count() const;
  std::string canonical() const;

  bool operator==(const AnsatzSpec&) const = default;
};

/// Parameters are t0..t{P-1} in gate order.
sim::ParameterizedCircuit build_two_local(const AnsatzSpec& spec);

}  // namespace qqc::vqc

#endif  // QQC_VQC_ANSATZ_HPP
