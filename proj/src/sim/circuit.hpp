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

#ifndef QQC_SIM_CIRCUIT_HPP
#define QQC_SIM_CIRCUIT_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sim/gate.hpp"
#include "sim/statevector.hpp"

namespace qqc::sim {

using Binding = std::map<std::string, double>;

/// Angle of a parameterized gate as a function of the circuit's symbols.
///   constant:  offset
///   affine:    scale * s0 + offset
///   product:   scale * prod_k (shift - s_k) + offset   (two or more symbols)
/// Symbols are stored as indices into the owning circuit's parameter list.
struct AngleExpr {
  enum class Kind { kConstant, kAffine, kProduct };

  Kind kind = Kind::kConstant;
  std::vector<std::size_t> symbols;
  double scale = 1.0;
  double offset = 0.0;
  double shift = 0.0;

  double evaluate(std::span<const double> values) const;

  bool operator==(const AngleExpr&) const = default;
};

struct CircuitOp {
  Gate gate;                       // gate.angle holds the constant, if any
  std::optional<AngleExpr> angle;  // set when the angle depends on symbols

  bool operator==(const CircuitOp&) const = default;
};

/// Ordered gate list over named real parameters.
class ParameterizedCircuit {
 public:
  explicit ParameterizedCircuit(int n_qubits);

  int num_qubits() const noexcept { return n_qubits_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }
  const std::vector<CircuitOp>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }

  /// Registers a symbol and returns its index; duplicates are rejected.
  std::size_t add_parameter(const std::string& name);
  std::optional<std::size_t> parameter_index(const std::string& name) const;

  /// Gate with a fixed angle (or no angle).
  void add(Gate gate);

  /// Parameterized gate. Every symbol in expr must already be registered.
  void add(Gate gate, AngleExpr expr);

  /// Convenience: angle = scale * symbol + offset.
  void add_affine(Gate gate, const std::string& symbol, double scale = 1.0,
                  double offset = 0.0);

  /// Appends `other`'s gates; its parameters are merged by name.
  void append(const ParameterizedCircuit& other);

  /// Reversed gate list with negated angles (U^dagger).
  ParameterizedCircuit inverse() const;

  /// Concrete gates for parameter values in parameters() order.
  std::vector<Gate> bind(std::span<const double> values) const;

  /// Values in parameters() order from a name map; throws kUnboundSymbol.
  std::vector<double> resolve(const Binding& binding) const;

  bool operator==(const ParameterizedCircuit&) const = default;

 private:
  int n_qubits_;
  std::vector<std::string> parameters_;
  std::vector<CircuitOp> ops_;
};

/// Applies the circuit to `state` with values in parameters() order.
Statevector apply_circuit(const ParameterizedCircuit& circuit,
                          std::span<const double> values, Statevector state);

Statevector apply_circuit(const ParameterizedCircuit& circuit,
                          const Binding& binding, Statevector state);

/// As-soon-as-possible layering: a gate lands on layer
/// 1 + max(layer of earlier gates sharing a qubit); depth is the top layer.
int circuit_depth(const ParameterizedCircuit& circuit);
int circuit_depth(std::span<const Gate> gates, int n_qubits);

}  // namespace qqc::sim

#endif  // QQC_SIM_CIRCUIT_HPP
