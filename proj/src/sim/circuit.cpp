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

#include "sim/circuit.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace qqc::sim {

namespace {
constexpr std::string_view kModule = "circuit-sim";
}

double AngleExpr::evaluate(std::span<const double> values) const {
  switch (kind) {
    case Kind::kConstant:
      return offset;
    case Kind::kAffine:
      return scale * values[symbols[0]] + offset;
    case Kind::kProduct: {
      double p = 1.0;
      for (std::size_t s : symbols) p *= shift - values[s];
      return scale * p + offset;
    }
  }
  return offset;
}

ParameterizedCircuit::ParameterizedCircuit(int n_qubits) : n_qubits_(n_qubits) {
  require(n_qubits >= 1 && n_qubits <= kMaxQubits, ErrorCode::kCapacity, kModule,
          "circuit qubit count " + std::to_string(n_qubits) + " outside [1, " +
              std::to_string(kMaxQubits) + "]");
}

std::size_t ParameterizedCircuit::add_parameter(const std::string& name) {
  require(!name.empty(), ErrorCode::kInvalidArgument, kModule, "empty parameter name");
  require(!parameter_index(name).has_value(), ErrorCode::kInvalidArgument, kModule,
          "duplicate parameter '" + name + "'");
  parameters_.push_back(name);
  return parameters_.size() - 1;
}

std::optional<std::size_t> ParameterizedCircuit::parameter_index(
    const std::string& name) const {
  const auto it = std::find(parameters_.begin(), parameters_.end(), name);
  if (it == parameters_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - parameters_.begin());
}

void ParameterizedCircuit::add(Gate gate) {
  validate_gate(gate, n_qubits_);
  ops_.push_back({std::move(gate), std::nullopt});
}

void ParameterizedCircuit::add(Gate gate, AngleExpr expr) {
  validate_gate(gate, n_qubits_);
  require(is_parameterized(gate.kind), ErrorCode::kInvalidArgument, kModule,
          std::string(gate_kind_name(gate.kind)) + " takes no angle");
  const std::size_t need =
      expr.kind == AngleExpr::Kind::kConstant ? 0
      : expr.kind == AngleExpr::Kind::kAffine ? 1
                                              : 2;
  require(expr.symbols.size() >= need &&
              (expr.kind != AngleExpr::Kind::kAffine || expr.symbols.size() == 1),
          ErrorCode::kInvalidArgument, kModule, "angle expression has wrong arity");
  for (std::size_t s : expr.symbols)
    require(s < parameters_.size(), ErrorCode::kUnboundSymbol, kModule,
            "angle references unregistered symbol index " + std::to_string(s));
  ops_.push_back({std::move(gate), std::move(expr)});
}

void ParameterizedCircuit::add_affine(Gate gate, const std::string& symbol,
                                      double scale, double offset) {
  const auto idx = parameter_index(symbol);
  require(idx.has_value(), ErrorCode::kUnboundSymbol, kModule,
          "symbol '" + symbol + "' is not a circuit parameter");
  add(std::move(gate), AngleExpr{AngleExpr::Kind::kAffine, {*idx}, scale, offset, 0.0});
}

void ParameterizedCircuit::append(const ParameterizedCircuit& other) {
  require(other.n_qubits_ == n_qubits_, ErrorCode::kDimension, kModule,
          "cannot append a " + std::to_string(other.n_qubits_) + "-qubit circuit to a " +
              std::to_string(n_qubits_) + "-qubit circuit");
  std::vector<std::size_t> remap(other.parameters_.size());
  for (std::size_t i = 0; i < other.parameters_.size(); ++i) {
    const auto existing = parameter_index(other.parameters_[i]);
    remap[i] = existing ? *existing : add_parameter(other.parameters_[i]);
  }
  for (const auto& op : other.ops_) {
    CircuitOp copy = op;
    if (copy.angle)
      for (auto& s : copy.angle->symbols) s = remap[s];
    ops_.push_back(std::move(copy));
  }
}

ParameterizedCircuit ParameterizedCircuit::inverse() const {
  ParameterizedCircuit inv(n_qubits_);
  inv.parameters_ = parameters_;
  inv.ops_.reserve(ops_.size());
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    CircuitOp op = *it;
    op.gate = inverse_gate(op.gate);
    if (op.angle) {
      op.angle->scale = -op.angle->scale;
      op.angle->offset = -op.angle->offset;
    }
    inv.ops_.push_back(std::move(op));
  }
  return inv;
}

std::vector<Gate> ParameterizedCircuit::bind(std::span<const double> values) const {
  require(values.size() == parameters_.size(), ErrorCode::kUnboundSymbol, kModule,
          "expected " + std::to_string(parameters_.size()) + " parameter values, got " +
              std::to_string(values.size()));
  std::vector<Gate> gates;
  gates.reserve(ops_.size());
  for (const auto& op : ops_) {
    Gate g = op.gate;
    if (op.angle) g.angle = op.angle->evaluate(values);
    gates.push_back(std::move(g));
  }
  return gates;
}

std::vector<double> ParameterizedCircuit::resolve(const Binding& binding) const {
  std::vector<double> values(parameters_.size());
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    const auto it = binding.find(parameters_[i]);
    require(it != binding.end(), ErrorCode::kUnboundSymbol, kModule,
            "symbol '" + parameters_[i] + "' is unbound");
    values[i] = it->second;
  }
  return values;
}

Statevector apply_circuit(const ParameterizedCircuit& circuit,
                          std::span<const double> values, Statevector state) {
  require(state.num_qubits() == circuit.num_qubits(), ErrorCode::kDimension, kModule,
          "circuit has " + std::to_string(circuit.num_qubits()) +
              " qubits but state has " + std::to_string(state.num_qubits()));
  require(values.size() == circuit.parameters().size(), ErrorCode::kUnboundSymbol,
          kModule,
          "expected " + std::to_string(circuit.parameters().size()) +
              " parameter values, got " + std::to_string(values.size()));
  for (const auto& op : circuit.ops()) {
    if (op.angle) {
      Gate g = op.gate;
      g.angle = op.angle->evaluate(values);
      apply_gate_inplace(state, g);
    } else {
      apply_gate_inplace(state, op.gate);
    }
  }
  return state;
}

Statevector apply_circuit(const ParameterizedCircuit& circuit, const Binding& binding,
                          Statevector state) {
  const auto values = circuit.resolve(binding);
  return apply_circuit(circuit, values, std::move(state));
}

int circuit_depth(std::span<const Gate> gates, int n_qubits) {
  std::vector<int> level(static_cast<std::size_t>(n_qubits), 0);
  int depth = 0;
  for (const auto& g : gates) {
    int top = 0;
    for (int q : g.targets) top = std::max(top, level[static_cast<std::size_t>(q)]);
    ++top;
    for (int q : g.targets) level[static_cast<std::size_t>(q)] = top;
    depth = std::max(depth, top);
  }
  return depth;
}

int circuit_depth(const ParameterizedCircuit& circuit) {
  std::vector<Gate> gates;
  gates.reserve(circuit.size());
  for (const auto& op : circuit.ops()) gates.push_back(op.gate);
  return circuit_depth(gates, circuit.num_qubits());
}

}  // namespace qqc::sim
