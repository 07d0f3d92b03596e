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

#include "vqc/spec_json.hpp"

#include "common/error.hpp"

namespace qqc {

namespace {

constexpr std::string_view kModule = "experiment-harness";

using nlohmann::json;

const json& field(const json& j, const char* key, std::string_view owner) {
  require(j.is_object(), ErrorCode::kParse, kModule, std::string(owner) + " must be an object");
  const auto it = j.find(key);
  require(it != j.end(), ErrorCode::kParse, kModule,
          std::string(owner) + " is missing \"" + key + "\"");
  return *it;
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, kModule, std::string("field \"") + key + "\": " + e.what());
  }
}

encoding::Entanglement entanglement_of(const json& j, const char* key) {
  const auto name = get_or<std::string>(j, key, "full");
  const auto e = encoding::parse_entanglement(name);
  require(e.has_value(), ErrorCode::kParse, kModule,
          "unknown entanglement '" + name + "' (expected full or linear)");
  return *e;
}

sim::GateKind gate_of(const std::string& name) {
  const auto k = sim::parse_gate_kind(name);
  require(k.has_value(), ErrorCode::kParse, kModule, "unknown gate '" + name + "'");
  return *k;
}

}  // namespace

json feature_map_to_json(const encoding::FeatureMapSpec& spec) {
  return json{{"n_features", spec.n_features},
              {"pauli_strings", spec.pauli_strings},
              {"entanglement", std::string(encoding::entanglement_name(spec.entanglement))},
              {"reps", spec.reps},
              {"include_hadamard", spec.include_hadamard}};
}

encoding::FeatureMapSpec feature_map_from_json(const json& j) {
  encoding::FeatureMapSpec s;
  s.n_features = field(j, "n_features", "feature_map").get<int>();
  s.pauli_strings = get_or<std::vector<std::string>>(j, "pauli_strings", s.pauli_strings);
  s.entanglement = entanglement_of(j, "entanglement");
  s.reps = get_or<int>(j, "reps", 1);
  s.include_hadamard = get_or<bool>(j, "include_hadamard", true);
  s.validate();
  return s;
}

json ansatz_to_json(const vqc::AnsatzSpec& spec) {
  std::vector<std::string> rot;
  for (auto g : spec.rotation_gates) rot.emplace_back(sim::gate_kind_name(g));
  return json{{"n_qubits", spec.n_qubits},
              {"rotation_gates", rot},
              {"entangle_gate", std::string(sim::gate_kind_name(spec.entangle_gate))},
              {"entanglement", std::string(encoding::entanglement_name(spec.entanglement))},
              {"reps", spec.reps}};
}

vqc::AnsatzSpec ansatz_from_json(const json& j) {
  vqc::AnsatzSpec s;
  s.n_qubits = field(j, "n_qubits", "ansatz").get<int>();
  s.rotation_gates.clear();
  for (const auto& name :
       get_or<std::vector<std::string>>(j, "rotation_gates", {"ry", "rz"}))
    s.rotation_gates.push_back(gate_of(name));
  s.entangle_gate = gate_of(get_or<std::string>(j, "entangle_gate", "cz"));
  s.entanglement = entanglement_of(j, "entanglement");
  s.reps = get_or<int>(j, "reps", 1);
  s.validate();
  return s;
}

json optimizer_to_json(const vqc::OptimizerConfig& c) {
  return json{{"max_iterations", c.max_iterations},
              {"rhobeg", c.rhobeg},
              {"rhoend", c.rhoend},
              {"seed", c.seed},
              {"shots", c.shots}};
}

vqc::OptimizerConfig optimizer_from_json(const json& j) {
  require(j.is_object(), ErrorCode::kParse, kModule, "optimizer must be an object");
  vqc::OptimizerConfig c;
  c.max_iterations = get_or<int>(j, "max_iterations", c.max_iterations);
  c.rhobeg = get_or<double>(j, "rhobeg", c.rhobeg);
  c.rhoend = get_or<double>(j, "rhoend", c.rhoend);
  c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
  c.shots = get_or<std::uint64_t>(j, "shots", c.shots);
  c.validate();
  return c;
}

}  // namespace qqc
