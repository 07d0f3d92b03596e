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

#ifndef QQC_ENCODING_FEATURE_MAP_HPP
#define QQC_ENCODING_FEATURE_MAP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "common/matrix.hpp"
#include "sim/circuit.hpp"
#include "sim/statevector.hpp"

namespace qqc::encoding {

enum class Entanglement { kFull, kLinear };

std::string_view entanglement_name(Entanglement e);
std::optional<Entanglement> parse_entanglement(std::string_view name);

/// Pauli feature map: per repetition an optional Hadamard layer, then one
/// block per Pauli word. A k-letter word rotates every selected k-subset S by
/// exp(i Phi_S(x) P), with Phi_{j} = x_j and Phi_S = prod_{s in S} (pi - x_s).
struct FeatureMapSpec {
  int n_features = 2;
  std::vector<std::string> pauli_strings = {"X", "Y", "ZZ"};
  Entanglement entanglement = Entanglement::kFull;
  int reps = 1;
  bool include_hadamard = true;

  void validate() const;

  /// Stable text form, also the input of hash().
  std::string canonical() const;
  std::uint64_t hash() const;

  static FeatureMapSpec z_map(int n, int reps = 1);
  static FeatureMapSpec zz_map(int n, int reps = 1,
                               Entanglement e = Entanglement::kFull);
  static FeatureMapSpec pauli_map(int n, int reps = 1,
                                  Entanglement e = Entanglement::kFull);

  bool operator==(const FeatureMapSpec&) const = default;
};

struct ScalingParams {
  std::vector<double> min;
  std::vector<double> max;
};

struct Rescaled {
  Matrix x;
  ScalingParams params;
};

/// Column-wise affine map onto [0, pi/2]; constant columns map to 0.
Rescaled rescale_features(const Matrix& raw);

/// Same transform with stored parameters, clamped to [0, pi/2].
Matrix apply_scaling(const Matrix& raw, const ScalingParams& params);

/// Product state (x) [cos x_n, sin x_n]; x_0 on qubit 0.
sim::Statevector angle_encode(std::span<const double> x);

std::vector<std::pair<int, int>> entangler_pairs(int n, Entanglement pattern);

/// Ordered qubit subsets of size k: all k-subsets in lexicographic order
/// (full) or consecutive windows (linear). k = 1 gives every qubit.
std::vector<std::vector<int>> qubit_subsets(int n, int k, Entanglement pattern);

/// Parameters are x0..x{n-1}.
sim::ParameterizedCircuit build_pauli_feature_map(const FeatureMapSpec& spec);

/// fm applied to |0...0> with x bound to the feature symbols.
sim::Statevector bind_data(const sim::ParameterizedCircuit& fm,
                           std::span<const double> x);

}  // namespace qqc::encoding

#endif  // QQC_ENCODING_FEATURE_MAP_HPP
