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

#ifndef QQC_SIM_STATEVECTOR_HPP
#define QQC_SIM_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qqc::sim {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 24;

/// Dense n-qubit pure state. Qubit 0 is the least-significant bit of the
/// amplitude index.
class Statevector {
 public:
  /// |0...0> on n_qubits; throws kCapacity outside [1, kMaxQubits].
  explicit Statevector(int n_qubits);

  /// Takes ownership of explicit amplitudes. The length must be a power of two
  /// and the norm must be 1 within 1e-10.
  static Statevector from_amplitudes(std::vector<Complex> amplitudes);

  int num_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> mutable_amplitudes() noexcept { return amplitudes_; }

  double norm_squared() const;

  bool operator==(const Statevector&) const = default;

 private:
  Statevector() = default;

  int n_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

/// <a|b>, conjugate-linear in a.
Complex inner_product(const Statevector& a, const Statevector& b);

std::vector<double> measure_probabilities(const Statevector& state);

/// Outcome label for a basis index, most-significant qubit first.
std::string outcome_string(std::uint64_t index, int n_qubits);

struct CountsMap {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;

  std::uint64_t count(std::string_view outcome) const;
};

/// Per-basis-index multinomial counts, length 2^n. Inverse-CDF sampling with
/// one uniform draw per shot from Rng(seed).
std::vector<std::uint64_t> sample_index_counts(const Statevector& state,
                                               std::uint64_t shots,
                                               std::uint64_t seed);

CountsMap sample_counts(const Statevector& state, std::uint64_t shots,
                        std::uint64_t seed);

}  // namespace qqc::sim

#endif  // QQC_SIM_STATEVECTOR_HPP
