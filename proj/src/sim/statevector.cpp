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

#include "sim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace qqc::sim {

namespace {
constexpr std::string_view kModule = "circuit-sim";
}

Statevector::Statevector(int n_qubits) {
  require(n_qubits >= 1 && n_qubits <= kMaxQubits, ErrorCode::kCapacity, kModule,
          "qubit count " + std::to_string(n_qubits) + " outside [1, " +
              std::to_string(kMaxQubits) + "]");
  n_qubits_ = n_qubits;
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = Complex{1.0, 0.0};
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  require(dim >= 2 && std::has_single_bit(dim), ErrorCode::kDimension, kModule,
          "amplitude count " + std::to_string(dim) + " is not 2^n with n >= 1");
  const int n = std::countr_zero(dim);
  require(n <= kMaxQubits, ErrorCode::kCapacity, kModule, "too many qubits");
  Statevector s;
  s.n_qubits_ = n;
  s.amplitudes_ = std::move(amplitudes);
  const double norm = s.norm_squared();
  require(std::abs(norm - 1.0) <= 1e-10, ErrorCode::kNumeric, kModule,
          "state is not normalized (norm^2 = " + std::to_string(norm) + ")");
  return s;
}

double Statevector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return acc;
}

Complex inner_product(const Statevector& a, const Statevector& b) {
  require(a.num_qubits() == b.num_qubits(), ErrorCode::kDimension, kModule,
          "inner product of " + std::to_string(a.num_qubits()) + "- and " +
              std::to_string(b.num_qubits()) + "-qubit states");
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  // Split accumulation keeps the loop vectorizable.
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double yr = y[k].real(), yi = y[k].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

std::vector<double> measure_probabilities(const Statevector& state) {
  std::vector<double> p(state.dimension());
  const auto amps = state.amplitudes();
  std::transform(amps.begin(), amps.end(), p.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return p;
}

std::string outcome_string(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q)
    if ((index >> q) & 1U) s[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
  return s;
}

std::uint64_t CountsMap::count(std::string_view outcome) const {
  const auto it = counts.find(std::string(outcome));
  return it == counts.end() ? 0 : it->second;
}

std::vector<std::uint64_t> sample_index_counts(const Statevector& state,
                                               std::uint64_t shots,
                                               std::uint64_t seed) {
  require(shots >= 1, ErrorCode::kInvalidArgument, kModule, "shots must be >= 1");
  const auto probs = measure_probabilities(state);
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    acc += probs[k];
    cdf[k] = acc;
  }
  // Renormalize against accumulated rounding so the last bin closes at 1.
  for (auto& c : cdf) c /= acc;
  cdf.back() = 1.0;

  std::vector<std::uint64_t> counts(probs.size(), 0);
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cdf.begin(),
                                 static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    ++counts[idx];
  }
  return counts;
}

CountsMap sample_counts(const Statevector& state, std::uint64_t shots,
                        std::uint64_t seed) {
  const auto per_index = sample_index_counts(state, shots, seed);
  CountsMap out;
  out.shots = shots;
  for (std::size_t k = 0; k < per_index.size(); ++k)
    if (per_index[k] > 0)
      out.counts.emplace(outcome_string(k, state.num_qubits()), per_index[k]);
  return out;
}

}  // namespace qqc::sim
