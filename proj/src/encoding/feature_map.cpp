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

#include "encoding/feature_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "common/error.hpp"

namespace qqc::encoding {

namespace {

constexpr std::string_view kModule = "feature-encoding";
constexpr double kHalfPi = std::numbers::pi / 2.0;

void combinations(int n, int k, int start, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string_view entanglement_name(Entanglement e) {
  return e == Entanglement::kFull ? "full" : "linear";
}

std::optional<Entanglement> parse_entanglement(std::string_view name) {
  if (name == "full") return Entanglement::kFull;
  if (name == "linear") return Entanglement::kLinear;
  return std::nullopt;
}

void FeatureMapSpec::validate() const {
  require(n_features >= 1 && n_features <= sim::kMaxQubits, ErrorCode::kCapacity,
          kModule,
          "n_features " + std::to_string(n_features) + " outside [1, " +
              std::to_string(sim::kMaxQubits) + "]");
  require(reps >= 1, ErrorCode::kInvalidArgument, kModule,
          "reps must be >= 1, got " + std::to_string(reps));
  require(!pauli_strings.empty(), ErrorCode::kInvalidArgument, kModule,
          "feature map needs at least one Pauli word");
  for (const auto& word : pauli_strings) {
    sim::parse_pauli_word(word);
    require(static_cast<int>(word.size()) <= n_features, ErrorCode::kInvalidArgument,
            kModule,
            "Pauli word '" + word + "' is longer than n_features=" +
                std::to_string(n_features));
  }
}

std::string FeatureMapSpec::canonical() const {
  std::string s = "pauli_fm;n=" + std::to_string(n_features) + ";words=";
  for (std::size_t i = 0; i < pauli_strings.size(); ++i) {
    if (i) s += ',';
    s += pauli_strings[i];
  }
  s += ";ent=" + std::string(entanglement_name(entanglement));
  s += ";reps=" + std::to_string(reps);
  s += include_hadamard ? ";h=1" : ";h=0";
  return s;
}

std::uint64_t FeatureMapSpec::hash() const {
  // FNV-1a 64.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

FeatureMapSpec FeatureMapSpec::z_map(int n, int reps) {
  return FeatureMapSpec{n, {"Z"}, Entanglement::kFull, reps, true};
}

FeatureMapSpec FeatureMapSpec::zz_map(int n, int reps, Entanglement e) {
  return FeatureMapSpec{n, {"Z", "ZZ"}, e, reps, true};
}

FeatureMapSpec FeatureMapSpec::pauli_map(int n, int reps, Entanglement e) {
  return FeatureMapSpec{n, {"X", "Y", "ZZ"}, e, reps, true};
}

Rescaled rescale_features(const Matrix& raw) {
  require(raw.rows() >= 1 && raw.cols() >= 1, ErrorCode::kInvalidArgument, kModule,
          "cannot rescale an empty matrix");
  for (double v : raw.data())
    require(std::isfinite(v), ErrorCode::kNumeric, kModule,
            "non-finite feature value");
  ScalingParams params;
  params.min.assign(raw.cols(), 0.0);
  params.max.assign(raw.cols(), 0.0);
  for (std::size_t c = 0; c < raw.cols(); ++c) {
    double lo = raw(0, c), hi = raw(0, c);
    for (std::size_t r = 1; r < raw.rows(); ++r) {
      lo = std::min(lo, raw(r, c));
      hi = std::max(hi, raw(r, c));
    }
    params.min[c] = lo;
    params.max[c] = hi;
  }
  Rescaled out{apply_scaling(raw, params), params};
  return out;
}

Matrix apply_scaling(const Matrix& raw, const ScalingParams& params) {
  require(params.min.size() == raw.cols() && params.max.size() == raw.cols(),
          ErrorCode::kDimension, kModule,
          "scaling parameters cover " + std::to_string(params.min.size()) +
              " columns, data has " + std::to_string(raw.cols()));
  Matrix out(raw.rows(), raw.cols());
  for (std::size_t r = 0; r < raw.rows(); ++r) {
    for (std::size_t c = 0; c < raw.cols(); ++c) {
      const double v = raw(r, c);
      require(std::isfinite(v), ErrorCode::kNumeric, kModule, "non-finite feature value");
      const double span = params.max[c] - params.min[c];
      if (span <= 0.0) {
        out(r, c) = 0.0;
        continue;
      }
      out(r, c) = std::clamp((v - params.min[c]) / span * kHalfPi, 0.0, kHalfPi);
    }
  }
  return out;
}

sim::Statevector angle_encode(std::span<const double> x) {
  require(!x.empty(), ErrorCode::kInvalidArgument, kModule, "empty feature vector");
  require(static_cast<int>(x.size()) <= sim::kMaxQubits, ErrorCode::kCapacity, kModule,
          "too many features for angle encoding");
  for (std::size_t i = 0; i < x.size(); ++i)
    require(x[i] >= 0.0 && x[i] <= kHalfPi, ErrorCode::kInvalidArgument, kModule,
            "feature " + std::to_string(i) + " = " + std::to_string(x[i]) +
                " outside [0, pi/2]");
  const std::size_t dim = std::size_t{1} << x.size();
  std::vector<sim::Complex> amps(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    double a = 1.0;
    for (std::size_t q = 0; q < x.size(); ++q)
      a *= ((k >> q) & 1U) ? std::sin(x[q]) : std::cos(x[q]);
    amps[k] = a;
  }
  return sim::Statevector::from_amplitudes(std::move(amps));
}

std::vector<std::pair<int, int>> entangler_pairs(int n, Entanglement pattern) {
  require(n >= 2, ErrorCode::kInvalidArgument, kModule,
          "entangler pairs need n >= 2, got " + std::to_string(n));
  std::vector<std::pair<int, int>> pairs;
  if (pattern == Entanglement::kFull) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  } else {
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  }
  return pairs;
}

std::vector<std::vector<int>> qubit_subsets(int n, int k, Entanglement pattern) {
  require(k >= 1 && k <= n, ErrorCode::kInvalidArgument, kModule,
          "subset size " + std::to_string(k) + " invalid for " + std::to_string(n) +
              " qubits");
  std::vector<std::vector<int>> out;
  if (k == 1) {
    for (int q = 0; q < n; ++q) out.push_back({q});
  } else if (k == 2) {
    for (auto [i, j] : entangler_pairs(n, pattern)) out.push_back({i, j});
  } else if (pattern == Entanglement::kFull) {
    std::vector<int> cur;
    combinations(n, k, 0, cur, out);
  } else {
    for (int s = 0; s + k <= n; ++s) {
      std::vector<int> window(static_cast<std::size_t>(k));
      for (int t = 0; t < k; ++t) window[static_cast<std::size_t>(t)] = s + t;
      out.push_back(std::move(window));
    }
  }
  return out;
}

sim::ParameterizedCircuit build_pauli_feature_map(const FeatureMapSpec& spec) {
  spec.validate();
  const int n = spec.n_features;
  sim::ParameterizedCircuit fm(n);
  for (int j = 0; j < n; ++j) fm.add_parameter("x" + std::to_string(j));

  std::vector<std::pair<std::vector<sim::Pauli>, std::vector<std::vector<int>>>> blocks;
  for (const auto& word : spec.pauli_strings) {
    auto letters = sim::parse_pauli_word(word);
    const int k = static_cast<int>(letters.size());
    blocks.emplace_back(std::move(letters), qubit_subsets(n, k, spec.entanglement));
  }

  for (int r = 0; r < spec.reps; ++r) {
    if (spec.include_hadamard)
      for (int q = 0; q < n; ++q) fm.add(sim::Gate::single(sim::GateKind::H, q));
    for (const auto& [letters, subsets] : blocks) {
      for (const auto& subset : subsets) {
        sim::AngleExpr expr;
        expr.symbols.assign(subset.begin(), subset.end());
        if (subset.size() == 1) {
          expr.kind = sim::AngleExpr::Kind::kAffine;
        } else {
          expr.kind = sim::AngleExpr::Kind::kProduct;
          expr.shift = std::numbers::pi;
        }
        fm.add(sim::Gate::pauli_rotation(letters, subset, 0.0), std::move(expr));
      }
    }
  }
  return fm;
}

sim::Statevector bind_data(const sim::ParameterizedCircuit& fm,
                           std::span<const double> x) {
  require(x.size() == fm.parameters().size(), ErrorCode::kDimension, kModule,
          "feature vector has " + std::to_string(x.size()) +
              " entries, feature map expects " +
              std::to_string(fm.parameters().size()));
  return sim::apply_circuit(fm, x, sim::Statevector(fm.num_qubits()));
}

}  // namespace qqc::encoding
