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

#include "vqc/vqc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "common/rng.hpp"
#include "vqc/spec_json.hpp"

namespace qqc::vqc {

namespace {

constexpr std::string_view kModule = "vqc";
constexpr double kClamp = 1e-12;

void check_compatible(const encoding::FeatureMapSpec& fm, const AnsatzSpec& ansatz) {
  require(fm.n_features == ansatz.n_qubits, ErrorCode::kDimension, kModule,
          "feature map has " + std::to_string(fm.n_features) + " qubits, ansatz has " +
              std::to_string(ansatz.n_qubits));
}

double sampled_p1(const sim::Statevector& state, std::uint64_t shots, std::uint64_t seed) {
  const auto counts = sim::sample_index_counts(state, shots, seed);
  std::uint64_t odd = 0;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (std::popcount(k) & 1) odd += counts[k];
  return static_cast<double>(odd) / static_cast<double>(shots);
}

}  // namespace

ParityProbs parity_probabilities(const sim::Statevector& state) {
  const auto amps = state.amplitudes();
  double p1 = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k)
    if (std::popcount(k) & 1) p1 += std::norm(amps[k]);
  p1 = std::clamp(p1, 0.0, 1.0);
  return {1.0 - p1, p1};
}

ParityProbs forward(const sim::ParameterizedCircuit& feature_map,
                    const sim::ParameterizedCircuit& ansatz,
                    std::span<const double> theta, std::span<const double> x) {
  require(theta.size() == ansatz.parameters().size(), ErrorCode::kUnboundSymbol, kModule,
          "theta has " + std::to_string(theta.size()) + " values, ansatz needs " +
              std::to_string(ansatz.parameters().size()));
  auto state = encoding::bind_data(feature_map, x);
  state = sim::apply_circuit(ansatz, theta, std::move(state));
  return parity_probabilities(state);
}

ParityProbs forward(const encoding::FeatureMapSpec& fm_spec, const AnsatzSpec& ansatz_spec,
                    std::span<const double> theta, std::span<const double> x) {
  check_compatible(fm_spec, ansatz_spec);
  return forward(encoding::build_pauli_feature_map(fm_spec), build_two_local(ansatz_spec),
                 theta, x);
}

double bce_loss(std::span<const double> p1, std::span<const int> labels) {
  require(!p1.empty(), ErrorCode::kInvalidArgument, kModule, "loss of empty batch");
  require(p1.size() == labels.size(), ErrorCode::kDimension, kModule,
          "probability/label length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    const double p = std::clamp(p1[i], kClamp, 1.0 - kClamp);
    acc -= labels[i] == 1 ? std::log(p) : std::log(1.0 - p);
  }
  return acc / static_cast<double>(p1.size());
}

std::uint64_t hash_theta(std::span<const double> theta) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double t : theta) {
    const auto bits = std::bit_cast<std::uint64_t>(t);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

TrainedVqc train_vqc(const encoding::FeatureMapSpec& fm_spec, const AnsatzSpec& ansatz_spec,
                     const Matrix& x_train, std::span<const int> y_train,
                     const OptimizerConfig& config) {
  check_compatible(fm_spec, ansatz_spec);
  require(x_train.rows() >= 1, ErrorCode::kInvalidArgument, kModule, "empty training set");
  require(x_train.rows() == y_train.size(), ErrorCode::kDimension, kModule,
          "training features/labels length mismatch");
  bool has0 = false, has1 = false;
  for (int y : y_train) {
    require(y == 0 || y == 1, ErrorCode::kInvalidArgument, kModule, "labels must be 0 or 1");
    (y ? has1 : has0) = true;
  }
  require(has0 && has1, ErrorCode::kData, kModule, "training labels contain a single class");

  const auto fm = encoding::build_pauli_feature_map(fm_spec);
  const auto ansatz = build_two_local(ansatz_spec);
  const std::size_t d = x_train.rows();
  std::vector<sim::Statevector> encoded(d, sim::Statevector(1));
  parallel_for(d, [&](std::size_t i) { encoded[i] = encoding::bind_data(fm, x_train.row(i)); });

  TrainedVqc model;
  model.feature_map = fm_spec;
  model.ansatz = ansatz_spec;

  std::uint64_t eval_index = 0;
  auto objective = [&](std::span<const double> theta) {
    std::vector<double> p1(d);
    const std::uint64_t eval_seed = derive_seed(config.seed, 0x76716331ULL, eval_index++);
    parallel_for(d, [&](std::size_t i) {
      const auto state = sim::apply_circuit(ansatz, theta, encoded[i]);
      p1[i] = config.shots == 0 ? parity_probabilities(state).p1
                                : sampled_p1(state, config.shots, derive_seed(eval_seed, i, 0));
    });
    const double loss = bce_loss(p1, y_train);
    std::size_t hit = 0;
    for (std::size_t i = 0; i < d; ++i) hit += (p1[i] > 0.5 ? 1 : 0) == y_train[i];
    model.history.push_back(
        {hash_theta(theta), loss, static_cast<double>(hit) / static_cast<double>(d)});
    return loss;
  };

  Rng rng(config.seed);
  std::vector<double> theta0(ansatz.parameters().size());
  for (auto& t : theta0) t = rng.uniform(-std::numbers::pi, std::numbers::pi);

  const auto result = cobyla_minimize(objective, theta0, config);
  model.theta = result.x_best;
  model.converged = result.converged;
  model.initial_loss = result.values.front();
  model.final_loss = result.f_best;
  return model;
}

std::vector<double> predict_proba(const TrainedVqc& model, const Matrix& x) {
  check_compatible(model.feature_map, model.ansatz);
  require(static_cast<int>(x.cols()) == model.feature_map.n_features || x.rows() == 0,
          ErrorCode::kDimension, kModule,
          "input has " + std::to_string(x.cols()) + " features, model expects " +
              std::to_string(model.feature_map.n_features));
  const auto fm = encoding::build_pauli_feature_map(model.feature_map);
  const auto ansatz = build_two_local(model.ansatz);
  std::vector<double> p1(x.rows());
  parallel_for(x.rows(), [&](std::size_t i) {
    p1[i] = forward(fm, ansatz, model.theta, x.row(i)).p1;
  });
  return p1;
}

std::vector<int> predict_vqc(const TrainedVqc& model, const Matrix& x) {
  const auto p1 = predict_proba(model, x);
  std::vector<int> labels(p1.size());
  std::transform(p1.begin(), p1.end(), labels.begin(),
                 [](double p) { return p > 0.5 ? 1 : 0; });
  return labels;
}

void save_vqc(const std::filesystem::path& path, const TrainedVqc& model) {
  std::ofstream out(path, std::ios::trunc);
  require(static_cast<bool>(out), ErrorCode::kIo, kModule,
          "cannot open " + path.string() + " for writing");
  out << "VQC1\n";
  out << feature_map_to_json(model.feature_map).dump() << '\n';
  out << ansatz_to_json(model.ansatz).dump() << '\n';
  out << "converged " << (model.converged ? 1 : 0) << '\n';
  char buf[40];
  for (double t : model.theta) {
    std::snprintf(buf, sizeof buf, "%.17g", t);
    out << buf << '\n';
  }
  require(static_cast<bool>(out), ErrorCode::kIo, kModule, "write failed: " + path.string());
}

TrainedVqc load_vqc(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, kModule, "cannot open " + path.string());
  std::string line;
  auto next = [&](const char* what) {
    require(static_cast<bool>(std::getline(in, line)), ErrorCode::kParse, kModule,
            path.string() + ": missing " + what);
  };
  next("header");
  require(line == "VQC1", ErrorCode::kParse, kModule, path.string() + ": bad VQC1 header");
  TrainedVqc m;
  try {
    next("feature map");
    m.feature_map = feature_map_from_json(nlohmann::json::parse(line));
    next("ansatz");
    m.ansatz = ansatz_from_json(nlohmann::json::parse(line));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, kModule, path.string() + ": " + e.what());
  }
  next("converged flag");
  require(line == "converged 0" || line == "converged 1", ErrorCode::kParse, kModule,
          path.string() + ": bad converged line");
  m.converged = line.back() == '1';
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      std::size_t used = 0;
      m.theta.push_back(std::stod(line, &used));
      require(used == line.size(), ErrorCode::kParse, kModule, "trailing characters");
    } catch (const std::logic_error&) {
      fail(ErrorCode::kParse, kModule, path.string() + ": bad theta value '" + line + "'");
    }
  }
  require(m.theta.size() == m.ansatz.parameter_count(), ErrorCode::kParse, kModule,
          path.string() + ": expected " + std::to_string(m.ansatz.parameter_count()) +
              " theta values, found " + std::to_string(m.theta.size()));
  return m;
}

}  // namespace qqc::vqc
