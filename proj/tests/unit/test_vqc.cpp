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
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "common/error.hpp"
#include "dataset/dataset.hpp"
#include "oracle.hpp"
#include "sim/circuit.hpp"
#include "svm/svm.hpp"
#include "vqc/ansatz.hpp"
#include "vqc/cobyla.hpp"
#include "vqc/spec_json.hpp"
#include "vqc/vqc.hpp"

namespace qqc::vqc {
namespace {

using encoding::FeatureMapSpec;

TEST(Ansatz, ParameterCountAndLayout) {
  AnsatzSpec a;
  a.n_qubits = 3;
  a.reps = 2;
  EXPECT_EQ(a.parameter_count(), 3u * 3 * 2);
  const auto c = build_two_local(a);
  EXPECT_EQ(c.parameters().size(), 18u);
  EXPECT_EQ(c.parameters().front(), "t0");
  EXPECT_EQ(c.size(), 18u + 2 * 3);
  AnsatzSpec single;
  single.n_qubits = 1;
  single.reps = 3;
  const auto s = build_two_local(single);
  for (const auto& op : s.ops()) EXPECT_EQ(op.gate.targets.size(), 1u);
  AnsatzSpec bad;
  bad.reps = -1;
  EXPECT_THROW(bad.validate(), Error);
  bad = AnsatzSpec{};
  bad.rotation_gates = {sim::GateKind::CZ};
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Cobyla, MinimizesQuadraticFromOneOne) {
  OptimizerConfig cfg;
  cfg.max_iterations = 100;
  const auto r = cobyla_minimize(
      [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; }, {1.0, 1.0}, cfg);
  EXPECT_LE(r.f_best, 1e-4);
  EXPECT_LE(r.evaluations, 100);
  EXPECT_EQ(r.values.size(), static_cast<std::size_t>(r.evaluations));
  for (std::size_t i = 1; i < r.best_so_far.size(); ++i)
    EXPECT_LE(r.best_so_far[i], r.best_so_far[i - 1]);
}

TEST(Cobyla, FindsShiftedMinimumInFourDimensions) {
  OptimizerConfig cfg;
  cfg.max_iterations = 400;
  cfg.rhoend = 1e-6;
  const std::vector<double> c = {0.5, -1.0, 2.0, 0.25};
  const auto r = cobyla_minimize(
      [&](std::span<const double> x) {
        double f = 0.0;
        for (std::size_t i = 0; i < 4; ++i) f += (i + 1.0) * (x[i] - c[i]) * (x[i] - c[i]);
        return f;
      },
      {0.0, 0.0, 0.0, 0.0}, cfg);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(r.x_best[i], c[i], 1e-3);
}

TEST(Cobyla, RejectsTinyBudgetAndBadRadii) {
  OptimizerConfig cfg;
  cfg.max_iterations = 3;
  auto f = [](std::span<const double> x) { return x[0] * x[0]; };
  EXPECT_THROW(cobyla_minimize(f, {1.0, 1.0}, cfg), Error);
  cfg = OptimizerConfig{};
  cfg.rhoend = 2.0;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(Parity, OddBitCountIsClassOne) {
  sim::Statevector s(2);
  EXPECT_DOUBLE_EQ(parity_probabilities(s).p1, 0.0);
  sim::apply_gate_inplace(s, sim::Gate::single(sim::GateKind::X, 0));
  EXPECT_DOUBLE_EQ(parity_probabilities(s).p1, 1.0);
  sim::apply_gate_inplace(s, sim::Gate::single(sim::GateKind::X, 1));
  EXPECT_DOUBLE_EQ(parity_probabilities(s).p1, 0.0);
}

TEST(Loss, BinaryCrossEntropyValues) {
  const std::vector<double> p = {0.5, 0.5};
  const std::vector<int> y = {1, 0};
  EXPECT_NEAR(bce_loss(p, y), std::log(2.0), 1e-15);
  const std::vector<double> sure = {0.0};
  const std::vector<int> one = {1};
  EXPECT_NEAR(bce_loss(sure, one), -std::log(1e-12), 1e-9);
}

TEST(Forward, ProbabilitiesSumToOne) {
  const auto fm = FeatureMapSpec::pauli_map(3);
  AnsatzSpec a;
  a.n_qubits = 3;
  std::vector<double> theta(a.parameter_count(), 0.3);
  const std::vector<double> x = {0.2, 0.7, 1.4};
  const auto p = forward(fm, a, theta, x);
  EXPECT_NEAR(p.p0 + p.p1, 1.0, 1e-12);
  EXPECT_THROW(forward(fm, a, std::vector<double>(3, 0.0), x), Error);
}

TEST(Train, OneFeatureSyntheticTaskIsLearned) {
  const auto data = dataset::generate_synthetic(50, 1, 0.9, 17);
  const FeatureMapSpec fm{1, {"Z"}, encoding::Entanglement::kFull, 1, true};
  AnsatzSpec a;
  a.n_qubits = 1;
  OptimizerConfig cfg;
  cfg.max_iterations = 100;
  cfg.seed = 1;
  const auto model = train_vqc(fm, a, data.x_train, data.y_train, cfg);
  EXPECT_LE(model.history.size(), 100u);
  const double acc = svm::accuracy(predict_vqc(model, data.x_train), data.y_train);
  EXPECT_GE(acc, 0.95);
  double best = model.history.front().loss;
  for (const auto& h : model.history) {
    best = std::min(best, h.loss);
    EXPECT_GE(h.train_accuracy, 0.0);
    EXPECT_LE(h.train_accuracy, 1.0);
  }
  EXPECT_LE(model.final_loss, model.initial_loss);
  EXPECT_DOUBLE_EQ(model.final_loss, best);
}

TEST(Train, DeterministicForFixedSeed) {
  const auto data = dataset::generate_synthetic(20, 2, 0.8, 3);
  const auto fm = FeatureMapSpec::pauli_map(2);
  AnsatzSpec a;
  OptimizerConfig cfg;
  cfg.max_iterations = 30;
  cfg.seed = 5;
  const auto m1 = train_vqc(fm, a, data.x_train, data.y_train, cfg);
  const auto m2 = train_vqc(fm, a, data.x_train, data.y_train, cfg);
  EXPECT_EQ(m1.theta, m2.theta);
  ASSERT_EQ(m1.history.size(), m2.history.size());
  for (std::size_t i = 0; i < m1.history.size(); ++i)
    EXPECT_EQ(m1.history[i].theta_hash, m2.history[i].theta_hash);
  cfg.shots = 256;
  const auto s1 = train_vqc(fm, a, data.x_train, data.y_train, cfg);
  const auto s2 = train_vqc(fm, a, data.x_train, data.y_train, cfg);
  EXPECT_EQ(s1.theta, s2.theta);
}

TEST(Train, SaveLoadKeepsPredictions) {
  const auto data = dataset::generate_synthetic(15, 2, 0.9, 8);
  const auto fm = FeatureMapSpec::zz_map(2);
  AnsatzSpec a;
  OptimizerConfig cfg;
  cfg.max_iterations = 20;
  const auto m = train_vqc(fm, a, data.x_train, data.y_train, cfg);
  const auto dir = testing::scratch_dir("vqc_io");
  save_vqc(dir / "m.vqc", m);
  const auto back = load_vqc(dir / "m.vqc");
  EXPECT_EQ(back.theta, m.theta);
  EXPECT_EQ(back.feature_map, m.feature_map);
  EXPECT_EQ(back.ansatz, m.ansatz);
  EXPECT_EQ(predict_proba(back, data.x_test), predict_proba(m, data.x_test));
}

TEST(Train, RejectsMismatchedShapes) {
  const auto data = dataset::generate_synthetic(10, 2, 0.9, 8);
  AnsatzSpec a;
  a.n_qubits = 3;
  EXPECT_THROW(train_vqc(FeatureMapSpec::zz_map(2), a, data.x_train, data.y_train, {}), Error);
  AnsatzSpec ok;
  std::vector<int> short_labels(data.y_train.begin(), data.y_train.end() - 1);
  EXPECT_THROW(train_vqc(FeatureMapSpec::zz_map(2), ok, data.x_train, short_labels, {}), Error);
}

TEST(SpecJson, RoundTripsAllThreeSpecs) {
  const FeatureMapSpec fm{5, {"ZZ", "XY", "ZZ"}, encoding::Entanglement::kLinear, 2, false};
  EXPECT_EQ(feature_map_from_json(feature_map_to_json(fm)), fm);
  AnsatzSpec a;
  a.n_qubits = 4;
  a.rotation_gates = {sim::GateKind::RX};
  a.entangle_gate = sim::GateKind::CX;
  a.reps = 3;
  EXPECT_EQ(ansatz_from_json(ansatz_to_json(a)), a);
  OptimizerConfig o;
  o.max_iterations = 77;
  o.rhobeg = 0.5;
  o.seed = 99;
  EXPECT_EQ(optimizer_from_json(optimizer_to_json(o)), o);
  EXPECT_THROW(feature_map_from_json(nlohmann::json{{"reps", 1}}), Error);
  EXPECT_THROW(ansatz_from_json(nlohmann::json{{"n_qubits", 2}, {"entangle_gate", "zz"}}), Error);
}

}  // namespace
}  // namespace qqc::vqc
