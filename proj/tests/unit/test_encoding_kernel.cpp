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

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "common/error.hpp"
#include "common/rng.hpp"
#include "encoding/feature_map.hpp"
#include "kernel/quantum_kernel.hpp"
#include "oracle.hpp"
#include "sim/circuit.hpp"
#include "vqc/ansatz.hpp"

namespace qqc {
namespace {

using encoding::Entanglement;
using encoding::FeatureMapSpec;
constexpr double kHalfPi = std::numbers::pi / 2.0;

using testing::depth_fixtures;
using testing::random_points;


TEST(Rescale, MapsTrainRangeOntoQuarterTurn) {
  const auto raw = Matrix::from_rows({{1.0, 5.0, 3.0}, {3.0, 5.0, -1.0}, {2.0, 5.0, 1.0}});
  const auto r = encoding::rescale_features(raw);
  EXPECT_DOUBLE_EQ(r.x(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(r.x(1, 0), kHalfPi);
  EXPECT_DOUBLE_EQ(r.x(2, 0), kHalfPi / 2.0);
  EXPECT_DOUBLE_EQ(r.x(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(r.x(0, 2), kHalfPi);
  const auto test = encoding::apply_scaling(Matrix::from_rows({{10.0, 1.0, -5.0}}), r.params);
  EXPECT_DOUBLE_EQ(test(0, 0), kHalfPi);
  EXPECT_DOUBLE_EQ(test(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(test(0, 2), 0.0);
  EXPECT_THROW(encoding::apply_scaling(Matrix(1, 2), r.params), Error);
}

TEST(Rescale, RejectsNonFinite) {
  auto raw = Matrix::from_rows({{1.0}, {std::nan("")}});
  EXPECT_THROW(encoding::rescale_features(raw), Error);
}

TEST(AngleEncode, ProductOfCosSin) {
  const std::vector<double> x = {0.3, 1.2};
  const auto s = encoding::angle_encode(x);
  EXPECT_NEAR(s.amplitudes()[0].real(), std::cos(0.3) * std::cos(1.2), 1e-15);
  EXPECT_NEAR(s.amplitudes()[1].real(), std::sin(0.3) * std::cos(1.2), 1e-15);
  EXPECT_NEAR(s.amplitudes()[2].real(), std::cos(0.3) * std::sin(1.2), 1e-15);
  EXPECT_NEAR(s.amplitudes()[3].real(), std::sin(0.3) * std::sin(1.2), 1e-15);
  const std::vector<double> bad = {0.1, 2.0};
  EXPECT_THROW(encoding::angle_encode(bad), Error);
}

TEST(FeatureMap, SubsetsFollowEntanglementPattern) {
  EXPECT_EQ(encoding::entangler_pairs(3, Entanglement::kFull),
            (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(encoding::entangler_pairs(3, Entanglement::kLinear),
            (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(encoding::qubit_subsets(4, 3, Entanglement::kFull).size(), 4u);
  EXPECT_EQ(encoding::qubit_subsets(4, 3, Entanglement::kLinear),
            (std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}}));
  EXPECT_THROW(encoding::qubit_subsets(2, 3, Entanglement::kFull), Error);
}

TEST(FeatureMap, GateCountAndParameters) {
  const auto fm = encoding::build_pauli_feature_map(FeatureMapSpec::pauli_map(3, 2));
  EXPECT_EQ(fm.parameters(), (std::vector<std::string>{"x0", "x1", "x2"}));
  EXPECT_EQ(fm.size(), 2u * (3 + 3 + 3 + 3));
  EXPECT_THROW(encoding::build_pauli_feature_map(FeatureMapSpec{2, {"ZZZ"}}), Error);
  EXPECT_THROW(encoding::build_pauli_feature_map(FeatureMapSpec{2, {"Q"}}), Error);
  EXPECT_THROW(encoding::build_pauli_feature_map(FeatureMapSpec{25, {"Z"}}), Error);
}

TEST(FeatureMap, HashDependsOnEveryField) {
  const auto base = FeatureMapSpec::pauli_map(4);
  auto other = base;
  other.reps = 2;
  EXPECT_NE(base.hash(), other.hash());
  other = base;
  other.entanglement = Entanglement::kLinear;
  EXPECT_NE(base.hash(), other.hash());
  EXPECT_EQ(base.hash(), FeatureMapSpec::pauli_map(4).hash());
}

TEST(Kernel, SingleQubitZMapIsCosSquared) {
  const auto spec = FeatureMapSpec::z_map(1);
  double worst = 0.0;
  for (int a = 0; a < 20; ++a) {
    for (int b = 0; b < 20; ++b) {
      const double x = kHalfPi * a / 19.0, y = kHalfPi * b / 19.0;
      const std::vector<double> xi = {x}, xj = {y};
      const double k = kernel::kernel_entry_exact(spec, xi, xj);
      worst = std::max(worst, std::abs(k - std::pow(std::cos(x - y), 2)));
    }
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(Kernel, SampledEstimateConverges) {
  const auto spec = FeatureMapSpec::zz_map(2);
  const std::vector<double> x = {0.4, 1.1}, y = {0.9, 0.2};
  const double exact = kernel::kernel_entry_exact(spec, x, y);
  const double sampled = kernel::kernel_entry_sampled(spec, x, y, 100000, 3);
  EXPECT_NEAR(sampled, exact, 0.01);
  EXPECT_EQ(sampled, kernel::kernel_entry_sampled(spec, x, y, 100000, 3));
}

TEST(Kernel, GramMatrixIsSymmetricUnitDiagonalPsd) {
  Rng rng(77);
  const std::vector<FeatureMapSpec> specs = {
      FeatureMapSpec::z_map(2), FeatureMapSpec::zz_map(3),
      FeatureMapSpec::pauli_map(3, 2, Entanglement::kLinear), FeatureMapSpec::pauli_map(4),
      FeatureMapSpec{3, {"XY", "Z"}, Entanglement::kFull, 1, true}};
  for (const auto& spec : specs) {
    const auto x = random_points(30, static_cast<std::size_t>(spec.n_features), rng);
    const auto k = kernel::train_kernel_matrix(spec, x);
    for (std::size_t i = 0; i < 30; ++i) {
      EXPECT_DOUBLE_EQ(k.values(i, i), 1.0);
      for (std::size_t j = 0; j < 30; ++j) {
        EXPECT_NEAR(k.values(i, j), k.values(j, i), 1e-9);
        EXPECT_GE(k.values(i, j), 0.0);
        EXPECT_LE(k.values(i, j), 1.0);
      }
    }
    const auto ev = testing::jacobi_eigenvalues(k.values);
    EXPECT_GE(*std::min_element(ev.begin(), ev.end()), -1e-8) << spec.canonical();
    const auto report = kernel::validate_kernel(k);
    EXPECT_TRUE(report.pass);
    EXPECT_NEAR(report.min_eigenvalue, *std::min_element(ev.begin(), ev.end()), 1e-8);
  }
}

TEST(Kernel, TestMatrixMatchesEntrywiseOverlaps) {
  Rng rng(3);
  const auto spec = FeatureMapSpec::pauli_map(3);
  const auto xtr = random_points(5, 3, rng);
  const auto xte = random_points(4, 3, rng);
  const auto k = kernel::test_kernel_matrix(spec, xtr, xte);
  EXPECT_EQ(k.kind, kernel::KernelKind::kTest);
  ASSERT_EQ(k.values.rows(), 4u);
  ASSERT_EQ(k.values.cols(), 5u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      EXPECT_NEAR(k.values(i, j), kernel::kernel_entry_exact(spec, xte.row(i), xtr.row(j)), 1e-14);
  EXPECT_THROW(kernel::test_kernel_matrix(spec, xtr, random_points(2, 2, rng)), Error);
}

TEST(Kernel, ResultIndependentOfThreadCount) {
  Rng rng(8);
  const auto spec = FeatureMapSpec::zz_map(3);
  const auto x = random_points(12, 3, rng);
  ::setenv("QQC_THREADS", "1", 1);
  const auto a = kernel::train_kernel_matrix(spec, x, {500, 9});
  ::setenv("QQC_THREADS", "4", 1);
  const auto b = kernel::train_kernel_matrix(spec, x, {500, 9});
  ::unsetenv("QQC_THREADS");
  EXPECT_EQ(a.values, b.values);
}

TEST(Kernel, ValidationFlagsBrokenMatrices) {
  auto m = Matrix::from_rows({{1.0, 0.9}, {0.2, 1.0}});
  auto r = kernel::validate_kernel(m);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(std::find(r.failures.begin(), r.failures.end(), "asymmetry"), r.failures.end());
  m = Matrix::from_rows({{1.0, 1.0, 0.0}, {1.0, 1.0, 1.0}, {0.0, 1.0, 1.0}});
  r = kernel::validate_kernel(m);
  EXPECT_NE(std::find(r.failures.begin(), r.failures.end(), "not_psd"), r.failures.end());
  m = Matrix::from_rows({{0.5, 0.0}, {0.0, 1.0}});
  r = kernel::validate_kernel(m);
  EXPECT_NE(std::find(r.failures.begin(), r.failures.end(), "diagonal"), r.failures.end());
}

TEST(Kernel, SaveLoadRoundTripsBitExactly) {
  Rng rng(1);
  const auto spec = FeatureMapSpec::pauli_map(2);
  const auto x = random_points(6, 2, rng);
  const auto k = kernel::train_kernel_matrix(spec, x, {100, 5});
  const auto dir = testing::scratch_dir("kernel_io");
  kernel::save_kernel(dir / "k.qkm", k);
  const auto back = kernel::load_kernel(dir / "k.qkm");
  EXPECT_EQ(back.values, k.values);
  EXPECT_EQ(back.kind, kernel::KernelKind::kTrain);
  EXPECT_EQ(back.fm_hash, spec.hash());
  EXPECT_EQ(back.shots, 100u);
  std::filesystem::resize_file(dir / "k.qkm", std::filesystem::file_size(dir / "k.qkm") - 4);
  EXPECT_THROW(kernel::load_kernel(dir / "k.qkm"), Error);
  EXPECT_THROW(kernel::load_kernel(dir / "missing.qkm"), Error);
}

TEST(Depth, MatchesHandLayeredFixtures) {
  const auto fixtures = depth_fixtures();
  ASSERT_EQ(fixtures.size(), 22u);
  for (const auto& f : fixtures) {
    if (f.classifier == "two_local") {
      vqc::AnsatzSpec a;
      a.n_qubits = f.features;
      a.reps = f.qc_reps;
      EXPECT_EQ(sim::circuit_depth(vqc::build_two_local(a)), f.qc_depth);
      continue;
    }
    const FeatureMapSpec spec{f.features, f.words, Entanglement::kFull, f.fm_reps, true};
    const auto fm = encoding::build_pauli_feature_map(spec);
    EXPECT_EQ(sim::circuit_depth(fm), f.fm_depth) << f.classifier << " " << f.exp;
    if (f.classifier == "vqc") {
      vqc::AnsatzSpec a;
      a.n_qubits = f.features;
      a.reps = f.qc_reps;
      auto composed = fm;
      composed.append(vqc::build_two_local(a));
      EXPECT_EQ(sim::circuit_depth(composed), f.total) << f.exp;
    }
  }
}

}  // namespace
}  // namespace qqc
