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

#include "kernel/quantum_kernel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "common/rng.hpp"

namespace qqc::kernel {

namespace {

constexpr std::string_view kModule = "quantum-kernel";

std::vector<sim::Statevector> encode_rows(const sim::ParameterizedCircuit& fm,
                                          const Matrix& x) {
  std::vector<sim::Statevector> states(x.rows(), sim::Statevector(1));
  parallel_for(x.rows(), [&](std::size_t r) { states[r] = encoding::bind_data(fm, x.row(r)); });
  return states;
}

double fidelity(const sim::Statevector& a, const sim::Statevector& b) {
  return std::min(1.0, std::norm(sim::inner_product(a, b)));
}

double sampled_from_state(const sim::ParameterizedCircuit& fm_inverse,
                          std::span<const double> x_j, sim::Statevector state,
                          std::uint64_t shots, std::uint64_t seed) {
  state = sim::apply_circuit(fm_inverse, x_j, std::move(state));
  const auto counts = sim::sample_index_counts(state, shots, seed);
  return static_cast<double>(counts[0]) / static_cast<double>(shots);
}

void check_width(const encoding::FeatureMapSpec& spec, const Matrix& x,
                 std::string_view what) {
  require(x.rows() >= 1, ErrorCode::kInvalidArgument, kModule,
          std::string(what) + " set is empty");
  require(static_cast<int>(x.cols()) == spec.n_features, ErrorCode::kDimension, kModule,
          std::string(what) + " set has " + std::to_string(x.cols()) +
              " features, feature map expects " + std::to_string(spec.n_features));
}

std::uint64_t to_le(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) return v;
  std::uint64_t r = 0;
  for (int b = 0; b < 8; ++b) r |= ((v >> (8 * b)) & 0xffU) << (8 * (7 - b));
  return r;
}

}  // namespace

double kernel_entry_exact(const encoding::FeatureMapSpec& spec,
                          std::span<const double> x_i, std::span<const double> x_j) {
  const auto fm = encoding::build_pauli_feature_map(spec);
  return fidelity(encoding::bind_data(fm, x_i), encoding::bind_data(fm, x_j));
}

double kernel_entry_sampled(const encoding::FeatureMapSpec& spec,
                            std::span<const double> x_i, std::span<const double> x_j,
                            std::uint64_t shots, std::uint64_t seed) {
  require(shots >= 1, ErrorCode::kInvalidArgument, kModule, "shots must be >= 1");
  const auto fm = encoding::build_pauli_feature_map(spec);
  require(x_j.size() == fm.parameters().size(), ErrorCode::kDimension, kModule,
          "feature vector length mismatch");
  return sampled_from_state(fm.inverse(), x_j, encoding::bind_data(fm, x_i), shots, seed);
}

KernelMatrix train_kernel_matrix(const encoding::FeatureMapSpec& spec,
                                 const Matrix& x_train, KernelMode mode) {
  check_width(spec, x_train, "train");
  const auto fm = encoding::build_pauli_feature_map(spec);
  const std::size_t d = x_train.rows();
  KernelMatrix k{Matrix(d, d, 0.0), KernelKind::kTrain, spec.hash(), mode.shots, mode.seed};
  const auto states = encode_rows(fm, x_train);
  const auto inv = fm.inverse();

  parallel_for(d, [&](std::size_t i) {
    k.values(i, i) = 1.0;
    for (std::size_t j = i + 1; j < d; ++j) {
      const double v =
          mode.shots == 0
              ? fidelity(states[i], states[j])
              : sampled_from_state(inv, x_train.row(j), states[i], mode.shots,
                                   derive_seed(mode.seed, i, j));
      k.values(i, j) = v;
      k.values(j, i) = v;
    }
  });
  return k;
}

KernelMatrix test_kernel_matrix(const encoding::FeatureMapSpec& spec,
                                const Matrix& x_train, const Matrix& x_test,
                                KernelMode mode) {
  check_width(spec, x_train, "train");
  check_width(spec, x_test, "test");
  const auto fm = encoding::build_pauli_feature_map(spec);
  KernelMatrix k{Matrix(x_test.rows(), x_train.rows(), 0.0), KernelKind::kTest,
                 spec.hash(), mode.shots, mode.seed};
  const auto test_states = encode_rows(fm, x_test);
  std::vector<sim::Statevector> train_states;
  if (mode.shots == 0) train_states = encode_rows(fm, x_train);
  const auto inv = fm.inverse();

  parallel_for(x_test.rows(), [&](std::size_t i) {
    for (std::size_t j = 0; j < x_train.rows(); ++j) {
      k.values(i, j) =
          mode.shots == 0
              ? fidelity(test_states[i], train_states[j])
              : sampled_from_state(inv, x_train.row(j), test_states[i], mode.shots,
                                   derive_seed(mode.seed, i, j));
    }
  });
  return k;
}

KernelReport validate_kernel(const Matrix& k) {
  require(k.rows() == k.cols() && k.rows() >= 1, ErrorCode::kDimension, kModule,
          "validate_kernel needs a non-empty square matrix, got " +
              std::to_string(k.rows()) + "x" + std::to_string(k.cols()));
  const std::size_t d = k.rows();
  KernelReport rep;
  rep.min_entry = k(0, 0);
  rep.max_entry = k(0, 0);
  Eigen::MatrixXd sym(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    rep.max_diagonal_deviation = std::max(rep.max_diagonal_deviation, std::abs(k(i, i) - 1.0));
    for (std::size_t j = 0; j < d; ++j) {
      const double v = k(i, j);
      require(std::isfinite(v), ErrorCode::kNumeric, kModule, "non-finite kernel entry");
      rep.min_entry = std::min(rep.min_entry, v);
      rep.max_entry = std::max(rep.max_entry, v);
      rep.max_asymmetry = std::max(rep.max_asymmetry, std::abs(v - k(j, i)));
      sym(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 0.5 * (v + k(j, i));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = solver.eigenvalues().minCoeff();

  constexpr double kTol = 1e-9;
  if (rep.max_asymmetry > kTol) rep.failures.push_back("asymmetry");
  if (rep.max_diagonal_deviation > kTol) rep.failures.push_back("diagonal");
  if (rep.min_entry < -kTol || rep.max_entry > 1.0 + kTol) rep.failures.push_back("range");
  if (rep.min_eigenvalue < -1e-6) rep.failures.push_back("not_psd");
  rep.pass = rep.failures.empty();
  return rep;
}

KernelReport validate_kernel(const KernelMatrix& k) {
  require(k.kind == KernelKind::kTrain, ErrorCode::kInvalidArgument, kModule,
          "validate_kernel expects a train kernel");
  return validate_kernel(k.values);
}

void save_kernel(const std::filesystem::path& path, const KernelMatrix& k) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorCode::kIo, kModule,
          "cannot open " + path.string() + " for writing");
  out << "QKM1 " << k.values.rows() << ' ' << k.values.cols() << ' ' << k.shots << ' '
      << k.seed << ' ' << k.fm_hash << '\n';
  for (double v : k.values.data()) {
    const std::uint64_t bits = to_le(std::bit_cast<std::uint64_t>(v));
    out.write(reinterpret_cast<const char*>(&bits), sizeof bits);
  }
  require(static_cast<bool>(out), ErrorCode::kIo, kModule, "write failed: " + path.string());
}

KernelMatrix load_kernel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::kIo, kModule, "cannot open " + path.string());
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string magic;
  std::size_t rows = 0, cols = 0;
  KernelMatrix k;
  hs >> magic >> rows >> cols >> k.shots >> k.seed >> k.fm_hash;
  require(!hs.fail() && magic == "QKM1", ErrorCode::kParse, kModule,
          path.string() + ": bad kernel header");
  k.values = Matrix(rows, cols);
  k.kind = rows == cols ? KernelKind::kTrain : KernelKind::kTest;
  for (double& v : k.values.data()) {
    std::uint64_t bits = 0;
    in.read(reinterpret_cast<char*>(&bits), sizeof bits);
    require(static_cast<bool>(in), ErrorCode::kParse, kModule,
            path.string() + ": truncated kernel payload");
    v = std::bit_cast<double>(to_le(bits));
  }
  return k;
}

}  // namespace qqc::kernel
