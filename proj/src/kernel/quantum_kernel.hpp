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

#ifndef QQC_KERNEL_QUANTUM_KERNEL_HPP
#define QQC_KERNEL_QUANTUM_KERNEL_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "common/matrix.hpp"
#include "encoding/feature_map.hpp"

namespace qqc::kernel {

enum class KernelKind { kTrain, kTest };

/// shots == 0 selects exact statevector overlaps.
struct KernelMode {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

struct KernelMatrix {
  Matrix values;
  KernelKind kind = KernelKind::kTrain;
  std::uint64_t fm_hash = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

/// |<psi(x_i)|psi(x_j)>|^2.
double kernel_entry_exact(const encoding::FeatureMapSpec& spec,
                          std::span<const double> x_i, std::span<const double> x_j);

/// Runs U^dagger(x_j) U(x_i) on |0...0> and returns the all-zeros frequency.
double kernel_entry_sampled(const encoding::FeatureMapSpec& spec,
                            std::span<const double> x_i, std::span<const double> x_j,
                            std::uint64_t shots, std::uint64_t seed);

/// Symmetric Gram matrix; only i < j is simulated, the diagonal is 1.
/// Pair (i, j) in sampled mode uses derive_seed(mode.seed, i, j).
KernelMatrix train_kernel_matrix(const encoding::FeatureMapSpec& spec,
                                 const Matrix& x_train, KernelMode mode = {});

/// Rows are test points, columns train points.
KernelMatrix test_kernel_matrix(const encoding::FeatureMapSpec& spec,
                                const Matrix& x_train, const Matrix& x_test,
                                KernelMode mode = {});

struct KernelReport {
  double max_asymmetry = 0.0;
  double max_diagonal_deviation = 0.0;
  double min_entry = 0.0;
  double max_entry = 0.0;
  double min_eigenvalue = 0.0;
  bool pass = true;
  std::vector<std::string> failures;
};

/// Symmetry, unit diagonal and [0, 1] range within 1e-9; FAIL when the
/// smallest eigenvalue of the symmetrized matrix is below -1e-6.
KernelReport validate_kernel(const KernelMatrix& k);
KernelReport validate_kernel(const Matrix& k);

/// "QKM1 rows cols shots seed fmhash\n" followed by row-major little-endian
/// doubles. A square matrix loads as train kind, anything else as test kind.
void save_kernel(const std::filesystem::path& path, const KernelMatrix& k);
KernelMatrix load_kernel(const std::filesystem::path& path);

}  // namespace qqc::kernel

#endif  // QQC_KERNEL_QUANTUM_KERNEL_HPP
