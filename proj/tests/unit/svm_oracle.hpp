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

#ifndef QQC_TESTS_SVM_ORACLE_HPP
#define QQC_TESTS_SVM_ORACLE_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "common/matrix.hpp"
#include "common/rng.hpp"
#include "svm/svm.hpp"

namespace qqc::testing {

struct Instance {
  Matrix k;
  std::vector<int> labels01;
  std::vector<int> y;
  double C = 1.0;
};

inline Instance random_instance(Rng& rng) {
  Instance in;
  const std::size_t d = 2 + rng.below(5);
  std::vector<std::array<double, 2>> pts(d);
  for (auto& p : pts) p = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  in.k = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double dx = pts[i][0] - pts[j][0], dy = pts[i][1] - pts[j][1];
      in.k(i, j) = std::exp(-1.5 * (dx * dx + dy * dy));
    }
  in.labels01.resize(d);
  for (auto& l : in.labels01) l = static_cast<int>(rng.below(2));
  in.labels01[0] = 0;
  in.labels01[1] = 1;
  for (int l : in.labels01) in.y.push_back(l == 1 ? 1 : -1);
  in.C = rng.uniform(0.3, 3.0);
  return in;
}

/// Objective over the first d-1 coordinates; the last one follows from y^T a = 0.
inline double objective_or_nan(const Instance& in, const std::vector<double>& head) {
  const std::size_t d = in.y.size();
  std::vector<double> a(head);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < d; ++i) s += in.y[i] * a[i];
  const double last = -in.y[d - 1] * s;
  if (last < -1e-12 || last > in.C + 1e-12) return std::numeric_limits<double>::quiet_NaN();
  a.push_back(std::clamp(last, 0.0, in.C));
  return svm::dual_objective(in.k, in.y, a);
}

inline double grid_refine_oracle(const Instance& in) {
  const std::size_t m = in.y.size() - 1;
  const int steps = 8;
  std::vector<double> best_a(m, 0.0);
  double best = objective_or_nan(in, best_a);
  std::vector<int> idx(m, 0);
  while (true) {
    std::vector<double> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = in.C * idx[i] / steps;
    const double w = objective_or_nan(in, a);
    if (!std::isnan(w) && w > best) {
      best = w;
      best_a = a;
    }
    std::size_t p = 0;
    while (p < m && ++idx[p] > steps) idx[p++] = 0;
    if (p == m) break;
  }
  for (double h = in.C / steps; h > 1e-10; h *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      std::vector<int> off(m, -1);
      while (true) {
        std::vector<double> a(best_a);
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i) {
          a[i] += off[i] * h;
          ok = ok && a[i] >= 0.0 && a[i] <= in.C;
        }
        if (ok) {
          const double w = objective_or_nan(in, a);
          if (!std::isnan(w) && w > best + 1e-15) {
            best = w;
            best_a = a;
            improved = true;
          }
        }
        std::size_t p = 0;
        while (p < m && ++off[p] > 1) off[p++] = -1;
        if (p == m) break;
      }
    }
  }
  return best;
}

/// Enumerates every {0, C, free} pattern and solves the free block exactly.
inline double active_set_oracle(const Instance& in) {
  const std::size_t d = in.y.size();
  Eigen::MatrixXd q(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) q(i, j) = in.y[i] * in.y[j] * in.k(i, j);
  double best = -std::numeric_limits<double>::infinity();
  std::size_t patterns = 1;
  for (std::size_t i = 0; i < d; ++i) patterns *= 3;
  for (std::size_t code = 0; code < patterns; ++code) {
    std::vector<int> state(d);
    std::size_t c = code;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < d; ++i) {
      state[i] = static_cast<int>(c % 3);
      c /= 3;
      if (state[i] == 2) free.push_back(i);
    }
    std::vector<double> a(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      if (state[i] == 1) a[i] = in.C;
    if (!free.empty()) {
      const auto f = static_cast<Eigen::Index>(free.size());
      Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(f + 1, f + 1);
      Eigen::VectorXd rhs(f + 1);
      double fixed_sum = 0.0;
      for (std::size_t i = 0; i < d; ++i) fixed_sum += in.y[i] * a[i];
      for (Eigen::Index r = 0; r < f; ++r) {
        const auto i = free[static_cast<std::size_t>(r)];
        double known = 1.0;
        for (std::size_t j = 0; j < d; ++j) known -= q(i, j) * a[j];
        for (Eigen::Index s = 0; s < f; ++s) sys(r, s) = q(i, free[static_cast<std::size_t>(s)]);
        sys(r, f) = in.y[i];
        sys(f, r) = in.y[i];
        rhs(r) = known;
      }
      rhs(f) = -fixed_sum;
      Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
      if (!lu.isInvertible()) continue;
      const Eigen::VectorXd sol = lu.solve(rhs);
      for (Eigen::Index r = 0; r < f; ++r) a[free[static_cast<std::size_t>(r)]] = sol(r);
    }
    double eq = 0.0;
    bool feasible = true;
    for (std::size_t i = 0; i < d; ++i) {
      eq += in.y[i] * a[i];
      feasible = feasible && a[i] >= -1e-12 && a[i] <= in.C + 1e-12;
    }
    if (!feasible || std::abs(eq) > 1e-9) continue;
    best = std::max(best, svm::dual_objective(in.k, in.y, a));
  }
  return best;
}

}  // namespace qqc::testing

#endif  // QQC_TESTS_SVM_ORACLE_HPP
