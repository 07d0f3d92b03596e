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

#include "vqc/cobyla.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "common/error.hpp"

namespace qqc::vqc {

namespace {

constexpr std::string_view kModule = "vqc";

// Simplex acceptability and step constants as in Powell's COBYLA.
constexpr double kAlpha = 0.25;
constexpr double kBeta = 2.1;
constexpr double kGamma = 0.5;
constexpr double kDelta = 1.1;

}  // namespace

void OptimizerConfig::validate() const {
  require(max_iterations >= 1, ErrorCode::kInvalidArgument, kModule,
          "max_iterations must be >= 1");
  require(rhobeg > 0.0 && rhoend > 0.0 && rhoend < rhobeg, ErrorCode::kInvalidArgument,
          kModule, "need 0 < rhoend < rhobeg");
}

OptimizerResult cobyla_minimize(const Objective& objective, std::vector<double> x0,
                                const OptimizerConfig& config) {
  config.validate();
  const std::size_t n = x0.size();
  require(n >= 1, ErrorCode::kInvalidArgument, kModule, "empty starting point");
  require(config.max_iterations >= static_cast<int>(n) + 2, ErrorCode::kInvalidArgument,
          kModule,
          "max_iterations=" + std::to_string(config.max_iterations) +
              " cannot build a simplex in " + std::to_string(n) +
              " dimensions (need >= " + std::to_string(n + 2) + ")");

  OptimizerResult res;
  auto eval = [&](const Eigen::VectorXd& x) {
    const double v = objective(std::span<const double>(x.data(), n));
    require(std::isfinite(v), ErrorCode::kNumeric, kModule, "objective returned non-finite");
    ++res.evaluations;
    res.values.push_back(v);
    if (res.best_so_far.empty() || v < res.f_best) {
      res.f_best = v;
      res.x_best.assign(x.data(), x.data() + n);
    }
    res.best_so_far.push_back(res.f_best);
    return v;
  };
  const auto budget_left = [&] { return res.evaluations < config.max_iterations; };

  double rho = config.rhobeg;
  std::vector<Eigen::VectorXd> v(n + 1, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n)));
  std::vector<double> f(n + 1, 0.0);

  auto build_simplex = [&](const Eigen::VectorXd& base, double fbase) {
    v[0] = base;
    f[0] = fbase;
    for (std::size_t i = 0; i < n; ++i) {
      v[i + 1] = base;
      v[i + 1][static_cast<Eigen::Index>(i)] += rho;
      f[i + 1] = eval(v[i + 1]);
    }
  };
  {
    Eigen::VectorXd start = Eigen::Map<const Eigen::VectorXd>(x0.data(),
                                                              static_cast<Eigen::Index>(n));
    build_simplex(start, eval(start));
  }

  bool reduce_pending = false;
  auto reduce_rho = [&] {
    reduce_pending = false;
    if (rho <= config.rhoend) {
      res.converged = true;
      return false;
    }
    rho *= 0.5;
    if (rho <= 1.5 * config.rhoend) rho = config.rhoend;
    return true;
  };

  while (budget_left()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (f[i] < f[best]) best = i;
    if (best != 0) {
      std::swap(v[0], v[best]);
      std::swap(f[0], f[best]);
    }

    Eigen::MatrixXd d(n, n);
    Eigen::VectorXd df(n);
    for (std::size_t j = 0; j < n; ++j) {
      d.row(static_cast<Eigen::Index>(j)) = (v[j + 1] - v[0]).transpose();
      df[static_cast<Eigen::Index>(j)] = f[j + 1] - f[0];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
    if (!lu.isInvertible()) {
      if (res.evaluations + static_cast<int>(n) > config.max_iterations) break;
      build_simplex(v[0], f[0]);
      continue;
    }
    const Eigen::MatrixXd dinv = lu.inverse();
    const Eigen::VectorXd g = dinv * df;

    std::size_t worst_far = n, worst_flat = n;
    double far = kBeta * rho, flat = kAlpha * rho;
    for (std::size_t j = 0; j < n; ++j) {
      const double veta = d.row(static_cast<Eigen::Index>(j)).norm();
      const double vsig = 1.0 / dinv.col(static_cast<Eigen::Index>(j)).norm();
      if (veta > far) {
        far = veta;
        worst_far = j;
      }
      if (vsig < flat) {
        flat = vsig;
        worst_flat = j;
      }
    }
    if (worst_far != n || worst_flat != n) {
      const std::size_t j = worst_far != n ? worst_far : worst_flat;
      Eigen::VectorXd dir = dinv.col(static_cast<Eigen::Index>(j));
      dir /= dir.norm();
      if (g.dot(dir) > 0.0) dir = -dir;
      const Eigen::VectorXd x = v[0] + kGamma * rho * dir;
      v[j + 1] = x;
      f[j + 1] = eval(x);
      reduce_pending = false;
      continue;
    }
    if (reduce_pending) {
      if (!reduce_rho()) break;
      continue;
    }

    const double gn = g.norm();
    if (!(gn > 0.0)) {
      if (!reduce_rho()) break;
      continue;
    }
    const Eigen::VectorXd x = v[0] - (rho / gn) * g;
    const double fx = eval(x);
    const double predicted = rho * gn;
    const double actual = f[0] - fx;

    const Eigen::VectorXd lambda = dinv.transpose() * (x - v[0]);
    std::size_t drop = 0;
    double score = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double dist = (v[j + 1] - x).norm() / (kDelta * rho);
      const double s = std::abs(lambda[static_cast<Eigen::Index>(j)]) *
                       std::max(1.0, dist * dist);
      if (s > score) {
        score = s;
        drop = j;
      }
    }
    v[drop + 1] = x;
    f[drop + 1] = fx;
    if (actual < 0.1 * predicted) reduce_pending = true;
  }
  return res;
}

}  // namespace qqc::vqc
