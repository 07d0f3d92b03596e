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

#include "svm/svm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "common/error.hpp"

namespace qqc::svm {

namespace {

constexpr std::string_view kModule = "svm-solver";
constexpr double kTau = 1e-12;

bool in_up(int y, double a, double C) { return (y > 0 && a < C) || (y < 0 && a > 0); }
bool in_low(int y, double a, double C) { return (y < 0 && a < C) || (y > 0 && a > 0); }

double objective_from_gradient(std::span<const double> alpha, std::span<const double> g) {
  double acc = 0.0;
  for (std::size_t t = 0; t < alpha.size(); ++t) acc += alpha[t] * (g[t] - 1.0);
  return -0.5 * acc;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SvmModel solve_dual(const Matrix& k, std::span<const int> labels01, double C,
                    const SolverOptions& options) {
  const std::size_t d = labels01.size();
  require(k.rows() == k.cols(), ErrorCode::kDimension, kModule, "kernel is not square");
  require(k.rows() == d, ErrorCode::kDimension, kModule,
          "kernel is " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
              " but there are " + std::to_string(d) + " labels");
  require(C > 0.0 && std::isfinite(C), ErrorCode::kInvalidArgument, kModule,
          "C must be positive and finite");
  for (double v : k.data())
    require(std::isfinite(v), ErrorCode::kNumeric, kModule, "non-finite kernel entry");

  std::vector<int> y(d);
  bool has_pos = false, has_neg = false;
  for (std::size_t t = 0; t < d; ++t) {
    require(labels01[t] == 0 || labels01[t] == 1, ErrorCode::kInvalidArgument, kModule,
            "labels must be 0 or 1");
    y[t] = labels01[t] == 1 ? 1 : -1;
    (y[t] > 0 ? has_pos : has_neg) = true;
  }
  require(has_pos && has_neg, ErrorCode::kData, kModule,
          "training labels contain a single class");

  auto q = [&](std::size_t a, std::size_t b) {
    return static_cast<double>(y[a] * y[b]) * k(a, b);
  };

  std::vector<double> alpha(d, 0.0);
  std::vector<double> g(d, -1.0);  // gradient of 1/2 a^T Q a - e^T a
  SvmModel model;
  model.C = C;

  std::size_t iter = 0;
  while (true) {
    double m = -std::numeric_limits<double>::infinity();
    double big_m = std::numeric_limits<double>::infinity();
    std::size_t i = d, j = d;
    for (std::size_t t = 0; t < d; ++t) {
      const double v = -static_cast<double>(y[t]) * g[t];
      if (in_up(y[t], alpha[t], C) && v > m) {
        m = v;
        i = t;
      }
      if (in_low(y[t], alpha[t], C) && v < big_m) {
        big_m = v;
        j = t;
      }
    }
    if (i == d || j == d || m - big_m < options.kkt_tolerance) {
      model.converged = true;
      break;
    }
    if (iter >= options.max_pair_iterations) break;
    ++iter;

    const double old_i = alpha[i], old_j = alpha[j];
    const double qii = q(i, i), qjj = q(j, j), qij = q(i, j);
    if (y[i] != y[j]) {
      double quad = qii + qjj + 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (-g[i] - g[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0.0) {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = -diff;
      }
      if (diff > 0.0) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = C - diff;
        }
      } else if (alpha[j] > C) {
        alpha[j] = C;
        alpha[i] = C + diff;
      }
    } else {
      double quad = qii + qjj - 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (g[i] - g[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > C) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = sum - C;
        }
        if (alpha[j] > C) {
          alpha[j] = C;
          alpha[i] = sum - C;
        }
      } else {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = sum;
        }
        if (alpha[i] < 0.0) {
          alpha[i] = 0.0;
          alpha[j] = sum;
        }
      }
    }

    const double di = alpha[i] - old_i, dj = alpha[j] - old_j;
    for (std::size_t t = 0; t < d; ++t) g[t] += q(t, i) * di + q(t, j) * dj;
    if (options.trace) options.trace->push_back(objective_from_gradient(alpha, g));
  }
  model.iterations = iter;

  double free_sum = 0.0;
  std::size_t n_free = 0;
  double lb = -std::numeric_limits<double>::infinity();
  double ub = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < d; ++t) {
    const double v = -static_cast<double>(y[t]) * g[t];
    if (alpha[t] > 0.0 && alpha[t] < C) {
      free_sum += v;
      ++n_free;
    } else if ((y[t] > 0) == (alpha[t] <= 0.0)) {
      lb = std::max(lb, v);
    } else {
      ub = std::min(ub, v);
    }
  }
  if (n_free > 0) {
    model.bias = free_sum / static_cast<double>(n_free);
  } else if (std::isfinite(lb) && std::isfinite(ub)) {
    model.bias = 0.5 * (lb + ub);
  } else {
    model.bias = std::isfinite(lb) ? lb : ub;
  }

  model.alphas = std::move(alpha);
  model.labels_pm = std::move(y);
  for (std::size_t t = 0; t < d; ++t)
    if (model.alphas[t] > kSupportThreshold) model.support_indices.push_back(t);
  return model;
}

double dual_objective(const Matrix& k, std::span<const int> labels_pm,
                      std::span<const double> alphas) {
  const std::size_t d = alphas.size();
  require(labels_pm.size() == d && k.rows() == d && k.cols() == d, ErrorCode::kDimension,
          kModule, "dual_objective shape mismatch");
  double lin = 0.0, quad = 0.0;
  for (std::size_t a = 0; a < d; ++a) {
    lin += alphas[a];
    for (std::size_t b = 0; b < d; ++b)
      quad += alphas[a] * alphas[b] * labels_pm[a] * labels_pm[b] * k(a, b);
  }
  return lin - 0.5 * quad;
}

double decision_value(const SvmModel& model, std::span<const double> k_row) {
  require(k_row.size() == model.alphas.size(), ErrorCode::kDimension, kModule,
          "kernel row has " + std::to_string(k_row.size()) + " entries, model has " +
              std::to_string(model.alphas.size()) + " training points");
  double f = model.bias;
  for (std::size_t t = 0; t < k_row.size(); ++t)
    if (model.alphas[t] != 0.0) f += model.alphas[t] * model.labels_pm[t] * k_row[t];
  return f;
}

std::vector<int> predict(const SvmModel& model, const Matrix& k_test) {
  require(k_test.cols() == model.alphas.size(), ErrorCode::kDimension, kModule,
          "test kernel has " + std::to_string(k_test.cols()) + " columns, model has " +
              std::to_string(model.alphas.size()) + " training points");
  std::vector<int> out(k_test.rows());
  for (std::size_t r = 0; r < k_test.rows(); ++r)
    out[r] = decision_value(model, k_test.row(r)) > 0.0 ? 1 : 0;
  return out;
}

double accuracy(std::span<const int> predicted, std::span<const int> truth) {
  require(!truth.empty(), ErrorCode::kInvalidArgument, kModule, "accuracy of empty set");
  require(predicted.size() == truth.size(), ErrorCode::kDimension, kModule,
          "prediction/truth length mismatch");
  std::size_t hit = 0;
  for (std::size_t t = 0; t < truth.size(); ++t) hit += predicted[t] == truth[t];
  return static_cast<double>(hit) / static_cast<double>(truth.size());
}

void save_model(const std::filesystem::path& path, const SvmModel& model) {
  std::ofstream out(path, std::ios::trunc);
  require(static_cast<bool>(out), ErrorCode::kIo, kModule,
          "cannot open " + path.string() + " for writing");
  out << "SVM1\n";
  out << "C " << fmt17(model.C) << '\n';
  out << "bias " << fmt17(model.bias) << '\n';
  out << "n_train " << model.alphas.size() << '\n';
  out << "support " << model.support_indices.size() << '\n';
  for (std::size_t idx : model.support_indices)
    out << idx << ' ' << fmt17(model.alphas[idx]) << ' ' << model.labels_pm[idx] << '\n';
  require(static_cast<bool>(out), ErrorCode::kIo, kModule, "write failed: " + path.string());
}

SvmModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, kModule, "cannot open " + path.string());
  auto bad = [&](const std::string& what) {
    fail(ErrorCode::kParse, kModule, path.string() + ": " + what);
  };
  std::string magic, key;
  if (!(in >> magic) || magic != "SVM1") bad("missing SVM1 header");
  SvmModel m;
  std::size_t n = 0, n_support = 0;
  if (!(in >> key >> m.C) || key != "C") bad("expected C");
  if (!(in >> key >> m.bias) || key != "bias") bad("expected bias");
  if (!(in >> key >> n) || key != "n_train") bad("expected n_train");
  if (!(in >> key >> n_support) || key != "support") bad("expected support");
  m.alphas.assign(n, 0.0);
  m.labels_pm.assign(n, 1);
  for (std::size_t s = 0; s < n_support; ++s) {
    std::size_t idx = 0;
    double a = 0.0;
    int label = 0;
    if (!(in >> idx >> a >> label)) bad("truncated support list");
    if (idx >= n || (label != 1 && label != -1)) bad("invalid support line");
    m.alphas[idx] = a;
    m.labels_pm[idx] = label;
    m.support_indices.push_back(idx);
  }
  m.converged = true;
  return m;
}

}  // namespace qqc::svm
