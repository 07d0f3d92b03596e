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

#ifndef QQC_TESTS_ORACLE_HPP
#define QQC_TESTS_ORACLE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "common/matrix.hpp"
#include "common/rng.hpp"
#include "sim/gate.hpp"
#include "sim/statevector.hpp"

namespace qqc::testing {

using C = std::complex<double>;
using Dense = std::vector<std::vector<C>>;

inline Dense identity(std::size_t d) {
  Dense m(d, std::vector<C>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1.0;
  return m;
}

inline Dense pauli_matrix(sim::Pauli p) {
  const C i(0.0, 1.0);
  switch (p) {
    case sim::Pauli::X: return {{0.0, 1.0}, {1.0, 0.0}};
    case sim::Pauli::Y: return {{0.0, -i}, {i, 0.0}};
    case sim::Pauli::Z: return {{1.0, 0.0}, {0.0, -1.0}};
  }
  return identity(2);
}

/// Local operator with local bit k acting on gate.targets[k].
inline Dense local_matrix(const sim::Gate& g) {
  const C i(0.0, 1.0);
  const double t = g.angle;
  const double r = 1.0 / std::sqrt(2.0);
  using K = sim::GateKind;
  switch (g.kind) {
    case K::H: return {{r, r}, {r, -r}};
    case K::X: return pauli_matrix(sim::Pauli::X);
    case K::Y: return pauli_matrix(sim::Pauli::Y);
    case K::Z: return pauli_matrix(sim::Pauli::Z);
    case K::RX:
      return {{std::cos(t / 2), -i * std::sin(t / 2)}, {-i * std::sin(t / 2), std::cos(t / 2)}};
    case K::RY: return {{std::cos(t / 2), -std::sin(t / 2)}, {std::sin(t / 2), std::cos(t / 2)}};
    case K::RZ: return {{std::exp(-i * (t / 2)), 0.0}, {0.0, std::exp(i * (t / 2))}};
    case K::Phase: return {{1.0, 0.0}, {0.0, std::exp(i * t)}};
    case K::CX: {
      Dense m = identity(4);
      m[1][1] = 0.0;
      m[3][3] = 0.0;
      m[3][1] = 1.0;
      m[1][3] = 1.0;
      return m;
    }
    case K::CZ: {
      Dense m = identity(4);
      m[3][3] = -1.0;
      return m;
    }
    case K::PauliRotation: {
      const std::size_t k = g.paulis.size();
      const std::size_t d = std::size_t{1} << k;
      Dense p(d, std::vector<C>(d, 0.0));
      for (std::size_t out = 0; out < d; ++out) {
        for (std::size_t in = 0; in < d; ++in) {
          C v = 1.0;
          for (std::size_t b = 0; b < k; ++b)
            v *= pauli_matrix(g.paulis[b])[(out >> b) & 1U][(in >> b) & 1U];
          p[out][in] = v;
        }
      }
      Dense m(d, std::vector<C>(d, 0.0));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          m[a][b] = (a == b ? std::cos(t) : 0.0) + i * std::sin(t) * p[a][b];
      return m;
    }
  }
  return identity(2);
}

/// Full 2^n operator of a gate, built element by element.
inline Dense full_matrix(const sim::Gate& g, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const Dense m = local_matrix(g);
  std::uint64_t mask = 0;
  for (int q : g.targets) mask |= std::uint64_t{1} << q;
  Dense u(dim, std::vector<C>(dim, 0.0));
  auto local = [&](std::uint64_t idx) {
    std::size_t l = 0;
    for (std::size_t b = 0; b < g.targets.size(); ++b)
      l |= ((idx >> g.targets[b]) & 1U) << b;
    return l;
  };
  for (std::uint64_t out = 0; out < dim; ++out)
    for (std::uint64_t in = 0; in < dim; ++in)
      if ((out & ~mask) == (in & ~mask)) u[out][in] = m[local(out)][local(in)];
  return u;
}

inline std::vector<C> mat_vec(const Dense& u, std::span<const C> v) {
  std::vector<C> out(u.size(), 0.0);
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += u[r][c] * v[c];
  return out;
}

/// Cyclic Jacobi eigenvalues of a symmetric matrix.
inline std::vector<double> jacobi_eigenvalues(Matrix a, int sweeps = 100) {
  const std::size_t n = a.rows();
  for (int s = 0; s < sweeps; ++s) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  return ev;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qqc_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::filesystem::path source_path(const std::string& rel) {
  return std::filesystem::path(QQC_SOURCE_DIR) / rel;
}

inline sim::Statevector random_state(int n, Rng& rng) {
  std::vector<sim::Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = sim::Complex(rng.normal(), rng.normal());
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return sim::Statevector::from_amplitudes(std::move(amps));
}

inline std::vector<sim::Gate> all_gates(int n, double angle) {
  std::vector<sim::Gate> gates;
  for (int q = 0; q < n; ++q) {
    for (auto k : {sim::GateKind::H, sim::GateKind::X, sim::GateKind::Y, sim::GateKind::Z})
      gates.push_back(sim::Gate::single(k, q));
    for (auto k : {sim::GateKind::RX, sim::GateKind::RY, sim::GateKind::RZ, sim::GateKind::Phase})
      gates.push_back(sim::Gate::single(k, q, angle));
    gates.push_back(sim::Gate::pauli_rotation({sim::Pauli::X}, {q}, angle));
    gates.push_back(sim::Gate::pauli_rotation({sim::Pauli::Y}, {q}, angle));
    gates.push_back(sim::Gate::pauli_rotation({sim::Pauli::Z}, {q}, angle));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      gates.push_back(sim::Gate::two(sim::GateKind::CX, a, b));
      gates.push_back(sim::Gate::two(sim::GateKind::CZ, a, b));
      for (const char* w : {"ZZ", "XY", "YX", "XX", "YZ"})
        gates.push_back(sim::Gate::pauli_rotation(sim::parse_pauli_word(w), {a, b}, angle));
    }
  }
  if (n == 3) {
    gates.push_back(sim::Gate::pauli_rotation(sim::parse_pauli_word("XYZ"), {0, 1, 2}, angle));
    gates.push_back(sim::Gate::pauli_rotation(sim::parse_pauli_word("ZZX"), {2, 0, 1}, angle));
  }
  return gates;
}

inline Matrix random_points(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (double& v : m.data()) v = rng.uniform(0.0, std::numbers::pi / 2.0);
  return m;
}

struct DepthFixture {
  std::string classifier;
  int exp = 0, features = 0, fm_reps = 0, qc_reps = 0;
  std::vector<std::string> words;
  int fm_depth = 0, qc_depth = 0, total = 0;
};

/// Rows of tests/data/depth_fixtures.tsv; "-" cells read as -1.
inline std::vector<DepthFixture> depth_fixtures() {
  std::ifstream in(source_path("tests/data/depth_fixtures.tsv"));
  std::vector<DepthFixture> out;
  std::string line;
  auto num = [](const std::string& s) { return s == "-" ? -1 : std::stoi(s); };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::vector<std::string> c;
    std::string cell;
    while (std::getline(ss, cell, '\t')) c.push_back(cell);
    DepthFixture f{c[0], num(c[1]), num(c[2]), num(c[3]), num(c[4]),
                   {},   num(c[6]), num(c[7]), num(c[8])};
    std::stringstream ws(c[5]);
    while (std::getline(ws, cell, ',')) f.words.push_back(cell);
    out.push_back(f);
  }
  return out;
}

}  // namespace qqc::testing

#endif  // QQC_TESTS_ORACLE_HPP
