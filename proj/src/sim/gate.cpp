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

#include "sim/gate.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>

#include "common/error.hpp"

namespace qqc::sim {

namespace {

constexpr std::string_view kModule = "circuit-sim";

using Mat2 = std::array<Complex, 4>;  // row-major [m00, m01, m10, m11]

void apply_matrix(std::span<Complex> amps, int q, const Mat2& m) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = amps.size();
  for (std::size_t base = 0; base < dim; base += 2 * bit) {
    for (std::size_t k = base; k < base + bit; ++k) {
      const Complex a0 = amps[k];
      const Complex a1 = amps[k | bit];
      amps[k] = m[0] * a0 + m[1] * a1;
      amps[k | bit] = m[2] * a0 + m[3] * a1;
    }
  }
}

void apply_diagonal(std::span<Complex> amps, int q, Complex d0, Complex d1) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t k = 0; k < amps.size(); ++k) amps[k] *= (k & bit) ? d1 : d0;
}

void apply_cx(std::span<Complex> amps, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t k = 0; k < amps.size(); ++k)
    if ((k & cbit) && !(k & tbit)) std::swap(amps[k], amps[k | tbit]);
}

void apply_cz(std::span<Complex> amps, int a, int b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t k = 0; k < amps.size(); ++k)
    if ((k & mask) == mask) amps[k] = -amps[k];
}

// exp(i t P) = cos t I + i sin t P.
void apply_pauli_rotation(std::span<Complex> amps, const Gate& g) {
  std::size_t flip = 0, yz = 0;
  int n_y = 0;
  for (std::size_t k = 0; k < g.targets.size(); ++k) {
    const std::size_t bit = std::size_t{1} << g.targets[k];
    switch (g.paulis[k]) {
      case Pauli::X: flip |= bit; break;
      case Pauli::Y: flip |= bit; yz |= bit; ++n_y; break;
      case Pauli::Z: yz |= bit; break;
    }
  }
  const double c = std::cos(g.angle);
  const double s = std::sin(g.angle);

  if (flip == 0) {
    const Complex plus{c, s}, minus{c, -s};
    for (std::size_t k = 0; k < amps.size(); ++k)
      amps[k] *= (std::popcount(k & yz) & 1) ? minus : plus;
    return;
  }

  static constexpr std::array<Complex, 4> kIPow = {
      Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
  const Complex i_pow = kIPow[static_cast<std::size_t>(n_y % 4)];
  const Complex is{0.0, s};
  const std::size_t pivot = std::size_t{1} << std::countr_zero(flip);
  for (std::size_t k = 0; k < amps.size(); ++k) {
    if (k & pivot) continue;
    const std::size_t j = k ^ flip;
    // <k|P|j> and <j|P|k>: phase depends on the input basis index.
    const Complex ph_j = (std::popcount(j & yz) & 1) ? -i_pow : i_pow;
    const Complex ph_k = (std::popcount(k & yz) & 1) ? -i_pow : i_pow;
    const Complex ak = amps[k], aj = amps[j];
    amps[k] = c * ak + is * ph_j * aj;
    amps[j] = c * aj + is * ph_k * ak;
  }
}

int fixed_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ: return 2;
    case GateKind::PauliRotation: return -1;
    default: return 1;
  }
}

}  // namespace

bool is_parameterized(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::Phase:
    case GateKind::PauliRotation: return true;
    default: return false;
  }
}

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::Phase: return "p";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::PauliRotation: return "pauli";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  std::string lower(name);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (GateKind k : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z, GateKind::RX,
                     GateKind::RY, GateKind::RZ, GateKind::Phase, GateKind::CX,
                     GateKind::CZ, GateKind::PauliRotation})
    if (gate_kind_name(k) == lower) return k;
  if (lower == "phase") return GateKind::Phase;
  if (lower == "cnot") return GateKind::CX;
  return std::nullopt;
}

std::vector<Pauli> parse_pauli_word(std::string_view word) {
  require(!word.empty(), ErrorCode::kInvalidArgument, kModule, "empty Pauli word");
  std::vector<Pauli> out;
  out.reserve(word.size());
  for (char ch : word) {
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'X': out.push_back(Pauli::X); break;
      case 'Y': out.push_back(Pauli::Y); break;
      case 'Z': out.push_back(Pauli::Z); break;
      default:
        fail(ErrorCode::kInvalidArgument, kModule,
             "Pauli word '" + std::string(word) + "' has letter outside {X,Y,Z}");
    }
  }
  return out;
}

std::string pauli_word_string(const std::vector<Pauli>& word) {
  std::string s;
  for (Pauli p : word) s.push_back(static_cast<char>(p));
  return s;
}

void validate_gate(const Gate& gate, int n_qubits) {
  const int arity = fixed_arity(gate.kind);
  if (arity > 0) {
    require(static_cast<int>(gate.targets.size()) == arity, ErrorCode::kInvalidArgument,
            kModule,
            std::string(gate_kind_name(gate.kind)) + " expects " +
                std::to_string(arity) + " target(s)");
  } else {
    require(!gate.targets.empty(), ErrorCode::kInvalidArgument, kModule,
            "Pauli rotation without targets");
    require(gate.paulis.size() == gate.targets.size(), ErrorCode::kInvalidArgument,
            kModule,
            "Pauli rotation word length " + std::to_string(gate.paulis.size()) +
                " != target count " + std::to_string(gate.targets.size()));
  }
  for (std::size_t i = 0; i < gate.targets.size(); ++i) {
    const int q = gate.targets[i];
    require(q >= 0 && q < n_qubits, ErrorCode::kDimension, kModule,
            "target qubit " + std::to_string(q) + " outside a " +
                std::to_string(n_qubits) + "-qubit register");
    for (std::size_t j = 0; j < i; ++j)
      require(gate.targets[j] != q, ErrorCode::kInvalidArgument, kModule,
              "repeated target qubit " + std::to_string(q));
  }
  require(std::isfinite(gate.angle), ErrorCode::kNumeric, kModule,
          "non-finite gate angle");
}

void apply_gate_inplace(Statevector& state, const Gate& gate) {
  validate_gate(gate, state.num_qubits());
  auto amps = state.mutable_amplitudes();
  const double half = gate.angle / 2.0;
  switch (gate.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::numbers::sqrt2;
      apply_matrix(amps, gate.targets[0], {Complex{r}, Complex{r}, Complex{r}, Complex{-r}});
      break;
    }
    case GateKind::X:
      apply_matrix(amps, gate.targets[0], {Complex{0}, Complex{1}, Complex{1}, Complex{0}});
      break;
    case GateKind::Y:
      apply_matrix(amps, gate.targets[0],
                   {Complex{0}, Complex{0, -1}, Complex{0, 1}, Complex{0}});
      break;
    case GateKind::Z:
      apply_diagonal(amps, gate.targets[0], Complex{1}, Complex{-1});
      break;
    case GateKind::RX: {
      const double c = std::cos(half), s = std::sin(half);
      apply_matrix(amps, gate.targets[0],
                   {Complex{c}, Complex{0, -s}, Complex{0, -s}, Complex{c}});
      break;
    }
    case GateKind::RY: {
      const double c = std::cos(half), s = std::sin(half);
      apply_matrix(amps, gate.targets[0], {Complex{c}, Complex{-s}, Complex{s}, Complex{c}});
      break;
    }
    case GateKind::RZ:
      apply_diagonal(amps, gate.targets[0], std::polar(1.0, -half), std::polar(1.0, half));
      break;
    case GateKind::Phase:
      apply_diagonal(amps, gate.targets[0], Complex{1}, std::polar(1.0, gate.angle));
      break;
    case GateKind::CX:
      apply_cx(amps, gate.targets[0], gate.targets[1]);
      break;
    case GateKind::CZ:
      apply_cz(amps, gate.targets[0], gate.targets[1]);
      break;
    case GateKind::PauliRotation:
      apply_pauli_rotation(amps, gate);
      break;
  }
}

Statevector apply_gate(const Statevector& state, const Gate& gate) {
  Statevector out = state;
  apply_gate_inplace(out, gate);
  return out;
}

Gate inverse_gate(const Gate& gate) {
  Gate inv = gate;
  if (is_parameterized(gate.kind)) inv.angle = -gate.angle;
  return inv;
}

}  // namespace qqc::sim
