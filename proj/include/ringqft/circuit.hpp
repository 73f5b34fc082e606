// Copyright 2026 The ringqft Authors
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

/**
 * @file
 * Small state-vector simulator for circuits built from Hadamard,
 * controlled-R_p and SWAP gates, plus the quantum Fourier transform circuit
 * and the dense DFT it must reproduce.
 *
 * Qubit 0 is the most significant bit of the amplitude index, so for
 * |k> = |k_1 k_2 ... k_n> qubit q holds k_{q+1}.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ringqft/errors.hpp"
#include "ringqft/types.hpp"

namespace ringqft {

/// Largest register a StateVector may hold.
inline constexpr int kMaxStateQubits = 24;
/// Largest register for which a dense unitary is materialised.
inline constexpr int kMaxDenseQubits = 12;

struct Hadamard {
  int target = 0;
  bool operator==(const Hadamard&) const = default;
};

/// R_p = diag(1, e^{2 i pi / 2^p}) on `target`, applied when `control` is 1.
struct ControlledPhase {
  int control = 0;
  int target = 0;
  int p = 2;
  bool operator==(const ControlledPhase&) const = default;
};

struct Swap {
  int a = 0;
  int b = 0;
  bool operator==(const Swap&) const = default;
};

using Gate = std::variant<Hadamard, ControlledPhase, Swap>;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

inline std::string gate_name(const Gate& gate) {
  return std::visit(Overloaded{[](const Hadamard&) { return std::string("H"); },
                               [](const ControlledPhase&) { return std::string("CRp"); },
                               [](const Swap&) { return std::string("SWAP"); }},
                    gate);
}

/// Qubits a gate touches; controls come before targets.
inline std::vector<int> gate_qubits(const Gate& gate) {
  return std::visit(
      Overloaded{[](const Hadamard& g) { return std::vector<int>{g.target}; },
                 [](const ControlledPhase& g) { return std::vector<int>{g.control, g.target}; },
                 [](const Swap& g) { return std::vector<int>{g.a, g.b}; }},
      gate);
}

inline void validate_gate(const Gate& gate, int n_qubits) {
  for (int q : gate_qubits(gate)) {
    detail::require_in_range("qubit index", q, 0, n_qubits - 1);
  }
  if (const auto* cp = std::get_if<ControlledPhase>(&gate)) {
    if (cp->control == cp->target) {
      throw RangeError("controlled phase needs distinct control and target, both are " +
                       std::to_string(cp->target));
    }
    detail::require_in_range("phase order p", cp->p, 2, 62);
  }
  if (const auto* sw = std::get_if<Swap>(&gate); sw != nullptr && sw->a == sw->b) {
    throw RangeError("swap needs distinct qubits, both are " + std::to_string(sw->a));
  }
}

class Circuit {
 public:
  explicit Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw RangeError("circuit needs at least one qubit");
  }

  Circuit& append(const Gate& gate) {
    validate_gate(gate, n_qubits_);
    gates_.push_back(gate);
    return *this;
  }

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  bool operator==(const Circuit&) const = default;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
};

inline std::uint64_t register_dimension(int n_qubits) { return std::uint64_t{1} << n_qubits; }

inline void check_state_capacity(int n_qubits, int bound = kMaxStateQubits) {
  if (n_qubits < 1 || n_qubits > bound) {
    throw CapacityError("register of " + std::to_string(n_qubits) +
                        " qubits outside supported range [1, " + std::to_string(bound) + "]");
  }
}

/// Amplitudes of an n-qubit register. Callers keep the vector normalised;
/// gate application preserves the norm.
template <typename Real = double>
class StateVector {
 public:
  StateVector(int n_qubits, ComplexVector<Real> amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_state_capacity(n_qubits);
    if (std::uint64_t(amplitudes_.size()) != register_dimension(n_qubits)) {
      throw RangeError("state of " + std::to_string(n_qubits) + " qubits needs " +
                       std::to_string(register_dimension(n_qubits)) + " amplitudes, got " +
                       std::to_string(amplitudes_.size()));
    }
  }

  /// Computational basis state |k>.
  static StateVector basis(int n_qubits, std::int64_t k) {
    check_state_capacity(n_qubits);
    detail::require_in_range("basis index k", k, 0,
                             std::int64_t(register_dimension(n_qubits)) - 1);
    ComplexVector<Real> v = ComplexVector<Real>::Zero(Eigen::Index(register_dimension(n_qubits)));
    v(k) = Real(1);
    return StateVector(n_qubits, std::move(v));
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  const ComplexVector<Real>& amplitudes() const { return amplitudes_; }
  ComplexVector<Real>& amplitudes() { return amplitudes_; }
  Real norm() const { return amplitudes_.norm(); }

 private:
  int n_qubits_;
  ComplexVector<Real> amplitudes_;
};

namespace detail {

inline std::uint64_t qubit_mask(int n_qubits, int q) {
  return std::uint64_t{1} << (n_qubits - 1 - q);
}

/// Applies `gate` to the amplitude index (row) of `m`. For a state vector
/// that is the usual update; for a matrix it acts on every column at once.
template <typename Derived>
void apply_in_place(Eigen::MatrixBase<Derived>& m, int n_qubits, const Gate& gate) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const std::uint64_t dim = register_dimension(n_qubits);
  std::visit(
      Overloaded{
          [&](const Hadamard& g) {
            const std::uint64_t mask = qubit_mask(n_qubits, g.target);
            const Real s = Real(1) / std::sqrt(Real(2));
            for (std::uint64_t i = 0; i < dim; ++i) {
              if (i & mask) continue;
              const auto a = m.row(i).eval();
              const auto b = m.row(i | mask).eval();
              m.row(i) = s * (a + b);
              m.row(i | mask) = s * (a - b);
            }
          },
          [&](const ControlledPhase& g) {
            const std::uint64_t both = qubit_mask(n_qubits, g.control) | qubit_mask(n_qubits, g.target);
            // e^{2 i pi / 2^p} = e^{i pi / 2^{p-1}}
            const Scalar phase = unit_root<Real>(1, std::int64_t{1} << (g.p - 1));
            for (std::uint64_t i = 0; i < dim; ++i) {
              if ((i & both) == both) m.row(i) *= phase;
            }
          },
          [&](const Swap& g) {
            const std::uint64_t ma = qubit_mask(n_qubits, g.a);
            const std::uint64_t mb = qubit_mask(n_qubits, g.b);
            for (std::uint64_t i = 0; i < dim; ++i) {
              if ((i & ma) && !(i & mb)) m.row(i).swap(m.row(i ^ ma ^ mb));
            }
          }},
      gate);
}

}  // namespace detail

template <typename Real>
StateVector<Real> apply_gate(StateVector<Real> state, const Gate& gate) {
  validate_gate(gate, state.n_qubits());
  detail::apply_in_place(state.amplitudes(), state.n_qubits(), gate);
  return state;
}

template <typename Real>
StateVector<Real> apply_circuit(StateVector<Real> state, const Circuit& circuit) {
  if (circuit.n_qubits() != state.n_qubits()) {
    throw RangeError("circuit on " + std::to_string(circuit.n_qubits()) +
                     " qubits applied to a " + std::to_string(state.n_qubits()) + "-qubit state");
  }
  for (const Gate& gate : circuit.gates()) {
    detail::apply_in_place(state.amplitudes(), state.n_qubits(), gate);
  }
  return state;
}

/// Per-qubit blocks of the QFT before the final swaps: block q is H on q
/// followed by R_2 .. R_{n-q} controlled by qubits q+1 .. n-1.
inline std::vector<std::vector<Gate>> qft_blocks(int n, int bound = kMaxStateQubits) {
  check_state_capacity(n, bound);
  std::vector<std::vector<Gate>> blocks(n);
  for (int q = 0; q < n; ++q) {
    blocks[q].push_back(Hadamard{q});
    for (int c = 1; c <= n - 1 - q; ++c) {
      blocks[q].push_back(ControlledPhase{q + c, q, c + 1});
    }
  }
  return blocks;
}

/// QFT circuit: the per-qubit blocks followed by SWAP(q, n-1-q) for q < n/2.
inline Circuit qft_circuit(int n, int bound = kMaxStateQubits) {
  const auto blocks = qft_blocks(n, bound);
  Circuit circuit(n);
  for (const auto& block : blocks) {
    for (const Gate& gate : block) circuit.append(gate);
  }
  for (int q = 0; q < n / 2; ++q) circuit.append(Swap{q, n - 1 - q});
  return circuit;
}

/// Dense unitary of a circuit; column k is the circuit applied to |k>. The
/// gates act on the identity's rows, so all columns advance together.
template <typename Real = double>
ComplexMatrix<Real> circuit_unitary(const Circuit& circuit, int bound = kMaxDenseQubits) {
  if (circuit.n_qubits() > bound) {
    throw CapacityError("dense unitary of " + std::to_string(circuit.n_qubits()) +
                        " qubits exceeds bound of " + std::to_string(bound));
  }
  const auto dim = Eigen::Index(register_dimension(circuit.n_qubits()));
  ComplexMatrix<Real> u = ComplexMatrix<Real>::Identity(dim, dim);
  for (const Gate& gate : circuit.gates()) detail::apply_in_place(u, circuit.n_qubits(), gate);
  return u;
}

/// Entry (k, j) = e^{+2 pi i j k / M} / sqrt(M). The positive exponent is
/// the forward transform throughout this library; the inverse is the adjoint.
template <typename Real = double>
ComplexMatrix<Real> dft_matrix(int m) {
  if (m < 1) throw RangeError("DFT size must be >= 1, got " + std::to_string(m));
  const Real scale = Real(1) / std::sqrt(Real(m));
  ComplexMatrix<Real> f(m, m);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      f(k, j) = scale * unit_root<Real>(2 * std::int64_t(j) * k, m);
    }
  }
  return f;
}

/// Tensor product over qubits q = 0..n-1 of (|0> + e^{2 i pi 0.k_{n-q}...k_n}|1>)/sqrt(2),
/// i.e. the product-form QFT of |k>.
template <typename Real = double>
StateVector<Real> product_state(int n, std::int64_t k) {
  check_state_capacity(n);
  detail::require_in_range("basis index k", k, 0, std::int64_t(register_dimension(n)) - 1);
  const Real s = Real(1) / std::sqrt(Real(2));
  ComplexVector<Real> v = ComplexVector<Real>::Constant(1, Complex<Real>(1));
  for (int q = 0; q < n; ++q) {
    // 0.k_{n-q}...k_n = (k mod 2^{q+1}) / 2^{q+1}
    const std::int64_t low = k & ((std::int64_t{1} << (q + 1)) - 1);
    const Complex<Real> phase = unit_root<Real>(low, std::int64_t{1} << q);
    ComplexVector<Real> next(2 * v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = s * v(i);
      next(2 * i + 1) = s * phase * v(i);
    }
    v = std::move(next);
  }
  return StateVector<Real>(n, std::move(v));
}

/// Applies the QFT blocks to |k> one at a time and returns the state after
/// each block (n states, the last one before the swaps).
template <typename Real = double>
std::vector<StateVector<Real>> staged_apply(std::int64_t k, int n) {
  auto state = StateVector<Real>::basis(n, k);
  std::vector<StateVector<Real>> stages;
  stages.reserve(n);
  for (const auto& block : qft_blocks(n)) {
    for (const Gate& gate : block) detail::apply_in_place(state.amplitudes(), n, gate);
    stages.push_back(state);
  }
  return stages;
}

}  // namespace ringqft
