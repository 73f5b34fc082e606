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
 * Gauge relabelling that turns ring exciton states into columns of the
 * quantum Fourier transform, and the comparison of the 16-dimensional QFT
 * circuit against an 18-site ring.
 *
 * With |j> = e^{i l pi (1 - 1/N)} |l> and l = j - 1, the exciton |n~> times
 * e^{-2 i pi n / M} (M = 2N) equals the QFT of |k>, k = n + N - 1.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "ringqft/circuit.hpp"
#include "ringqft/errors.hpp"
#include "ringqft/exciton_ring.hpp"
#include "ringqft/types.hpp"

namespace ringqft {

/// e^{i l pi (1 - 1/N)} = e^{i pi l (N - 1) / N}, for 0 <= l <= 2N - 1.
template <typename Real = double>
Complex<Real> relabel_phase(int half_size, int l) {
  if (half_size < 1) throw RangeError("ring half-size must be >= 1, got " + std::to_string(half_size));
  detail::require_in_range("relabelled site l", l, 0, 2 * half_size - 1);
  return unit_root<Real>(std::int64_t(l) * (half_size - 1), half_size);
}

inline int k_from_n(int half_size, int n) {
  detail::require_in_range("quantum number n", n, -half_size + 1, half_size);
  return n + half_size - 1;
}

inline int n_from_k(int half_size, int k) {
  detail::require_in_range("QFT index k", k, 0, 2 * half_size - 1);
  return k - half_size + 1;
}

/// Global phase e^{-2 i (k - M/2 + 1) pi / M} = e^{-2 i pi n / M} carried by
/// the exciton side of the equivalence.
template <typename Real = double>
Complex<Real> equivalence_phase(int half_size, int n) {
  return unit_root<Real>(-std::int64_t(n), half_size);
}

/// Exciton |n~> written in the relabelled basis and multiplied by the
/// equivalence phase. Equals column k_from_n(n) of the size-2N DFT.
template <typename Real>
ComplexVector<Real> mapped_exciton(const RingModel<Real>& model, int n) {
  ComplexVector<Real> site = exciton_state(model, n);
  const int m = model.ring_size();
  const Complex<Real> global = equivalence_phase<Real>(model.half_size, n);
  ComplexVector<Real> mapped(m);
  for (int l = 0; l < m; ++l) {
    // Coefficient of |l> picks up the factor relating |j = l + 1> to |l>.
    mapped(l) = global * site(l) * relabel_phase<Real>(model.half_size, l);
  }
  return mapped;
}

template <typename Real = double>
struct EquivalenceEntry {
  int k = 0;
  int n = 0;
  Real fidelity = 0;
  Real phase_error = 0;
  Real residual = 0;  ///< max componentwise |mapped - DFT column|
};

template <typename Real = double>
struct EquivalenceReport {
  int half_size = 0;
  std::vector<EquivalenceEntry<Real>> per_k;
  Real min_fidelity = 1;
  Real max_phase_error = 0;
  Real max_residual = 0;

  /// Fidelity deficit, phase error and residual all within `tolerance`.
  bool verified(Real tolerance) const {
    return Real(1) - min_fidelity <= tolerance && max_phase_error <= tolerance &&
           max_residual <= tolerance;
  }
};

/// Compares every mapped exciton against the matching DFT column:
/// fidelity = |<F_k, v>|, phase_error = |arg <F_k, v>|.
template <typename Real>
EquivalenceReport<Real> verify_equivalence(const RingModel<Real>& model) {
  const int m = model.ring_size();
  const ComplexMatrix<Real> dft = dft_matrix<Real>(m);
  EquivalenceReport<Real> report;
  report.half_size = model.half_size;
  report.per_k.reserve(m);
  for (int k = 0; k < m; ++k) {
    const int n = n_from_k(model.half_size, k);
    const ComplexVector<Real> mapped = mapped_exciton(model, n);
    const Complex<Real> overlap = dft.col(k).dot(mapped);  // conjugates the left side
    EquivalenceEntry<Real> e{k, n, std::abs(overlap), std::abs(std::arg(overlap)),
                             max_abs_diff(mapped, dft.col(k))};
    report.min_fidelity = std::min(report.min_fidelity, e.fidelity);
    report.max_phase_error = std::max(report.max_phase_error, e.phase_error);
    report.max_residual = std::max(report.max_residual, e.residual);
    report.per_k.push_back(e);
  }
  return report;
}

template <typename Real = double>
struct ApproxEntry {
  int k = 0;
  int best_match_j = 0;
  Real fidelity = 0;
};

template <typename Real = double>
struct ApproxReport {
  int target_size = 0;
  int circuit_qubits = 0;
  /// log2(target_size); 1 + 2 log 3 / log 2 = 4.169925001... for 18 sites.
  Real fractional_qubits = 0;
  std::vector<ApproxEntry<Real>> rows;
  Real mean_fidelity = 0;
  Real min_fidelity = 0;
};

/// Zero-pads each column of the circuit_qubits QFT circuit to target_size
/// components and, for every ring state k, reports the best |inner product|
/// over the padded columns. Overlaps within 1e-12 of each other count as a
/// tie and the lowest column index wins. Ring states are
/// the mapped excitons for even target_size and DFT columns otherwise.
template <typename Real = double>
ApproxReport<Real> approximation_report(int target_size = 18, int circuit_qubits = 4) {
  check_state_capacity(circuit_qubits, kMaxDenseQubits);
  const auto circuit_dim = Eigen::Index(register_dimension(circuit_qubits));
  if (target_size < circuit_dim) {
    throw RangeError("target size " + std::to_string(target_size) +
                     " smaller than circuit dimension " + std::to_string(circuit_dim));
  }

  ComplexMatrix<Real> padded = ComplexMatrix<Real>::Zero(target_size, circuit_dim);
  padded.topRows(circuit_dim) = circuit_unitary<Real>(qft_circuit(circuit_qubits));

  ComplexMatrix<Real> ring(target_size, target_size);
  if (target_size % 2 == 0) {
    const RingModel<Real> model(target_size / 2);
    for (int k = 0; k < target_size; ++k) {
      ring.col(k) = mapped_exciton(model, n_from_k(model.half_size, k));
    }
  } else {
    ring = dft_matrix<Real>(target_size);
  }

  ApproxReport<Real> report;
  report.target_size = target_size;
  report.circuit_qubits = circuit_qubits;
  report.fractional_qubits = std::log2(Real(target_size));
  report.min_fidelity = Real(1);
  Real total = 0;
  for (int k = 0; k < target_size; ++k) {
    ApproxEntry<Real> best{k, 0, Real(-1)};
    for (Eigen::Index j = 0; j < circuit_dim; ++j) {
      const Real f = std::abs(padded.col(j).dot(ring.col(k)));
      if (f > best.fidelity + Real(1e-12)) best = {k, int(j), f};
    }
    total += best.fidelity;
    report.min_fidelity = std::min(report.min_fidelity, best.fidelity);
    report.rows.push_back(best);
  }
  report.mean_fidelity = total / Real(target_size);
  return report;
}

}  // namespace ringqft
