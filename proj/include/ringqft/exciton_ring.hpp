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
 * Nearest-neighbour Frenkel exciton model of a circular aggregate of 2N
 * pigment sites. Sites are stored zero-based: site ket |j> (j = 1..2N) lives
 * at index j - 1.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "ringqft/errors.hpp"
#include "ringqft/types.hpp"

namespace ringqft {

/// Ring of 2N identical sites with on-site energy E0 and nearest-neighbour
/// coupling V0. Energies are dimensionless.
template <typename Real = double>
struct RingModel {
  int half_size = 8;
  Real site_energy = 0;
  Real coupling = 1;

  RingModel() = default;
  RingModel(int n, Real e0 = 0, Real v0 = 1) : half_size(n), site_energy(e0), coupling(v0) {
    if (n < 1) throw RangeError("ring half-size must be >= 1, got " + std::to_string(n));
  }

  int ring_size() const { return 2 * half_size; }
  int min_quantum_number() const { return -half_size + 1; }
  int max_quantum_number() const { return half_size; }
};

template <typename Real = double>
struct ExcitonEntry {
  int quantum_number = 0;
  Real energy = 0;
  ComplexVector<Real> state;
};

/// Entries ordered by ascending energy, ties by ascending quantum number.
template <typename Real = double>
struct ExcitonSpectrum {
  std::vector<ExcitonEntry<Real>> entries;
};

/// Energies closer than 1e-9 relative (absolute below 1) count as degenerate.
template <typename Real>
bool are_degenerate(Real a, Real b) {
  using std::abs;
  return abs(a - b) <= Real(1e-9) * std::max(Real(1), abs(a));
}

template <typename Real>
void check_quantum_number(const RingModel<Real>& model, int n) {
  detail::require_in_range("quantum number n", n, model.min_quantum_number(),
                           model.max_quantum_number());
}

/// Real symmetric circulant: E0 on the diagonal, V0 on both cyclic
/// neighbours. For N = 1 both neighbours are the same site, so the single
/// off-diagonal entry collects 2 V0.
template <typename Real>
ComplexMatrix<Real> build_hamiltonian(const RingModel<Real>& model) {
  const int m = model.ring_size();
  ComplexMatrix<Real> h = ComplexMatrix<Real>::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    h(j, j) += model.site_energy;
    h(j, (j + 1) % m) += model.coupling;
    h(j, (j + m - 1) % m) += model.coupling;
  }
  return h;
}

/// |n~> = (2N)^{-1/2} sum_{j=1}^{2N} e^{i j n pi / N} |j>.
template <typename Real>
ComplexVector<Real> exciton_state(const RingModel<Real>& model, int n) {
  check_quantum_number(model, n);
  const int m = model.ring_size();
  const Real scale = Real(1) / std::sqrt(Real(m));
  ComplexVector<Real> v(m);
  for (int j = 1; j <= m; ++j) {
    v(j - 1) = scale * unit_root<Real>(std::int64_t(j) * n, model.half_size);
  }
  return v;
}

/// E0 + 2 V0 cos(n pi / N).
template <typename Real>
Real exciton_energy(const RingModel<Real>& model, int n) {
  check_quantum_number(model, n);
  // cos is even; evaluating at |n| makes the +-n pair bitwise equal.
  const Real angle = std::numbers::pi_v<Real> * Real(std::abs(n)) / Real(model.half_size);
  return model.site_energy + 2 * model.coupling * std::cos(angle);
}

template <typename Real>
ExcitonSpectrum<Real> full_spectrum(const RingModel<Real>& model) {
  ExcitonSpectrum<Real> spectrum;
  spectrum.entries.reserve(model.ring_size());
  for (int n = model.min_quantum_number(); n <= model.max_quantum_number(); ++n) {
    spectrum.entries.push_back({n, exciton_energy(model, n), exciton_state(model, n)});
  }
  std::stable_sort(spectrum.entries.begin(), spectrum.entries.end(),
                   [](const ExcitonEntry<Real>& a, const ExcitonEntry<Real>& b) {
                     if (a.energy != b.energy) return a.energy < b.energy;
                     return a.quantum_number < b.quantum_number;
                   });
  return spectrum;
}

/// The degenerate optically bright pair, returned as (n = N - 1, n = -N + 1).
template <typename Real>
std::pair<ExcitonEntry<Real>, ExcitonEntry<Real>> bright_pair(const RingModel<Real>& model) {
  if (model.half_size < 2) {
    throw DegenerateGeometryError("bright pair needs N >= 2; for N = 1 the states n = +-(N - 1) coincide");
  }
  const int n = model.half_size - 1;
  return {ExcitonEntry<Real>{n, exciton_energy(model, n), exciton_state(model, n)},
          ExcitonEntry<Real>{-n, exciton_energy(model, -n), exciton_state(model, -n)}};
}

}  // namespace ringqft
