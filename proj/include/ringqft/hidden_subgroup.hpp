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

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ringqft/circuit.hpp"
#include "ringqft/errors.hpp"
#include "ringqft/types.hpp"

namespace ringqft {

/// Hidden subgroup instance over the cyclic group Z_{group_order}. The
/// subgroup order is called sub_M to keep it apart from the ring size.
struct HspInstance {
  int group_order = 16;
  int subgroup_order = 1;
  int offset = 0;  ///< coset offset j0

  HspInstance(int group, int sub_m, int j0) : group_order(group), subgroup_order(sub_m), offset(j0) {
    if (group < 1) throw RangeError("group order must be >= 1, got " + std::to_string(group));
    if (sub_m < 1 || group % sub_m != 0) {
      throw DivisibilityError("subgroup order " + std::to_string(sub_m) +
                              " does not divide group order " + std::to_string(group));
    }
    detail::require_in_range("coset offset j0", j0, 0, group - 1);
  }

  /// d = group_order / subgroup_order.
  int generator() const { return group_order / subgroup_order; }
};

/// d^{-1/2} sum_{t=0}^{d-1} e^{2 pi i j0 t sub_M / G} |t sub_M>.
template <typename Real = double>
ComplexVector<Real> psi_f(const HspInstance& inst) {
  const int d = inst.generator();
  const Real scale = Real(1) / std::sqrt(Real(d));
  ComplexVector<Real> v = ComplexVector<Real>::Zero(inst.group_order);
  for (int t = 0; t < d; ++t) {
    const std::int64_t site = std::int64_t(t) * inst.subgroup_order;
    v(site) = scale * unit_root<Real>(2 * std::int64_t(inst.offset) * site, inst.group_order);
  }
  return v;
}

/// Indices whose amplitude modulus exceeds `threshold`.
template <typename Derived>
std::vector<int> support(const Eigen::MatrixBase<Derived>& v, double threshold = 1e-9) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (double(std::abs(v(i))) > threshold) out.push_back(int(i));
  }
  return out;
}

/// Applies the DFT to psi_f and returns gcd(G, s_i - s_0) over its exact
/// support. The support is the coset -j0 + d Z_G, so this is d.
template <typename Real = double>
int recover_generator(const HspInstance& inst) {
  const ComplexVector<Real> transformed = dft_matrix<Real>(inst.group_order) * psi_f<Real>(inst);
  const std::vector<int> peaks = support(transformed);
  int period = inst.group_order;
  for (int s : peaks) period = std::gcd(period, s - peaks.front());
  return period;
}

}  // namespace ringqft
