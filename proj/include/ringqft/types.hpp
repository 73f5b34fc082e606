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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace ringqft {

template <typename Real>
using Complex = std::complex<Real>;

/// Dense column of amplitudes over a finite basis (site kets, QFT kets or
/// computational-basis kets, depending on the caller).
template <typename Real>
using ComplexVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using ComplexMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

/// e^{i pi numerator / denominator}. The numerator is reduced modulo
/// 2 * denominator in integer arithmetic first so the angle stays in
/// [0, 2 pi) regardless of how large the raw product is.
/// Multiples of pi / 2 come back exact.
template <typename Real>
Complex<Real> unit_root(std::int64_t numerator, std::int64_t denominator) {
  const std::int64_t period = 2 * denominator;
  std::int64_t r = numerator % period;
  if (r < 0) r += period;
  if ((2 * r) % denominator == 0) {
    // Quarter turns are exact.
    switch (2 * r / denominator) {
      case 0: return {Real(1), Real(0)};
      case 1: return {Real(0), Real(1)};
      case 2: return {Real(-1), Real(0)};
      default: return {Real(0), Real(-1)};
    }
  }
  const Real angle = std::numbers::pi_v<Real> * Real(r) / Real(denominator);
  return std::polar(Real(1), angle);
}

/// Largest componentwise modulus of a - b.
template <typename DerivedA, typename DerivedB>
auto max_abs_diff(const Eigen::MatrixBase<DerivedA>& a,
                  const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// max |U^dagger U - I|. Only the lower triangle of the Gram matrix is formed.
template <typename Derived>
auto unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(u.cols(), u.cols());
  gram.template selfadjointView<Eigen::Lower>().rankUpdate(u.adjoint());
  RealScalar worst = 0;
  for (Eigen::Index c = 0; c < gram.cols(); ++c) {
    for (Eigen::Index r = c; r < gram.rows(); ++r) {
      const Scalar target = r == c ? Scalar(1) : Scalar(0);
      worst = std::max<RealScalar>(worst, std::abs(gram(r, c) - target));
    }
  }
  return worst;
}

}  // namespace ringqft
