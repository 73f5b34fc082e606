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

#include <stdexcept>
#include <string>

namespace ringqft {

/// An index, quantum number or offset outside its valid interval.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A request exceeding the simulator's state-vector or dense-matrix bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A subgroup order that does not divide the group order.
class DivisibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A ring too small for the requested structure (e.g. the bright pair on N = 1).
class DegenerateGeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline void require_in_range(const char* what, long long value, long long lo, long long hi) {
  if (value < lo || value > hi) {
    throw RangeError(std::string(what) + " = " + std::to_string(value) +
                     " outside valid interval [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
}

}  // namespace detail
}  // namespace ringqft
