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
 * Text encodings for reports, circuits and unitaries. JSON keys are emitted
 * in a fixed order with a top-level "schema" version; every real number is
 * rounded to 15 significant digits so identical inputs give identical bytes.
 */

#pragma once

#include <string>

#include "ringqft/circuit.hpp"
#include "ringqft/exciton_ring.hpp"
#include "ringqft/hidden_subgroup.hpp"
#include "ringqft/qft_equivalence.hpp"
#include "ringqft/types.hpp"

namespace ringqft::io {

inline constexpr int kSchemaVersion = 1;

enum class Format { kJson, kCsv };

/// printf("%.15g"), with negative zero printed as "0".
std::string format_number(double x);

/// x rounded to 15 significant digits.
double round_significant(double x);

std::string spectrum_report(const RingModel<double>& model, const ExcitonSpectrum<double>& spectrum,
                            Format format);

std::string equivalence_report(const EquivalenceReport<double>& report, double tolerance,
                               Format format);

std::string approx_report(const ApproxReport<double>& report, Format format);

std::string hsp_report(const HspInstance& inst, int recovered, Format format);

/// {"schema", "n_qubits", "gates": [{"kind", "targets", "p"?}]}
std::string circuit_json(const Circuit& circuit);
/// One gate per row: step,kind,targets,p (targets space-separated, p empty if absent).
std::string circuit_csv(const Circuit& circuit);
/// Inverse of circuit_json; throws std::invalid_argument on malformed input.
Circuit circuit_from_json(const std::string& text);

/// Row-major, one matrix row per line as re,im,re,im,...
std::string unitary_csv(const ComplexMatrix<double>& u);
ComplexMatrix<double> unitary_from_csv(const std::string& text);

std::string circuit_check_report(int n_qubits, double max_abs_error, double tolerance, bool match,
                                 Format format);

}  // namespace ringqft::io
