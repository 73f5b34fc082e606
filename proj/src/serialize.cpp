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

#include "ringqft/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ringqft::io {
namespace {

using Json = nlohmann::ordered_json;

Json header(const char* command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round_significant(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

std::string spectrum_report(const RingModel<double>& model, const ExcitonSpectrum<double>& spectrum,
                            Format format) {
  const double lowest = spectrum.entries.front().energy;
  const auto is_bright = [&](int n) {
    return model.half_size >= 2 && (n == model.half_size - 1 || n == -model.half_size + 1);
  };

  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "n,k,energy,is_lowest,is_bright\n";
    for (const auto& e : spectrum.entries) {
      os << e.quantum_number << ',' << e.quantum_number + model.half_size - 1 << ','
         << format_number(e.energy) << ',' << flag(are_degenerate(e.energy, lowest)) << ','
         << flag(is_bright(e.quantum_number)) << '\n';
    }
    return os.str();
  }

  Json j = header("spectrum");
  j["half_size"] = model.half_size;
  j["ring_size"] = model.ring_size();
  j["e0"] = round_significant(model.site_energy);
  j["v0"] = round_significant(model.coupling);
  Json rows = Json::array();
  for (const auto& e : spectrum.entries) {
    Json row;
    row["n"] = e.quantum_number;
    row["k"] = e.quantum_number + model.half_size - 1;
    row["energy"] = round_significant(e.energy);
    row["is_lowest"] = are_degenerate(e.energy, lowest);
    row["is_bright"] = is_bright(e.quantum_number);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return dump(j);
}

std::string equivalence_report(const EquivalenceReport<double>& report, double tolerance,
                               Format format) {
  const int m = 2 * report.half_size;
  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "# half_size=" << report.half_size << ",ring_size=" << m
       << ",min_fidelity=" << format_number(report.min_fidelity)
       << ",max_phase_error=" << format_number(report.max_phase_error)
       << ",max_residual=" << format_number(report.max_residual)
       << ",tolerance=" << format_number(tolerance)
       << ",verified=" << flag(report.verified(tolerance)) << '\n';
    os << "k,n,fidelity,phase_error,residual\n";
    for (const auto& e : report.per_k) {
      os << e.k << ',' << e.n << ',' << format_number(e.fidelity) << ','
         << format_number(e.phase_error) << ',' << format_number(e.residual) << '\n';
    }
    return os.str();
  }

  Json j = header("verify");
  j["half_size"] = report.half_size;
  j["ring_size"] = m;
  j["tolerance"] = round_significant(tolerance);
  j["min_fidelity"] = round_significant(report.min_fidelity);
  j["max_phase_error"] = round_significant(report.max_phase_error);
  j["max_residual"] = round_significant(report.max_residual);
  j["verified"] = report.verified(tolerance);
  Json rows = Json::array();
  for (const auto& e : report.per_k) {
    Json row;
    row["k"] = e.k;
    row["n"] = e.n;
    row["fidelity"] = round_significant(e.fidelity);
    row["phase_error"] = round_significant(e.phase_error);
    row["residual"] = round_significant(e.residual);
    rows.push_back(row);
  }
  j["per_k"] = rows;
  return dump(j);
}

std::string approx_report(const ApproxReport<double>& report, Format format) {
  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "# target_m=" << report.target_size << ",circuit_n=" << report.circuit_qubits
       << ",fractional_qubits=" << format_number(report.fractional_qubits)
       << ",mean_fidelity=" << format_number(report.mean_fidelity)
       << ",min_fidelity=" << format_number(report.min_fidelity) << '\n';
    os << "k,best_match_j,fidelity\n";
    for (const auto& r : report.rows) {
      os << r.k << ',' << r.best_match_j << ',' << format_number(r.fidelity) << '\n';
    }
    return os.str();
  }

  Json j = header("approx");
  j["target_m"] = report.target_size;
  j["circuit_n"] = report.circuit_qubits;
  j["fractional_qubits"] = round_significant(report.fractional_qubits);
  j["mean_fidelity"] = round_significant(report.mean_fidelity);
  j["min_fidelity"] = round_significant(report.min_fidelity);
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["k"] = r.k;
    row["best_match_j"] = r.best_match_j;
    row["fidelity"] = round_significant(r.fidelity);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return dump(j);
}

std::string hsp_report(const HspInstance& inst, int recovered, Format format) {
  const bool match = recovered == inst.generator();
  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "group_order,subgroup_order,offset,generator,recovered,match\n"
       << inst.group_order << ',' << inst.subgroup_order << ',' << inst.offset << ','
       << inst.generator() << ',' << recovered << ',' << flag(match) << '\n';
    return os.str();
  }
  Json j = header("hsp");
  j["group_order"] = inst.group_order;
  j["subgroup_order"] = inst.subgroup_order;
  j["offset"] = inst.offset;
  j["generator"] = inst.generator();
  j["recovered"] = recovered;
  j["match"] = match;
  return dump(j);
}

std::string circuit_json(const Circuit& circuit) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n_qubits"] = circuit.n_qubits();
  Json gates = Json::array();
  for (const Gate& gate : circuit.gates()) {
    Json g;
    g["kind"] = gate_name(gate);
    g["targets"] = gate_qubits(gate);
    if (const auto* cp = std::get_if<ControlledPhase>(&gate)) g["p"] = cp->p;
    gates.push_back(g);
  }
  j["gates"] = gates;
  return dump(j);
}

std::string circuit_csv(const Circuit& circuit) {
  std::ostringstream os;
  os << "step,kind,targets,p\n";
  int step = 0;
  for (const Gate& gate : circuit.gates()) {
    os << step++ << ',' << gate_name(gate) << ',';
    const auto qubits = gate_qubits(gate);
    for (std::size_t i = 0; i < qubits.size(); ++i) os << (i ? " " : "") << qubits[i];
    os << ',';
    if (const auto* cp = std::get_if<ControlledPhase>(&gate)) os << cp->p;
    os << '\n';
  }
  return os.str();
}

Circuit circuit_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    Circuit circuit(j.at("n_qubits").get<int>());
    for (const Json& g : j.at("gates")) {
      const auto kind = g.at("kind").get<std::string>();
      const auto targets = g.at("targets").get<std::vector<int>>();
      const std::size_t arity = kind == "H" ? 1 : 2;
      if (targets.size() != arity) {
        throw std::invalid_argument("gate " + kind + " expects " + std::to_string(arity) +
                                    " targets");
      }
      if (kind == "H") {
        circuit.append(Hadamard{targets[0]});
      } else if (kind == "CRp") {
        circuit.append(ControlledPhase{targets[0], targets[1], g.at("p").get<int>()});
      } else if (kind == "SWAP") {
        circuit.append(Swap{targets[0], targets[1]});
      } else {
        throw std::invalid_argument("unknown gate kind '" + kind + "'");
      }
    }
    return circuit;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
  }
}

std::string unitary_csv(const ComplexMatrix<double>& u) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      if (c) os << ',';
      os << format_number(u(r, c).real()) << ',' << format_number(u(r, c).imag());
    }
    os << '\n';
  }
  return os.str();
}

ComplexMatrix<double> unitary_from_csv(const std::string& text) {
  std::vector<std::vector<Complex<double>>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<double> values;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      char* end = nullptr;
      values.push_back(std::strtod(cell.c_str(), &end));
      if (end == cell.c_str()) throw std::invalid_argument("bad number '" + cell + "'");
    }
    if (values.size() % 2 != 0) throw std::invalid_argument("odd number of values in row");
    std::vector<Complex<double>> row;
    for (std::size_t i = 0; i < values.size(); i += 2) row.emplace_back(values[i], values[i + 1]);
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("ragged unitary CSV");
    }
    rows.push_back(std::move(row));
  }
  const auto n_rows = Eigen::Index(rows.size());
  const auto n_cols = rows.empty() ? Eigen::Index(0) : Eigen::Index(rows.front().size());
  ComplexMatrix<double> u(n_rows, n_cols);
  for (Eigen::Index r = 0; r < n_rows; ++r) {
    for (Eigen::Index c = 0; c < n_cols; ++c) u(r, c) = rows[r][c];
  }
  return u;
}

std::string circuit_check_report(int n_qubits, double max_abs_error, double tolerance, bool match,
                                 Format format) {
  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "n_qubits,max_abs_error,tolerance,match\n"
       << n_qubits << ',' << format_number(max_abs_error) << ',' << format_number(tolerance) << ','
       << flag(match) << '\n';
    return os.str();
  }
  Json j = header("circuit-check");
  j["n_qubits"] = n_qubits;
  j["max_abs_error"] = round_significant(max_abs_error);
  j["tolerance"] = round_significant(tolerance);
  j["match"] = match;
  return dump(j);
}

}  // namespace ringqft::io
