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

#include "ringqft/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "ringqft/circuit.hpp"
#include "ringqft/errors.hpp"
#include "ringqft/exciton_ring.hpp"
#include "ringqft/hidden_subgroup.hpp"
#include "ringqft/qft_equivalence.hpp"
#include "ringqft/serialize.hpp"

namespace ringqft::cli {
namespace {

struct RunConfig {
  io::Format format = io::Format::kJson;
  std::string out_path;

  int half_size = 8;
  double e0 = 0.0;
  double v0 = 1.0;
  double tolerance = 1e-10;

  int qubits = 4;
  bool dump = false;
  bool unitary = false;
  bool check = false;

  int target_m = 18;
  int circuit_n = 4;

  int group = 16;
  int subgroup_order = 1;
  int offset = 0;
};

/// Report text plus the exit code it implies.
struct Outcome {
  std::string text;
  int code = kSuccess;
};

Outcome cmd_spectrum(const RunConfig& cfg) {
  const RingModel<double> model(cfg.half_size, cfg.e0, cfg.v0);
  return {io::spectrum_report(model, full_spectrum(model), cfg.format)};
}

Outcome cmd_verify(const RunConfig& cfg) {
  const RingModel<double> model(cfg.half_size, cfg.e0, cfg.v0);
  const auto report = verify_equivalence(model);
  return {io::equivalence_report(report, cfg.tolerance, cfg.format),
          report.verified(cfg.tolerance) ? kSuccess : kVerificationFailed};
}

Outcome cmd_circuit(const RunConfig& cfg) {
  if (cfg.unitary || cfg.check) check_state_capacity(cfg.qubits, kMaxDenseQubits);
  const Circuit circuit = qft_circuit(cfg.qubits);
  if (cfg.unitary) return {io::unitary_csv(circuit_unitary(circuit))};
  if (cfg.check) {
    const double error = max_abs_diff(circuit_unitary(circuit), dft_matrix(1 << cfg.qubits));
    const bool match = error <= cfg.tolerance;
    return {io::circuit_check_report(cfg.qubits, error, cfg.tolerance, match, cfg.format),
            match ? kSuccess : kVerificationFailed};
  }
  return {cfg.format == io::Format::kCsv ? io::circuit_csv(circuit) : io::circuit_json(circuit)};
}

Outcome cmd_approx(const RunConfig& cfg) {
  return {io::approx_report(approximation_report(cfg.target_m, cfg.circuit_n), cfg.format)};
}

Outcome cmd_hsp(const RunConfig& cfg) {
  const HspInstance inst(cfg.group, cfg.subgroup_order, cfg.offset);
  const int recovered = recover_generator(inst);
  return {io::hsp_report(inst, recovered, cfg.format),
          recovered == inst.generator() ? kSuccess : kVerificationFailed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exciton ring / quantum Fourier transform toolkit", "ringqft"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");

  const std::map<std::string, io::Format> formats{{"json", io::Format::kJson},
                                                  {"csv", io::Format::kCsv}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
  };
  const auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--half-size,-N", cfg.half_size, "Ring half-size N (ring has 2N sites)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--e0", cfg.e0, "Site excitation energy E0");
    sub->add_option("--v0", cfg.v0, "Nearest-neighbour coupling V0");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Exciton energies with lowest/bright flags");
  add_ring(spectrum);
  add_common(spectrum);

  auto* verify = app.add_subcommand("verify", "Check exciton states against QFT columns");
  add_ring(verify);
  verify->add_option("--tolerance", cfg.tolerance, "Allowed fidelity deficit / phase error")
      ->check(CLI::NonNegativeNumber);
  add_common(verify);

  auto* circuit = app.add_subcommand("circuit", "Synthesize the QFT circuit");
  circuit->add_option("-n,--qubits", cfg.qubits, "Number of qubits")->required();
  auto* dump = circuit->add_flag("--dump", cfg.dump, "Emit the gate list (default)");
  auto* unitary = circuit->add_flag("--unitary", cfg.unitary, "Emit the dense unitary as CSV");
  auto* check = circuit->add_flag("--check", cfg.check, "Compare the unitary against the DFT");
  dump->excludes(unitary)->excludes(check);
  unitary->excludes(check);
  circuit->add_option("--tolerance", cfg.tolerance, "Allowed max |U - DFT| for --check")
      ->check(CLI::NonNegativeNumber);
  add_common(circuit);

  auto* approx = app.add_subcommand("approx", "Compare a power-of-two QFT circuit with a larger ring");
  approx->add_option("--target-m", cfg.target_m, "Ring size to approximate")->check(CLI::PositiveNumber);
  approx->add_option("--circuit-n", cfg.circuit_n, "Circuit qubits")->check(CLI::PositiveNumber);
  add_common(approx);

  auto* hsp = app.add_subcommand("hsp", "Hidden subgroup demo over Z_N");
  hsp->add_option("--group", cfg.group, "Group order")->check(CLI::PositiveNumber);
  hsp->add_option("--subgroup-order", cfg.subgroup_order, "Subgroup order (must divide the group order)")
      ->check(CLI::PositiveNumber);
  hsp->add_option("--offset", cfg.offset, "Coset offset j0");
  add_common(hsp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kBadArguments;
  }

  Outcome outcome;
  try {
    if (spectrum->parsed()) outcome = cmd_spectrum(cfg);
    else if (verify->parsed()) outcome = cmd_verify(cfg);
    else if (circuit->parsed()) outcome = cmd_circuit(cfg);
    else if (approx->parsed()) outcome = cmd_approx(cfg);
    else outcome = cmd_hsp(cfg);
  } catch (const std::logic_error& e) {
    // RangeError, CapacityError, DivisibilityError, DegenerateGeometryError.
    err << "error: " << e.what() << "\n";
    return kBadArguments;
  }

  if (cfg.out_path.empty()) {
    out << outcome.text;
    out.flush();
    if (!out) return kIoError;
    return outcome.code;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << cfg.out_path << "' for writing\n";
    return kIoError;
  }
  file << outcome.text;
  file.close();
  if (!file) {
    err << "error: failed writing '" << cfg.out_path << "'\n";
    return kIoError;
  }
  return outcome.code;
}

}  // namespace ringqft::cli
