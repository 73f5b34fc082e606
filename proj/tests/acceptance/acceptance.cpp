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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances are fixed here and never relaxed at runtime.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ringqft/circuit.hpp"
#include "ringqft/cli.hpp"
#include "ringqft/exciton_ring.hpp"
#include "ringqft/hidden_subgroup.hpp"
#include "ringqft/qft_equivalence.hpp"

using namespace ringqft;
using cd = std::complex<double>;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// 1. Analytic energies vs dense symmetric eigensolver, N = 1..12.
Verdict spectrum_oracle() {
  Clock clock;
  double worst = 0;
  for (int n_half = 1; n_half <= 12; ++n_half) {
    const RingModel<double> model(n_half, 0.0, 1.0);
    std::vector<double> analytic;
    for (int n = model.min_quantum_number(); n <= model.max_quantum_number(); ++n) {
      analytic.push_back(exciton_energy(model, n));
    }
    std::sort(analytic.begin(), analytic.end());
    const auto eig = oracle::dense_ring_eigenvalues(n_half, 0.0, 1.0);
    for (int i = 0; i < eig.size(); ++i) worst = std::max(worst, std::abs(eig(i) - analytic[i]));
  }
  const double t = clock.seconds();
  return {worst <= 1e-10 && t < 1.0, fmt("max |eps - lambda| = %.3g (tol 1e-10), %.3f s (< 1 s)", worst, t)};
}

// 2. Unique minimum at n = N, degenerate bright pair at n = +-(N - 1).
Verdict lowest_and_bright() {
  bool ok = true;
  double worst = 0;
  for (int n_half = 2; n_half <= 12; ++n_half) {
    for (double v0 : {1.0, 0.37, 4.0}) {
      const double e0 = 0.25;
      const RingModel<double> model(n_half, e0, v0);
      const auto spectrum = full_spectrum(model);
      const auto& lo = spectrum.entries[0];
      ok &= lo.quantum_number == n_half;
      worst = std::max(worst, std::abs(lo.energy - (e0 - 2 * v0)));
      ok &= spectrum.entries[1].energy - lo.energy > 1e-10;
      const auto [plus, minus] = bright_pair(model);
      const double expected = e0 - 2 * v0 * std::cos(oracle::kPi / n_half);
      worst = std::max({worst, std::abs(plus.energy - expected), std::abs(minus.energy - expected)});
      ok &= std::abs(spectrum.entries[1].quantum_number) == n_half - 1;
      ok &= std::abs(spectrum.entries[2].quantum_number) == n_half - 1;
    }
  }
  return {ok && worst <= 1e-10, fmt("ordering ok=%g, max energy deviation %.3g (tol 1e-10)", double(ok), worst)};
}

// 3. Exciton states = QFT columns after relabelling, M = 16 and 18.
Verdict central_equivalence() {
  Clock clock;
  double min_fid = 1, max_phase = 0;
  for (int n_half : {8, 9}) {
    const auto report = verify_equivalence(RingModel<double>(n_half));
    min_fid = std::min(min_fid, report.min_fidelity);
    max_phase = std::max(max_phase, report.max_phase_error);
  }
  const double t = clock.seconds();
  return {min_fid >= 1 - 1e-10 && max_phase <= 1e-10 && t < 1.0,
          fmt("min fidelity 1 - %.3g, max phase error %.3g (tol 1e-10), %.3f s", 1 - min_fid, max_phase, t)};
}

// 4. QFT circuit unitary, gate count, staged states.
Verdict circuit_correctness() {
  double unitary_err = 0;
  bool counts = true;
  for (int n = 1; n <= 8; ++n) {
    const auto c = qft_circuit(n);
    counts &= c.size() == std::size_t(n * (n + 1) / 2 + n / 2);
    unitary_err = std::max(unitary_err, max_abs_diff(circuit_unitary(c), dft_matrix(1 << n)));
  }
  double staged_err = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < (1 << n); ++k) {
      const auto stages = staged_apply(k, n);
      for (int s = 1; s <= n; ++s) {
        staged_err = std::max(staged_err, max_abs_diff(stages[s - 1].amplitudes(),
                                                       oracle::staged_qft_state(k, n, s)));
      }
    }
  }
  return {unitary_err <= 1e-10 && counts && staged_err <= 1e-12,
          fmt("max |U - DFT| %.3g (tol 1e-10), gate counts ok=%g, staged err %.3g (tol 1e-12)",
              unitary_err, double(counts), staged_err)};
}

// 5. Product representation vs DFT columns, exhaustive n <= 6.
Verdict product_representation() {
  double worst = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto f = dft_matrix(1 << n);
    for (int k = 0; k < (1 << n); ++k) {
      worst = std::max(worst, max_abs_diff(product_state(n, k).amplitudes(), f.col(k)));
    }
  }
  return {worst <= 1e-12, fmt("max componentwise error %.3g (tol 1e-12)", worst)};
}

// 6. Generator recovery over all divisors/offsets of 16 and 18; trivial subgroup = DFT column.
Verdict hidden_subgroup() {
  int cases = 0, failures = 0;
  double trivial_err = 0;
  for (int g : {16, 18}) {
    const auto f = dft_matrix(g);
    for (int sub = 1; sub <= g; ++sub) {
      if (g % sub) continue;
      for (int j0 = 0; j0 < g; ++j0) {
        const HspInstance inst(g, sub, j0);
        ++cases;
        if (recover_generator(inst) != g / sub) ++failures;
        if (sub == 1) trivial_err = std::max(trivial_err, max_abs_diff(psi_f(inst), f.col(j0)));
      }
    }
  }
  return {failures == 0 && trivial_err <= 1e-12,
          fmt("%g instances, %g mismatches, trivial-subgroup error %.3g (tol 1e-12)", double(cases), double(failures),
              trivial_err)};
}

// 7. Approximation report.
Verdict approximation() {
  const auto exact = approximation_report(16, 4);
  double exact_err = 0;
  for (const auto& r : exact.rows) exact_err = std::max(exact_err, std::abs(r.fidelity - 1));
  const auto a = approximation_report(18, 4);
  const auto b = approximation_report(18, 4);
  bool same = a.rows.size() == 18 && b.rows.size() == 18;
  for (std::size_t i = 0; same && i < a.rows.size(); ++i) {
    same = a.rows[i].best_match_j == b.rows[i].best_match_j && a.rows[i].fidelity == b.rows[i].fidelity;
  }
  const double k0_err = std::abs(a.rows[0].fidelity - 16.0 / std::sqrt(288.0));
  return {exact_err <= 1e-12 && k0_err <= 1e-12 && same,
          fmt("M=16 max |1 - f| %.3g, M=18 k=0 error %.3g (tol 1e-12), deterministic=%g", exact_err,
              k0_err, double(same))};
}

Gate random_gate(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> qubit(0, n - 1);
  const int kind = n == 1 ? 0 : std::uniform_int_distribution<int>(0, 2)(rng);
  const int a = qubit(rng);
  int b = qubit(rng);
  while (n > 1 && b == a) b = qubit(rng);
  if (kind == 0) return Hadamard{a};
  if (kind == 1) return ControlledPhase{a, b, std::uniform_int_distribution<int>(2, 12)(rng)};
  return Swap{a, b};
}

// 8. 10,000 norm-preservation trials and 10,000 random-circuit unitarity trials.
Verdict property_suites() {
  Clock clock;
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  double drift = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + trial % 8;
    Eigen::VectorXcd v(1 << n);
    for (auto& a : v) a = cd(normal(rng), normal(rng));
    StateVector<double> s(n, v / v.norm());
    const double before = s.norm();
    s = apply_gate(std::move(s), random_gate(rng, n));
    drift = std::max(drift, std::abs(s.norm() - before));
  }
  double defect = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + trial % 8;
    Circuit c(n);
    const int length = std::uniform_int_distribution<int>(1, 24)(rng);
    for (int g = 0; g < length; ++g) c.append(random_gate(rng, n));
    defect = std::max(defect, unitarity_defect(circuit_unitary(c)));
  }
  const double t = clock.seconds();
  return {drift <= 1e-12 && defect <= 1e-10 && t < 30.0,
          fmt("max norm drift %.3g (tol 1e-12), max unitarity defect %.3g (tol 1e-10), %.2f s (< 30 s)",
              drift, defect, t)};
}

// 9. Byte-identical CLI output and the exit-code contract.
Verdict cli_determinism() {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"spectrum", "--half-size", "8"}, 0},
      {{"spectrum", "--half-size", "8", "--v0", "0"}, 0},
      {{"spectrum", "--half-size", "9", "--format", "csv"}, 0},
      {{"verify", "--half-size", "8"}, 0},
      {{"verify", "--half-size", "9"}, 0},
      {{"verify", "--half-size", "8", "--tolerance", "0"}, 1},
      {{"circuit", "-n", "4", "--dump"}, 0},
      {{"circuit", "-n", "1", "--check"}, 0},
      {{"circuit", "-n", "8", "--check"}, 0},
      {{"circuit", "-n", "3", "--unitary"}, 0},
      {{"approx"}, 0},
      {{"approx", "--format", "csv"}, 0},
      {{"hsp", "--group", "16", "--subgroup-order", "1", "--offset", "3"}, 0},
      {{"hsp", "--group", "18", "--subgroup-order", "3", "--offset", "1"}, 0},
      {{"spectrum", "--no-such-flag"}, 2},
      {{"circuit", "-n", "40"}, 2},
      {{"spectrum", "--out", "/nonexistent-dir/report.json"}, 3},
  };
  int bad = 0;
  for (const auto& c : cases) {
    std::ostringstream o1, e1, o2, e2;
    const int r1 = cli::run(c.args, o1, e1);
    const int r2 = cli::run(c.args, o2, e2);
    if (r1 != c.code || r2 != c.code || o1.str() != o2.str()) ++bad;
  }
  return {bad == 0, fmt("%g commands run twice, %g with differing bytes or wrong exit code", double(cases.size()), double(bad))};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1 spectrum oracle", spectrum_oracle},
      {"AC2 lowest state and bright pair", lowest_and_bright},
      {"AC3 exciton/QFT equivalence", central_equivalence},
      {"AC4 QFT circuit correctness", circuit_correctness},
      {"AC5 product representation", product_representation},
      {"AC6 hidden subgroup recovery", hidden_subgroup},
      {"AC7 approximation report", approximation},
      {"AC8 randomized property suites", property_suites},
      {"AC9 CLI determinism and exit codes", cli_determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const Verdict v = check();
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
    if (!v.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
