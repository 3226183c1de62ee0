// Acceptance suite: one line per criterion, exit 0 only if all pass.
//
// Runs the quantitative reproduction, the optimizer-vs-closed-form oracle
// check, the Tsirelson/separability bounds, violation-implies-entanglement,
// the counterexample existence claims, the concurrence oracle, local-unitary
// invariance, and CSV determinism.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "bellgauge/bell.hpp"
#include "bellgauge/entanglement.hpp"
#include "bellgauge/explorer.hpp"
#include "bellgauge/fixtures.hpp"
#include "bellgauge/io.hpp"
#include "bellgauge/qstate.hpp"
#include "process.hpp"
#include "support.hpp"

using namespace bellgauge;
using test_process::run_cli;
using test_process::slurp;
using test_support::bell_state;
using test_support::conjugated;
using test_support::local_unitary;
using test_support::random_product_pure;
using test_support::random_unitary2;
using test_support::random_xstate;

namespace {

bool g_all_pass = true;

void report(int k, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", k, name.c_str(),
              detail.c_str());
  if (!pass) g_all_pass = false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion_1_paper_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  const auto cli = run_cli("verify-paper");
  const double elapsed = seconds_since(start);
  const bool verdict = cli.output.find("Santos Theorem 1 refuted: true") != std::string::npos;

  const auto checks = run_paper_checks();
  std::ostringstream detail;
  detail << "exit=" << cli.exit_code << " runtime=" << fmt9(elapsed) << "s";
  for (const PaperCheck& c : checks)
    if (!c.boolean) detail << " " << c.name << "=" << fmt9(c.actual);
  report(1, "paper reproduction via verify-paper",
         cli.exit_code == 0 && verdict && all_checks_pass(checks) && elapsed < 1.0, detail.str());
}

void criterion_2_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  RandomStream rng(1001);
  bool pass = true;
  double worst_gap = 0.0;
  double worst_excess = -1.0;
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = sample_random_state(rng, 4);
    const double closed = chsh_max(rho).chsh_max;
    const double achieved = optimize_settings(rho).value;
    worst_gap = std::max(worst_gap, closed - achieved);
    worst_excess = std::max(worst_excess, achieved - closed);
    if (achieved < closed - 1e-3 || achieved > closed + 1e-9) pass = false;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "states=100 worst_gap=" << fmt9(worst_gap) << " worst_excess=" << fmt9(worst_excess)
         << " runtime=" << fmt9(elapsed) << "s";
  report(2, "optimizer matches the closed form within 1e-3", pass && elapsed < 30.0, detail.str());
}

void criterion_3_bounds() {
  const double ceiling = 2.0 * std::sqrt(2.0);
  RandomStream rng(1002);
  bool pass = true;
  double max_random = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double value = chsh_max(sample_random_state(rng, 1 + i % 4)).chsh_max;
    max_random = std::max(max_random, value);
    if (value > ceiling + 1e-9) pass = false;
  }
  double max_product = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double value = chsh_max(random_product_pure(rng)).chsh_max;
    max_product = std::max(max_product, value);
    if (value > 2.0 + 1e-9) pass = false;
  }
  for (int which = 0; which < 4; ++which) {
    const DensityMatrix bell = bell_state(which);
    if (std::abs(chsh_max(bell).chsh_max - ceiling) > 1e-9) pass = false;
    if (std::abs(concurrence(bell) - 1.0) > 1e-9) pass = false;
  }
  std::ostringstream detail;
  detail << "max_random=" << fmt9(max_random) << " max_product=" << fmt9(max_product)
         << " tsirelson=" << fmt9(ceiling);
  report(3, "Tsirelson and separability bounds", pass, detail.str());
}

void criterion_4_violation_implies_entanglement() {
  RandomStream rng(1003);
  bool pass = true;
  int violators = 0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = sample_random_state(rng, 1 + i % 4);
    if (chsh_max(rho).chsh_max <= 2.0) continue;
    ++violators;
    if (concurrence(rho) <= 1e-8) pass = false;
    if (partial_transpose_min_eigenvalue(rho) >= -1e-10) pass = false;
  }
  std::ostringstream detail;
  detail << "violators=" << violators << "/1000";
  report(4, "CHSH violation implies entanglement", pass && violators > 0, detail.str());
}

void criterion_5_existence_claims() {
  bool pass = true;
  std::ostringstream detail;

  std::vector<StateRecord> records;
  try {
    records = find_counterexamples(santos_threshold(), 10, 4242);
  } catch (const Error& e) {
    report(5, "counterexample mining and the one-parameter family", false, e.what());
    return;
  }
  if (records.size() < 10) pass = false;
  double min_s12 = 1.0, min_chsh = 4.0;
  for (const StateRecord& rec : records) {
    min_s12 = std::min(min_s12, rec.s12);
    min_chsh = std::min(min_chsh, rec.chsh_max);
    if (rec.s12 < 0.4571068 || rec.chsh_max <= 2.001) pass = false;
  }
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const double d = std::abs(records[i].params->p22 - records[j].params->p22) +
                       std::abs(records[i].params->p44 - records[j].params->p44) +
                       std::abs(records[i].params->c - records[j].params->c);
      if (d <= 1e-9) pass = false;  // must be distinct
    }

  const DensityMatrix anchor = one_parameter_family(0.0);
  if (max_abs_diff(anchor.matrix(), rho1().matrix()) > 1e-12) pass = false;

  const double target = default_family_entropy();
  const FamilyScan scan = scan_one_parameter_family(101, target);
  double worst_entropy_dev = 0.0;
  for (const StateRecord& rec : scan.records)
    worst_entropy_dev = std::max(worst_entropy_dev, std::abs(rec.s12 - target));
  if (worst_entropy_dev > 1e-9) pass = false;
  if (!scan.has_violation) pass = false;

  detail << "records=" << records.size() << " min_s12=" << fmt9(min_s12)
         << " min_chsh=" << fmt9(min_chsh) << " family_entropy_dev=" << fmt9(worst_entropy_dev)
         << " violating_t=[" << fmt9(scan.violating_lo) << "," << fmt9(scan.violating_hi) << "]";
  report(5, "counterexample mining and the one-parameter family", pass, detail.str());
}

void criterion_6_concurrence_oracle() {
  RandomStream rng(1004);
  bool pass = true;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const DensityMatrix rho = random_xstate(rng);
    const double dev = std::abs(concurrence(rho) - xstate_concurrence(rho));
    worst = std::max(worst, dev);
    if (dev > 1e-9) pass = false;
  }
  for (const DensityMatrix& rho : {rho1(), rho2()}) {
    if (std::abs(concurrence(rho) - 0.25) > 1e-6) pass = false;
    if (std::abs(xstate_concurrence(rho) - 0.25) > 1e-6) pass = false;
  }
  std::ostringstream detail;
  detail << "xstates=500 worst_route_dev=" << fmt9(worst) << " c_rho1=" << fmt9(concurrence(rho1()))
         << " c_rho2=" << fmt9(concurrence(rho2()));
  report(6, "Wootters concurrence agrees with the X-state closed form", pass, detail.str());
}

void criterion_7_local_unitary_invariance() {
  RandomStream rng(1005);
  bool pass = true;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = sample_random_state(rng, 1 + i % 4);
    const ComplexMatrix4 u = local_unitary(random_unitary2(rng), random_unitary2(rng));
    const DensityMatrix rotated = conjugated(rho, u);
    const double d_chsh = std::abs(chsh_max(rotated).chsh_max - chsh_max(rho).chsh_max);
    const double d_s12 = std::abs(linear_entropy(rotated).linear_entropy -
                                  linear_entropy(rho).linear_entropy);
    const double d_conc = std::abs(concurrence(rotated) - concurrence(rho));
    worst = std::max({worst, d_chsh, d_s12, d_conc});
    if (d_chsh > 1e-9 || d_s12 > 1e-9 || d_conc > 1e-9) pass = false;
  }
  std::ostringstream detail;
  detail << "draws=100 worst_change=" << fmt9(worst);
  report(7, "chsh_max, entropy and concurrence are local-unitary invariant", pass, detail.str());
}

void criterion_8_determinism() {
  const auto dir = test_process::temp_dir();
  const std::string a = (dir / "acc_sample_a.csv").string();
  const std::string b = (dir / "acc_sample_b.csv").string();
  const std::string fa = (dir / "acc_family_a.csv").string();
  const std::string fb = (dir / "acc_family_b.csv").string();

  bool pass = true;
  if (run_cli("sample --count 50 --rank 4 --seed 123 -o " + a).exit_code != 0) pass = false;
  if (run_cli("sample --count 50 --rank 4 --seed 123 -o " + b).exit_code != 0) pass = false;
  if (run_cli("family --points 21 -o " + fa).exit_code != 0) pass = false;
  if (run_cli("family --points 21 -o " + fb).exit_code != 0) pass = false;
  const bool sample_identical = pass && slurp(a) == slurp(b);
  const bool family_identical = pass && slurp(fa) == slurp(fb);
  pass = pass && sample_identical && family_identical;

  std::ostringstream detail;
  detail << "sample_identical=" << (sample_identical ? "true" : "false")
         << " family_identical=" << (family_identical ? "true" : "false");
  report(8, "identical seeds give byte-identical CSV output", pass, detail.str());
}

}  // namespace

int main() {
  criterion_1_paper_reproduction();
  criterion_2_oracle_equivalence();
  criterion_3_bounds();
  criterion_4_violation_implies_entanglement();
  criterion_5_existence_claims();
  criterion_6_concurrence_oracle();
  criterion_7_local_unitary_invariance();
  criterion_8_determinism();
  return g_all_pass ? 0 : 1;
}
