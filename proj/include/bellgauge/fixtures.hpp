#pragma once

// Built-in reference states and the verification checklist run by the
// `verify-paper` command.

#include <string>
#include <vector>

#include "bellgauge/matrix.hpp"
#include "bellgauge/qstate.hpp"

namespace bellgauge {

/// Raw matrix of reference state rho1 (exact printed entries, trace 1).
ComplexMatrix4 rho1_matrix();
/// Raw matrix of reference state rho2. Its printed entries sum to 1.000003,
/// so it must be loaded under TracePolicy::renormalize.
ComplexMatrix4 rho2_matrix();

DensityMatrix rho1();
DensityMatrix rho2();

/// Entropy threshold 1/sqrt(2) - 1/4, computed rather than hard-coded.
double santos_threshold();

/// One line of the verification report. Boolean checks store their
/// expected/actual values as 0/1 with tolerance 0.
struct PaperCheck {
  std::string name;
  bool boolean;
  double expected;
  double actual;
  double tolerance;
  bool pass;
};

/**
 * @brief Run the full reference reproduction.
 *
 * Checks, in order: linear entropies of rho1 and rho2 against 0.465
 * (tolerance 5e-4, covering the fixtures' printed-digit rounding), the
 * CHSH maxima against 2.05699 and 1.86929 (tolerance 1e-4), that both
 * entropies sit at or above the threshold, and that rho1 violates the
 * CHSH bound while rho2 does not.
 *
 * @param perturb Test hook: shifts rho1's middle diagonal entries by
 *        +/- perturb before validation, so a nonzero value makes the
 *        entropy check fail on purpose.
 */
std::vector<PaperCheck> run_paper_checks(double perturb = 0.0);

/// True when every check passed, i.e. the claimed entropy bound is refuted.
bool all_checks_pass(const std::vector<PaperCheck>& checks);

}  // namespace bellgauge
