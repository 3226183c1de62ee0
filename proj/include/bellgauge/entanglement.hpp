#pragma once

// Entanglement quantifiers: Wootters concurrence with an X-state closed
// form as an independent cross-check, and the partial-transpose test.

#include "bellgauge/matrix.hpp"
#include "bellgauge/qstate.hpp"

namespace bellgauge {

/// Spin-flipped state (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y),
/// where rho* is the entrywise conjugate in the computational basis.
ComplexMatrix4 spin_flip(const DensityMatrix& rho);

/**
 * @brief Wootters concurrence C in [0, 1].
 *
 * C = max(0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4)) with mu_k the
 * descending eigenvalues of rho * spin_flip(rho). Those are obtained as the
 * spectrum of the Hermitian matrix sqrt(rho) * spin_flip(rho) * sqrt(rho),
 * which has the same eigenvalues, so no general non-symmetric eigensolver
 * is needed. Eigenvalues in [-1e-10, 0) are clamped to zero; anything more
 * negative raises NotPositiveError since it signals an invalid state.
 */
double concurrence(const DensityMatrix& rho);

/**
 * @brief Closed-form concurrence for X-shaped states:
 *        C = 2 max(0, |rho_23| - sqrt(rho_11 rho_44),
 *                     |rho_14| - sqrt(rho_22 rho_33)).
 *
 * Independent of the spectral route; the two must agree within 1e-9.
 *
 * @throws NotXStateError when any entry off the diagonal and anti-diagonal
 *         exceeds 1e-12 in magnitude.
 */
double xstate_concurrence(const DensityMatrix& rho);

/// Minimum eigenvalue of the partial transpose on the second qubit.
/// Negative exactly when the state is entangled (two-qubit Peres-Horodecki).
double partial_transpose_min_eigenvalue(const DensityMatrix& rho);

struct EntanglementReport {
  double concurrence;
  double min_pt_eigenvalue;
  bool is_ppt;  ///< min_pt_eigenvalue >= -1e-10
};

EntanglementReport entanglement_report(const DensityMatrix& rho);

}  // namespace bellgauge
