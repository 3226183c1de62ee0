#pragma once

// CHSH machinery: Pauli correlation matrix, the closed-form violation
// maximum, explicit CHSH operators, and a numerical settings optimizer
// that serves as an independent cross-check of the closed form.

#include <array>

#include "bellgauge/matrix.hpp"
#include "bellgauge/qstate.hpp"

namespace bellgauge {

/// Pauli matrix by index: 0 -> X, 1 -> Y, 2 -> Z.
Matrix2 pauli(int n);
/// sigma_n (x) sigma_m as a 4x4 operator.
ComplexMatrix4 pauli_kron(int n, int m);
/// v . sigma = v_x X + v_y Y + v_z Z.
Matrix2 dot_sigma(const Vec3& v);

/**
 * @brief Pauli correlation matrix T(n,m) = tr(rho sigma_n (x) sigma_m).
 *
 * Each entry is real for a valid state; the imaginary part is checked
 * against 1e-10 and discarded.
 *
 * @throws NonRealCorrelationError when an entry has |Im| > 1e-10.
 */
Mat3 correlation_matrix(const DensityMatrix& rho);

/**
 * @brief Eigenvalues of a symmetric 3x3 matrix, sorted descending.
 *
 * Uses the trigonometric closed form of the characteristic cubic; the
 * triple-root case is handled without division by zero.
 *
 * @throws NotSymmetricError when max |M - M^T| exceeds 1e-10.
 */
std::array<double, 3> symmetric3_eigenvalues(const Mat3& m);

struct HorodeckiM {
  std::array<double, 3> u;  ///< eigenvalues of T^T T, descending
  double m;                 ///< u[0] + u[1]
};

/// m(rho) = sum of the two largest eigenvalues of T^T T. With a descending
/// sort this equals the maximum of u_j + u_k over j < k regardless of ties.
HorodeckiM horodecki_m(const Mat3& T);

/// Everything the closed form produces for one state.
struct CorrelationAnalysis {
  Mat3 T;                   ///< correlation matrix
  std::array<double, 3> u;  ///< eigenvalues of T^T T, descending
  double m;                 ///< u[0] + u[1]
  double chsh_max;          ///< 2 sqrt(m), the maximum of |tr(rho B)| over settings
  bool violates;            ///< chsh_max > 2
};

/// Closed-form CHSH maximum: max_B |tr(rho B)| = 2 sqrt(m(rho)).
CorrelationAnalysis chsh_max(const DensityMatrix& rho);

/// Four measurement directions, each a unit vector in R^3.
struct ChshSettings {
  Vec3 a, a_prime, b, b_prime;
};

/**
 * @brief CHSH operator
 *        B = a.sigma (x) (b + b').sigma + a'.sigma (x) (b - b').sigma.
 *
 * The result is Hermitian with spectrum inside [-2 sqrt 2, 2 sqrt 2].
 *
 * @throws NonUnitVectorError when any direction deviates from unit norm
 *         by more than 1e-12.
 */
ComplexMatrix4 build_chsh_operator(const ChshSettings& s);

/// tr(rho B) for the operator built from the given settings. Real within
/// 1e-10 for valid inputs; equals chsh_bilinear_value on the state's
/// correlation matrix to the same tolerance.
double chsh_value(const DensityMatrix& rho, const ChshSettings& s);

/// Correlation-vector form of the same quantity:
/// a^T T (b + b') + a'^T T (b - b'). Cheap cross-check path.
double chsh_bilinear_value(const Mat3& T, const ChshSettings& s);

struct OptimizeResult {
  ChshSettings settings;
  double value;         ///< |tr(rho B)| at the returned settings
  double signed_value;  ///< tr(rho B) with its sign
  bool degenerate;      ///< T = 0: settings are arbitrary and value is 0
  int sweeps;           ///< refinement sweeps actually used
};

/**
 * @brief Maximize |tr(rho B)| over measurement settings.
 *
 * Seeds from the eigenvectors of T^T T (the standard construction that
 * attains the closed form), then polishes all eight spherical angles with
 * deterministic golden-section sweeps so the result never depends on the
 * seed being optimal. Sweeping stops when a full pass improves the value
 * by less than 1e-9 or the budget is exhausted.
 *
 * Guarantees on valid states: value <= chsh_max + 1e-9 always, and
 * value >= chsh_max - 1e-3.
 */
OptimizeResult optimize_settings(const DensityMatrix& rho, int budget = 200);

}  // namespace bellgauge
