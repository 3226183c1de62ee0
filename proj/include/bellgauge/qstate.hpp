#pragma once

// Two-qubit density matrices: validation, spectra, mixedness measures.

#include <array>

#include "bellgauge/matrix.hpp"

namespace bellgauge {

/// Hermiticity tolerance on max |A - A^H|.
constexpr double kHermitianTol = 1e-10;
/// Eigenvalues in [-kPsdTol, 0) are treated as exact zeros; anything below
/// fails validation.
constexpr double kPsdTol = 1e-10;
/// Trace window accepted under TracePolicy::strict.
constexpr double kTraceTolStrict = 1e-10;
/// Trace window accepted (and rescaled away) under TracePolicy::renormalize.
constexpr double kTraceTolRenormalize = 1e-4;

enum class TracePolicy { strict, renormalize };

/// Full spectral decomposition of a Hermitian 4x4 matrix.
/// values are sorted descending; vectors[k] is the unit eigenvector of
/// values[k], and the vectors form an orthonormal set.
struct Eigensystem {
  std::array<double, 4> values{};
  std::array<std::array<Complex, 4>, 4> vectors{};
};

/**
 * @brief Diagonalize a Hermitian 4x4 matrix with cyclic complex Jacobi
 *        rotations.
 *
 * The pivot order is fixed, there is no randomness, and no external solver
 * is involved, so results are reproducible across builds. Iteration stops
 * once the off-diagonal Frobenius norm drops below 1e-13, with a hard cap
 * of 100 sweeps.
 *
 * @throws NotHermitianError  when max |h - h^H| exceeds kHermitianTol.
 * @throws NoConvergenceError when the sweep cap is exceeded.
 */
Eigensystem hermitian_eigensystem(const ComplexMatrix4& h);

/**
 * @brief A validated two-qubit state: Hermitian, unit trace, positive
 *        semidefinite, with its spectral decomposition cached.
 *
 * Instances can only be produced by validate() and from_pure(), so holding
 * a DensityMatrix is proof that the invariants were checked. Values are
 * immutable after construction and safe to share across threads.
 */
class DensityMatrix {
 public:
  const ComplexMatrix4& matrix() const { return mat_; }
  /// Eigenvalues, descending; values in [-kPsdTol, 0) have been clamped to 0.
  const std::array<double, 4>& eigenvalues() const { return eig_.values; }
  const Eigensystem& eigensystem() const { return eig_; }

  friend DensityMatrix validate(const ComplexMatrix4& raw, TracePolicy policy);

 private:
  DensityMatrix(const ComplexMatrix4& mat, const Eigensystem& eig) : mat_(mat), eig_(eig) {}

  ComplexMatrix4 mat_;
  Eigensystem eig_;
};

/**
 * @brief Check a raw matrix against the density-matrix invariants.
 *
 * Under TracePolicy::strict the trace must equal 1 within kTraceTolStrict.
 * Under TracePolicy::renormalize a trace within kTraceTolRenormalize of 1
 * is accepted and the matrix is rescaled to unit trace; this tolerates
 * fixtures whose printed digits do not sum exactly to one.
 *
 * @throws NotHermitianError, TraceInvalidError, NotPositiveError
 */
DensityMatrix validate(const ComplexMatrix4& raw, TracePolicy policy = TracePolicy::strict);

/// Projector onto psi, normalized: |psi><psi| / <psi|psi>.
/// @throws ZeroVectorError when psi has zero norm.
DensityMatrix from_pure(const std::array<Complex, 4>& psi);

/// tr(rho^2) = sum |rho_ij|^2, in [1/4, 1].
double purity(const DensityMatrix& rho);

struct MixednessReport {
  double purity;
  double linear_entropy;             ///< 1 - purity, in [0, 3/4]
  double normalized_linear_entropy;  ///< (4/3) * linear_entropy, in [0, 1]
};

MixednessReport linear_entropy(const DensityMatrix& rho);

}  // namespace bellgauge
