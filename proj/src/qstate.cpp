#include "bellgauge/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bellgauge/errors.hpp"

namespace bellgauge {

namespace {

constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 100;
// Pivots below this magnitude are flushed to zero instead of rotated.
constexpr double kTinyPivot = 1e-150;

double off_diagonal_norm(const ComplexMatrix4& a) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

ComplexMatrix4 hermitian_part(const ComplexMatrix4& m) {
  ComplexMatrix4 h;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix4& h) {
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianTol) throw NotHermitianError(defect);

  // Work on the exactly Hermitian average so the rotations preserve symmetry.
  ComplexMatrix4 a = hermitian_part(h);
  ComplexMatrix4 v = ComplexMatrix4::identity();

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kOffDiagonalTarget) {
      converged = true;
      break;
    }
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < kTinyPivot) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        // Unitary plane rotation J with J(p,p)=J(q,q)=c, J(p,q)=s*z,
        // J(q,p)=-s*conj(z), where z carries the phase of a(p,q). The
        // rotation angle is the classical Jacobi choice that annihilates
        // the pivot of the 2x2 subproblem [[a_pp, r], [r, a_qq]].
        const Complex z = apq / r;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int k = 0; k < 4; ++k) {  // columns: A <- A J
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(z) * akq;
          a(k, q) = s * z * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {  // rows: A <- J^H A
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * z * aqk;
          a(q, k) = s * std::conj(z) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        for (int k = 0; k < 4; ++k) {  // accumulate eigenvectors: V <- V J
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(z) * vkq;
          v(k, q) = s * z * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) >= kOffDiagonalTarget)
    throw NoConvergenceError(off_diagonal_norm(a));

  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  Eigensystem eig;
  for (int k = 0; k < 4; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    eig.values[static_cast<std::size_t>(k)] = a(src, src).real();
    for (int row = 0; row < 4; ++row)
      eig.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(row)] = v(row, src);
  }
  return eig;
}

DensityMatrix validate(const ComplexMatrix4& raw, TracePolicy policy) {
  if (!is_finite(raw)) throw std::invalid_argument("density matrix has non-finite entries");

  const double defect = hermiticity_defect(raw);
  if (defect > kHermitianTol) throw NotHermitianError(defect);

  const double tr = trace(raw).real();
  ComplexMatrix4 mat = raw;
  if (policy == TracePolicy::strict) {
    if (std::abs(tr - 1.0) > kTraceTolStrict) throw TraceInvalidError(tr);
  } else {
    if (std::abs(tr - 1.0) > kTraceTolRenormalize) throw TraceInvalidError(tr);
    mat = (1.0 / tr) * mat;
  }

  Eigensystem eig = hermitian_eigensystem(mat);
  const double min_eig = eig.values[3];
  if (min_eig < -kPsdTol) throw NotPositiveError(min_eig);
  for (double& lambda : eig.values)
    if (lambda < 0.0) lambda = 0.0;

  return DensityMatrix(mat, eig);
}

DensityMatrix from_pure(const std::array<Complex, 4>& psi) {
  double norm2 = 0.0;
  for (const Complex& amp : psi) norm2 += std::norm(amp);
  if (norm2 < 1e-200) throw ZeroVectorError();

  ComplexMatrix4 proj;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      proj(i, j) = psi[static_cast<std::size_t>(i)] * std::conj(psi[static_cast<std::size_t>(j)]) / norm2;
  return validate(proj, TracePolicy::strict);
}

double purity(const DensityMatrix& rho) {
  double p = 0.0;
  const ComplexMatrix4& m = rho.matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p += std::norm(m(i, j));
  return std::clamp(p, 0.25, 1.0);
}

MixednessReport linear_entropy(const DensityMatrix& rho) {
  const double p = purity(rho);
  const double s = 1.0 - p;
  return MixednessReport{p, s, (4.0 / 3.0) * s};
}

}  // namespace bellgauge
