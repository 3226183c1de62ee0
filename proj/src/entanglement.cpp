#include "bellgauge/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "bellgauge/errors.hpp"

namespace bellgauge {

namespace {

constexpr double kMuClampTol = 1e-10;
constexpr double kXPatternTol = 1e-12;
constexpr double kPptTol = 1e-10;

const ComplexMatrix4& sigma_yy() {
  static const ComplexMatrix4 yy = [] {
    ComplexMatrix4 m;
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return yy;
}

ComplexMatrix4 matrix_sqrt(const DensityMatrix& rho) {
  const Eigensystem& eig = rho.eigensystem();
  ComplexMatrix4 s;
  for (int k = 0; k < 4; ++k) {
    const double root = std::sqrt(std::max(eig.values[static_cast<std::size_t>(k)], 0.0));
    const auto& v = eig.vectors[static_cast<std::size_t>(k)];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        s(i, j) += root * v[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]);
  }
  return s;
}

}  // namespace

ComplexMatrix4 spin_flip(const DensityMatrix& rho) {
  return sigma_yy() * conjugate(rho.matrix()) * sigma_yy();
}

double concurrence(const DensityMatrix& rho) {
  const ComplexMatrix4 root = matrix_sqrt(rho);
  const ComplexMatrix4 product = root * spin_flip(rho) * root;

  std::array<double, 4> mu = hermitian_eigensystem(product).values;
  for (double& m : mu) {
    if (m < -kMuClampTol) throw NotPositiveError(m);
    if (m < 0.0) m = 0.0;
  }
  // Rank deficiency is generic here (every pure or X state zeroes some
  // mu_k), and sqrt turns eps-level eigensolver noise on an exact zero
  // into 1e-8 jitter. Flush noise-level values before the square roots.
  const double noise_floor = std::max(1e-13 * mu[0], 1e-14);
  for (double& m : mu)
    if (m < noise_floor) m = 0.0;
  const double c = std::sqrt(mu[0]) - std::sqrt(mu[1]) - std::sqrt(mu[2]) - std::sqrt(mu[3]);
  return std::max(0.0, c);
}

double xstate_concurrence(const DensityMatrix& rho) {
  const ComplexMatrix4& m = rho.matrix();
  double off_pattern = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) off_pattern = std::max(off_pattern, std::abs(m(i, j)));
  if (off_pattern > kXPatternTol) throw NotXStateError(off_pattern);

  const double d0 = std::max(m(0, 0).real(), 0.0);
  const double d1 = std::max(m(1, 1).real(), 0.0);
  const double d2 = std::max(m(2, 2).real(), 0.0);
  const double d3 = std::max(m(3, 3).real(), 0.0);
  const double inner = std::abs(m(1, 2)) - std::sqrt(d0 * d3);
  const double outer = std::abs(m(0, 3)) - std::sqrt(d1 * d2);
  return 2.0 * std::max({0.0, inner, outer});
}

double partial_transpose_min_eigenvalue(const DensityMatrix& rho) {
  const ComplexMatrix4& m = rho.matrix();
  // Transpose each 2x2 block: entry (2i+k, 2j+l) <- (2i+l, 2j+k).
  ComplexMatrix4 pt;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) pt(2 * i + k, 2 * j + l) = m(2 * i + l, 2 * j + k);
  return hermitian_eigensystem(pt).values[3];
}

EntanglementReport entanglement_report(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  const double min_pt = partial_transpose_min_eigenvalue(rho);
  return EntanglementReport{c, min_pt, min_pt >= -kPptTol};
}

}  // namespace bellgauge
