#pragma once

// Shared helpers for the unit and acceptance suites: random unitaries,
// random product/X states, Bell states, and conjugation utilities.

#include <array>
#include <cmath>

#include "bellgauge/explorer.hpp"
#include "bellgauge/matrix.hpp"
#include "bellgauge/qstate.hpp"

namespace test_support {

using bellgauge::Complex;
using bellgauge::ComplexMatrix4;
using bellgauge::DensityMatrix;
using bellgauge::Matrix2;
using bellgauge::RandomStream;

// Haar-ish 2x2 unitary: Gram-Schmidt on Ginibre columns. Good enough for
// invariance tests, which only need generic unitaries.
inline Matrix2 random_unitary2(RandomStream& rng) {
  std::array<Complex, 2> c0{rng.complex_normal(), rng.complex_normal()};
  std::array<Complex, 2> c1{rng.complex_normal(), rng.complex_normal()};
  double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0[0] /= n0;
  c0[1] /= n0;
  const Complex proj = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1[0] -= proj * c0[0];
  c1[1] -= proj * c0[1];
  double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1[0] /= n1;
  c1[1] /= n1;
  Matrix2 u;
  u(0, 0) = c0[0];
  u(1, 0) = c0[1];
  u(0, 1) = c1[0];
  u(1, 1) = c1[1];
  return u;
}

inline ComplexMatrix4 random_unitary4(RandomStream& rng) {
  std::array<std::array<Complex, 4>, 4> col{};
  for (auto& c : col)
    for (auto& x : c) x = rng.complex_normal();
  for (int j = 0; j < 4; ++j) {
    auto& cj = col[static_cast<std::size_t>(j)];
    for (int k = 0; k < j; ++k) {
      const auto& ck = col[static_cast<std::size_t>(k)];
      Complex proj = 0.0;
      for (int i = 0; i < 4; ++i) proj += std::conj(ck[static_cast<std::size_t>(i)]) * cj[static_cast<std::size_t>(i)];
      for (int i = 0; i < 4; ++i) cj[static_cast<std::size_t>(i)] -= proj * ck[static_cast<std::size_t>(i)];
    }
    double n = 0.0;
    for (const Complex& x : cj) n += std::norm(x);
    n = std::sqrt(n);
    for (Complex& x : cj) x /= n;
  }
  ComplexMatrix4 u;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) u(i, j) = col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return u;
}

inline DensityMatrix conjugated(const DensityMatrix& rho, const ComplexMatrix4& u) {
  return bellgauge::validate(u * rho.matrix() * bellgauge::adjoint(u),
                             bellgauge::TracePolicy::strict);
}

inline ComplexMatrix4 local_unitary(const Matrix2& ua, const Matrix2& ub) {
  return bellgauge::kron(ua, ub);
}

/// which: 0 -> (|00>+|11>)/sqrt2, 1 -> (|00>-|11>)/sqrt2,
///        2 -> (|01>+|10>)/sqrt2, 3 -> (|01>-|10>)/sqrt2 (singlet)
inline DensityMatrix bell_state(int which) {
  std::array<Complex, 4> psi{};
  switch (which) {
    case 0: psi = {1, 0, 0, 1}; break;
    case 1: psi = {1, 0, 0, -1}; break;
    case 2: psi = {0, 1, 1, 0}; break;
    default: psi = {0, 1, -1, 0}; break;
  }
  return bellgauge::from_pure(psi);
}

inline DensityMatrix singlet() { return bell_state(3); }

inline DensityMatrix random_product_pure(RandomStream& rng) {
  std::array<Complex, 2> a{rng.complex_normal(), rng.complex_normal()};
  std::array<Complex, 2> b{rng.complex_normal(), rng.complex_normal()};
  std::array<Complex, 4> psi{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
  return bellgauge::from_pure(psi);
}

/// General X-shaped state: random diagonal on the simplex plus complex
/// couplings on both anti-diagonal pairs, kept strictly inside the
/// positivity region.
inline DensityMatrix random_xstate(RandomStream& rng) {
  std::array<double, 4> p{};
  double sum = 0.0;
  for (double& x : p) {
    x = -std::log(1.0 - rng.uniform());
    sum += x;
  }
  for (double& x : p) x /= sum;

  const double r_outer = 0.95 * rng.uniform() * std::sqrt(p[0] * p[3]);
  const double r_inner = 0.95 * rng.uniform() * std::sqrt(p[1] * p[2]);
  const double phi_outer = 2.0 * 3.14159265358979323846 * rng.uniform();
  const double phi_inner = 2.0 * 3.14159265358979323846 * rng.uniform();

  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = p[static_cast<std::size_t>(i)];
  m(0, 3) = std::polar(r_outer, phi_outer);
  m(3, 0) = std::conj(m(0, 3));
  m(1, 2) = std::polar(r_inner, phi_inner);
  m(2, 1) = std::conj(m(1, 2));
  return bellgauge::validate(m, bellgauge::TracePolicy::strict);
}

}  // namespace test_support
