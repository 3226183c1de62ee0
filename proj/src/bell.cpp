#include "bellgauge/bell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bellgauge/errors.hpp"

namespace bellgauge {

namespace {

constexpr double kRealTol = 1e-10;
constexpr double kSymmetricTol = 1e-10;
constexpr double kUnitTol = 1e-12;
constexpr double kPi = 3.14159265358979323846;

const std::array<Matrix2, 3>& pauli_table() {
  static const std::array<Matrix2, 3> table = [] {
    std::array<Matrix2, 3> t{};
    t[0](0, 1) = 1.0;  // X
    t[0](1, 0) = 1.0;
    t[1](0, 1) = Complex(0.0, -1.0);  // Y
    t[1](1, 0) = Complex(0.0, 1.0);
    t[2](0, 0) = 1.0;  // Z
    t[2](1, 1) = -1.0;
    return t;
  }();
  return table;
}

const std::array<ComplexMatrix4, 9>& pauli_kron_table() {
  static const std::array<ComplexMatrix4, 9> table = [] {
    std::array<ComplexMatrix4, 9> t{};
    for (int n = 0; n < 3; ++n)
      for (int m = 0; m < 3; ++m)
        t[static_cast<std::size_t>(3 * n + m)] = kron(pauli_table()[static_cast<std::size_t>(n)],
                                                      pauli_table()[static_cast<std::size_t>(m)]);
    return t;
  }();
  return table;
}

// Real symmetric 3x3 Jacobi eigensystem; eigenvectors are the columns of v.
// Only needed to seed the optimizer, so it stays private to this file.
void jacobi3(Mat3 a, std::array<double, 3>& values, Mat3& v) {
  v = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t q = p + 1; q < 3; ++q) {
        const double apq = a[p][q];
        if (std::abs(apq) < 1e-150) {
          a[p][q] = a[q][p] = 0.0;
          continue;
        }
        const double tau = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < 3; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 3; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = a[q][p] = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a[i][i] > a[j][j]; });
  Mat3 vs{};
  for (std::size_t k = 0; k < 3; ++k) {
    values[k] = a[order[k]][order[k]];
    for (std::size_t row = 0; row < 3; ++row) vs[row][k] = v[row][order[k]];
  }
  v = vs;
}

struct Spherical {
  double theta;
  double phi;
};

Spherical to_spherical(const Vec3& v) {
  const double theta = std::acos(std::clamp(v[2], -1.0, 1.0));
  // At the poles phi is undefined; reseed it at 0.
  if (std::abs(v[0]) < 1e-14 && std::abs(v[1]) < 1e-14) return {theta, 0.0};
  return {theta, std::atan2(v[1], v[0])};
}

Vec3 from_spherical(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

ChshSettings settings_from_angles(const std::array<double, 8>& ang) {
  return ChshSettings{from_spherical(ang[0], ang[1]), from_spherical(ang[2], ang[3]),
                      from_spherical(ang[4], ang[5]), from_spherical(ang[6], ang[7])};
}

// Golden-section maximization of f over [lo, hi].
template <typename F>
double golden_max(F&& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < 45; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

// Any unit vector orthogonal to a.
Vec3 unit_orthogonal(const Vec3& a) {
  const Vec3 axis = std::abs(a[0]) <= std::abs(a[1]) && std::abs(a[0]) <= std::abs(a[2])
                        ? Vec3{1, 0, 0}
                        : (std::abs(a[1]) <= std::abs(a[2]) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
  return normalized(axis - dot(axis, a) * a);
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double quad_form(const Mat3& m, const Vec3& x, const Vec3& y) {
  return dot(x, mat_vec(m, y));
}

ChshSettings canonical_settings() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return ChshSettings{Vec3{0, 0, 1}, Vec3{1, 0, 0},
                      Vec3{inv_sqrt2, 0, inv_sqrt2}, Vec3{-inv_sqrt2, 0, inv_sqrt2}};
}

}  // namespace

Matrix2 pauli(int n) {
  if (n < 0 || n > 2) throw std::invalid_argument("pauli index must be 0, 1 or 2");
  return pauli_table()[static_cast<std::size_t>(n)];
}

ComplexMatrix4 pauli_kron(int n, int m) {
  if (n < 0 || n > 2 || m < 0 || m > 2)
    throw std::invalid_argument("pauli index must be 0, 1 or 2");
  return pauli_kron_table()[static_cast<std::size_t>(3 * n + m)];
}

Matrix2 dot_sigma(const Vec3& v) {
  return v[0] * pauli_table()[0] + v[1] * pauli_table()[1] + v[2] * pauli_table()[2];
}

Mat3 correlation_matrix(const DensityMatrix& rho) {
  const ComplexMatrix4& m = rho.matrix();
  Mat3 T{};
  for (int n = 0; n < 3; ++n) {
    for (int mm = 0; mm < 3; ++mm) {
      const ComplexMatrix4& op = pauli_kron_table()[static_cast<std::size_t>(3 * n + mm)];
      Complex t = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t += m(i, j) * op(j, i);
      if (std::abs(t.imag()) > kRealTol) throw NonRealCorrelationError(std::abs(t.imag()));
      T[static_cast<std::size_t>(n)][static_cast<std::size_t>(mm)] = t.real();
    }
  }
  return T;
}

std::array<double, 3> symmetric3_eigenvalues(const Mat3& m) {
  const double defect = symmetry_defect(m);
  if (defect > kSymmetricTol) throw NotSymmetricError(defect);

  // Symmetrize before extracting the invariants.
  Mat3 a = m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) a[i][j] = a[j][i] = 0.5 * (m[i][j] + m[j][i]);

  const double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
  const double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
  const double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) +
                    (a[2][2] - q) * (a[2][2] - q) + 2.0 * p1;
  if (p2 <= 0.0) return {q, q, q};  // scalar matrix, triple root

  const double p = std::sqrt(p2 / 6.0);
  Mat3 b{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
  const double r = std::clamp(det3(b) / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;

  std::array<double, 3> eig;
  eig[0] = q + 2.0 * p * std::cos(phi);
  eig[2] = q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0);
  eig[1] = 3.0 * q - eig[0] - eig[2];
  std::sort(eig.begin(), eig.end(), std::greater<double>());

  // The acos branch splits a close root pair by O(sqrt(eps) * p), which is
  // too coarse for the 1e-9 invariants downstream (every pure state and
  // every X-state produces a double eigenvalue in T^T T). When one root is
  // clearly isolated, deflate it along its eigenvector and recompute the
  // remaining pair from the complement 2x2 block: that discriminant is a
  // sum of squares, so the pair comes out at working precision.
  const double scale = std::max(1.0, max_abs(a));
  const double gap_top = eig[0] - eig[1];
  const double gap_bot = eig[1] - eig[2];
  if (std::max(gap_top, gap_bot) > 1e-3 * scale) {
    const bool isolate_top = gap_top >= gap_bot;
    const double lambda = isolate_top ? eig[0] : eig[2];
    Mat3 shifted = a;
    for (std::size_t i = 0; i < 3; ++i) shifted[i][i] -= lambda;
    const Vec3 r0{shifted[0][0], shifted[0][1], shifted[0][2]};
    const Vec3 r1{shifted[1][0], shifted[1][1], shifted[1][2]};
    const Vec3 r2{shifted[2][0], shifted[2][1], shifted[2][2]};
    Vec3 nullvec = cross(r0, r1);
    for (const Vec3& candidate : {cross(r0, r2), cross(r1, r2)})
      if (dot(candidate, candidate) > dot(nullvec, nullvec)) nullvec = candidate;
    if (dot(nullvec, nullvec) > 1e-60) {
      const Vec3 v = normalized(nullvec);
      const Vec3 w1 = unit_orthogonal(v);
      const Vec3 w2 = cross(v, w1);
      const double baa = quad_form(a, w1, w1);
      const double bbb = quad_form(a, w1, w2);
      const double bdd = quad_form(a, w2, w2);
      const double half_sum = 0.5 * (baa + bdd);
      const double radius = std::sqrt(0.25 * (baa - bdd) * (baa - bdd) + bbb * bbb);
      const double iso = quad_form(a, v, v);
      eig = isolate_top ? std::array<double, 3>{iso, half_sum + radius, half_sum - radius}
                        : std::array<double, 3>{half_sum + radius, half_sum - radius, iso};
      std::sort(eig.begin(), eig.end(), std::greater<double>());
    }
  }
  return eig;
}

HorodeckiM horodecki_m(const Mat3& T) {
  std::array<double, 3> u = symmetric3_eigenvalues(mat_mul(transpose(T), T));
  // T^T T is positive semidefinite; scrub closed-form round-off.
  for (double& x : u)
    if (x < 0.0 && x > -1e-12) x = 0.0;
  return HorodeckiM{u, u[0] + u[1]};
}

CorrelationAnalysis chsh_max(const DensityMatrix& rho) {
  const Mat3 T = correlation_matrix(rho);
  const HorodeckiM hm = horodecki_m(T);
  const double bound = 2.0 * std::sqrt(std::max(hm.m, 0.0));
  return CorrelationAnalysis{T, hm.u, hm.m, bound, bound > 2.0};
}

ComplexMatrix4 build_chsh_operator(const ChshSettings& s) {
  for (const Vec3* v : {&s.a, &s.a_prime, &s.b, &s.b_prime}) {
    const double n = norm(*v);
    if (std::abs(n - 1.0) > kUnitTol) throw NonUnitVectorError(n);
  }
  const Vec3 b_plus = s.b + s.b_prime;
  const Vec3 b_minus = s.b - s.b_prime;
  return kron(dot_sigma(s.a), dot_sigma(b_plus)) +
         kron(dot_sigma(s.a_prime), dot_sigma(b_minus));
}

double chsh_value(const DensityMatrix& rho, const ChshSettings& s) {
  const ComplexMatrix4 B = build_chsh_operator(s);
  const ComplexMatrix4& m = rho.matrix();
  Complex t = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t += m(i, j) * B(j, i);
  if (std::abs(t.imag()) > kRealTol) throw NonRealCorrelationError(std::abs(t.imag()));
  return t.real();
}

double chsh_bilinear_value(const Mat3& T, const ChshSettings& s) {
  return dot(s.a, mat_vec(T, s.b + s.b_prime)) + dot(s.a_prime, mat_vec(T, s.b - s.b_prime));
}

OptimizeResult optimize_settings(const DensityMatrix& rho, int budget) {
  if (budget < 1) throw std::invalid_argument("optimize_settings budget must be >= 1");

  const Mat3 T = correlation_matrix(rho);
  if (max_abs(T) < 1e-14) {
    // Fully depolarized correlations: every setting gives 0.
    return OptimizeResult{canonical_settings(), 0.0, 0.0, true, 0};
  }

  std::array<double, 3> u{};
  Mat3 evec{};
  jacobi3(mat_mul(transpose(T), T), u, evec);
  const Vec3 v1{evec[0][0], evec[1][0], evec[2][0]};
  const Vec3 v2{evec[0][1], evec[1][1], evec[2][1]};

  const Vec3 tv1 = mat_vec(T, v1);
  const Vec3 tv2 = mat_vec(T, v2);
  const Vec3 a = norm(tv1) > 1e-12 ? normalized(tv1) : v1;
  const Vec3 a_prime = norm(tv2) > 1e-12 ? normalized(tv2) : unit_orthogonal(a);
  const double theta =
      std::atan2(std::sqrt(std::max(u[1], 0.0)), std::sqrt(std::max(u[0], 0.0)));
  const Vec3 b = std::cos(theta) * v1 + std::sin(theta) * v2;
  const Vec3 b_prime = std::cos(theta) * v1 - std::sin(theta) * v2;

  std::array<double, 8> ang{};
  {
    const std::array<Vec3, 4> seed{a, a_prime, normalized(b), normalized(b_prime)};
    for (std::size_t k = 0; k < 4; ++k) {
      const Spherical sp = to_spherical(seed[k]);
      ang[2 * k] = sp.theta;
      ang[2 * k + 1] = sp.phi;
    }
  }

  const auto objective = [&T](const std::array<double, 8>& angles) {
    return std::abs(chsh_bilinear_value(T, settings_from_angles(angles)));
  };

  double best = objective(ang);
  double window = 0.4;
  int sweeps = 0;
  for (; sweeps < budget; ++sweeps) {
    const double before = best;
    for (std::size_t i = 0; i < 8; ++i) {
      const double x0 = ang[i];
      const double x = golden_max(
          [&](double xi) {
            std::array<double, 8> trial = ang;
            trial[i] = xi;
            return objective(trial);
          },
          x0 - window, x0 + window);
      std::array<double, 8> trial = ang;
      trial[i] = x;
      const double f = objective(trial);
      if (f > best) {
        ang = trial;
        best = f;
      }
    }
    window = std::max(window * 0.6, 1e-7);
    if (best - before < 1e-9) {
      ++sweeps;
      break;
    }
  }

  const ChshSettings settings = settings_from_angles(ang);
  const double signed_value = chsh_value(rho, settings);
  return OptimizeResult{settings, std::abs(signed_value), signed_value, false, sweeps};
}

}  // namespace bellgauge
