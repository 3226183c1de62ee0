#include "bellgauge/matrix.hpp"

#include <cmath>

#include "bellgauge/errors.hpp"

namespace bellgauge {

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n < 1e-200) throw ZeroVectorError();
  return (1.0 / n) * v;
}

Mat3 transpose(const Mat3& m) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return t;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    const auto& row = m[static_cast<std::size_t>(i)];
    r[i] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
  }
  return r;
}

double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double max_abs(const Mat3& m) {
  double r = 0.0;
  for (const auto& row : m)
    for (double x : row) r = std::max(r, std::abs(x));
  return r;
}

double symmetry_defect(const Mat3& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r = std::max(r, std::abs(m[i][j] - m[j][i]));
  return r;
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Matrix2 operator*(double s, const Matrix2& m) {
  Matrix2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = s * m.e[i];
  return r;
}

ComplexMatrix4 ComplexMatrix4::identity() {
  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix4 ComplexMatrix4::diagonal(const std::array<double, 4>& d) {
  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

ComplexMatrix4 operator*(Complex s, const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = s * m(i, j);
  return r;
}

ComplexMatrix4 operator*(double s, const ComplexMatrix4& m) {
  return Complex(s, 0.0) * m;
}

Complex trace(const ComplexMatrix4& m) {
  return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

ComplexMatrix4 adjoint(const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

ComplexMatrix4 conjugate(const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(i, j));
  return r;
}

double hermiticity_defect(const ComplexMatrix4& m) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
  return r;
}

double max_abs(const ComplexMatrix4& m) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
  return r;
}

bool is_finite(const ComplexMatrix4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

ComplexMatrix4 kron(const Matrix2& a, const Matrix2& b) {
  ComplexMatrix4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

}  // namespace bellgauge
