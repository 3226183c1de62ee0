#pragma once

// Small fixed-size complex/real matrix types used throughout the library.
// Everything is a plain value; no dynamic allocation anywhere.

#include <array>
#include <complex>

namespace bellgauge {

using Complex = std::complex<double>;

/// Real 3-vector (measurement directions, Bloch-sphere axes).
struct Vec3 {
  std::array<double, 3> c{};

  Vec3() = default;
  Vec3(double x, double y, double z) : c{x, y, z} {}

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const double& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
/// Returns v / ||v||; throws ZeroVectorError when the norm vanishes.
Vec3 normalized(const Vec3& v);

/// Real 3x3 matrix, row major.
using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 transpose(const Mat3& m);
Mat3 mat_mul(const Mat3& a, const Mat3& b);
Vec3 mat_vec(const Mat3& m, const Vec3& v);
double det3(const Mat3& m);
double max_abs(const Mat3& m);
/// Largest |m(i,j) - m(j,i)| over all index pairs.
double symmetry_defect(const Mat3& m);

/// Complex 2x2 matrix, row major (single-qubit operators).
struct Matrix2 {
  std::array<Complex, 4> e{};

  Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
  const Complex& operator()(int r, int c) const {
    return e[static_cast<std::size_t>(2 * r + c)];
  }
};

Matrix2 operator+(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(double s, const Matrix2& m);

/// Complex 4x4 matrix, row major. Two-qubit basis ordering is
/// |00>, |01>, |10>, |11> with the first qubit as the left tensor factor.
class ComplexMatrix4 {
 public:
  ComplexMatrix4() = default;

  static ComplexMatrix4 identity();
  static ComplexMatrix4 diagonal(const std::array<double, 4>& d);

  Complex& operator()(int r, int c) { return e_[static_cast<std::size_t>(4 * r + c)]; }
  const Complex& operator()(int r, int c) const {
    return e_[static_cast<std::size_t>(4 * r + c)];
  }

 private:
  std::array<Complex, 16> e_{};
};

ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 operator*(Complex s, const ComplexMatrix4& m);
ComplexMatrix4 operator*(double s, const ComplexMatrix4& m);

Complex trace(const ComplexMatrix4& m);
ComplexMatrix4 adjoint(const ComplexMatrix4& m);
/// Entrywise complex conjugate (no transpose).
ComplexMatrix4 conjugate(const ComplexMatrix4& m);
/// Largest |m(i,j) - conj(m(j,i))| over all index pairs.
double hermiticity_defect(const ComplexMatrix4& m);
double max_abs(const ComplexMatrix4& m);
double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b);
bool is_finite(const ComplexMatrix4& m);

/// Kronecker product: (a (x) b)(2i+k, 2j+l) = a(i,j) * b(k,l).
ComplexMatrix4 kron(const Matrix2& a, const Matrix2& b);

}  // namespace bellgauge
