#pragma once

#include <stdexcept>
#include <string>

namespace bellgauge {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix deviates from its own conjugate transpose beyond tolerance.
class NotHermitianError : public Error {
 public:
  explicit NotHermitianError(double defect)
      : Error("NotHermitian: max |A - A^H| = " + std::to_string(defect)),
        defect(defect) {}
  double defect;
};

/// Trace differs from 1 beyond what the trace policy allows.
class TraceInvalidError : public Error {
 public:
  explicit TraceInvalidError(double trace)
      : Error("TraceInvalid: trace = " + std::to_string(trace)), trace(trace) {}
  double trace;
};

/// Smallest eigenvalue is below the positive-semidefinite tolerance.
class NotPositiveError : public Error {
 public:
  explicit NotPositiveError(double min_eigenvalue)
      : Error("NotPositive: min eigenvalue = " + std::to_string(min_eigenvalue)),
        min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

/// Eigensolver failed to reach its off-diagonal target within the sweep cap.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(double off_norm)
      : Error("NoConvergence: off-diagonal norm = " + std::to_string(off_norm)),
        off_norm(off_norm) {}
  double off_norm;
};

/// A vector expected to be nonzero has (numerically) zero norm.
class ZeroVectorError : public Error {
 public:
  ZeroVectorError() : Error("ZeroVector: vector norm is zero") {}
};

/// A Pauli correlation came out with a non-negligible imaginary part.
class NonRealCorrelationError : public Error {
 public:
  explicit NonRealCorrelationError(double imag_part)
      : Error("NonRealCorrelation: |Im t_nm| = " + std::to_string(imag_part)),
        imag_part(imag_part) {}
  double imag_part;
};

/// Real matrix deviates from its transpose beyond tolerance.
class NotSymmetricError : public Error {
 public:
  explicit NotSymmetricError(double defect)
      : Error("NotSymmetric: max |M - M^T| = " + std::to_string(defect)),
        defect(defect) {}
  double defect;
};

/// Measurement direction is not a unit vector.
class NonUnitVectorError : public Error {
 public:
  explicit NonUnitVectorError(double norm)
      : Error("NonUnitVector: norm = " + std::to_string(norm)), norm(norm) {}
  double norm;
};

/// State does not have the X sparsity pattern.
class NotXStateError : public Error {
 public:
  explicit NotXStateError(double off_pattern)
      : Error("NotXState: max off-pattern entry = " + std::to_string(off_pattern)),
        off_pattern(off_pattern) {}
  double off_pattern;
};

/// X-state parameters violate normalization or positivity constraints.
class InfeasibleParamsError : public Error {
 public:
  explicit InfeasibleParamsError(const std::string& what) : Error("InfeasibleParams: " + what) {}
};

/// A scan grid contains no feasible point.
class EmptyGridError : public Error {
 public:
  EmptyGridError() : Error("EmptyGrid: no feasible grid point") {}
};

/// Entropy root finding failed: the target value is not attainable.
class NoRootError : public Error {
 public:
  explicit NoRootError(const std::string& what) : Error("NoRoot: " + what) {}
};

/// Input file or stream is not valid JSON of the expected shape.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

/// Filesystem-level failure (missing file, unwritable output).
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError: " + what) {}
};

}  // namespace bellgauge
