#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace critmech::oracle {

// Dense operator on a truncated Hilbert space. Storage is always complex;
// Hamiltonians built by this library happen to be real, which the
// eigensolver detects and exploits.
class OperatorMatrix {
 public:
  using Scalar = std::complex<double>;
  using Matrix = Eigen::MatrixXcd;

  OperatorMatrix() = default;
  explicit OperatorMatrix(Matrix entries);

  static OperatorMatrix zero(std::size_t dim);
  static OperatorMatrix identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  Matrix& entries() { return entries_; }

  // max_ij |A_ij - conj(A_ji)|
  double hermiticity_error() const;
  bool is_real() const;
  double max_abs() const;

  OperatorMatrix adjoint() const;

  // max_ij |[A, B]_ij|
  double commutator_max_abs(const OperatorMatrix& other) const;

  OperatorMatrix& operator+=(const OperatorMatrix& rhs);
  OperatorMatrix& operator-=(const OperatorMatrix& rhs);
  OperatorMatrix& operator*=(Scalar s);

  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
  friend OperatorMatrix operator*(OperatorMatrix a, Scalar s) { return a *= s; }
  friend OperatorMatrix operator*(Scalar s, OperatorMatrix a) { return a *= s; }
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

 private:
  Matrix entries_;
};

}  // namespace critmech::oracle
