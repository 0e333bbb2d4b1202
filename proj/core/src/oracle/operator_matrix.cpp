#include "critmech/oracle/operator_matrix.hpp"

#include <utility>

namespace critmech::oracle {

OperatorMatrix::OperatorMatrix(Matrix entries) : entries_(std::move(entries)) {}

OperatorMatrix OperatorMatrix::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return OperatorMatrix(Matrix::Zero(n, n));
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return OperatorMatrix(Matrix::Identity(n, n));
}

double OperatorMatrix::hermiticity_error() const {
  if (entries_.size() == 0) return 0.0;
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

bool OperatorMatrix::is_real() const { return (entries_.imag().array() == 0.0).all(); }

double OperatorMatrix::max_abs() const { return entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff(); }

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(entries_.adjoint()); }

double OperatorMatrix::commutator_max_abs(const OperatorMatrix& other) const {
  const Matrix c = entries_ * other.entries_ - other.entries_ * entries_;
  return c.size() == 0 ? 0.0 : c.cwiseAbs().maxCoeff();
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs) {
  entries_ += rhs.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs) {
  entries_ -= rhs.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Scalar s) {
  entries_ *= s;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  return OperatorMatrix(a.entries_ * b.entries_);
}

}  // namespace critmech::oracle
