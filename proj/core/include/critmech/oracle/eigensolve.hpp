#pragma once

#include <Eigen/Dense>

#include "critmech/oracle/operator_matrix.hpp"

namespace critmech::oracle {

struct EigensolveOptions {
  bool compute_vectors = true;
  // Verify ||H v - lambda v|| <= 1e-9 ||H|| for every pair; costs one extra
  // dense product.
  bool check_residuals = true;
  double hermitian_tolerance = 1e-12;
};

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;    // ascending
  Eigen::MatrixXcd eigenvectors;  // columns; empty when not requested
  double max_residual = 0.0;      // relative to max|H_ij|, 0 when unchecked
};

// Dense Hermitian eigensolver. ContractError when the input is not
// Hermitian to the tolerance (max elementwise deviation, relative to
// max(1, max|H_ij|)) or when a residual check fails.
SpectrumResult hermitian_eigensolve(const OperatorMatrix& matrix, const EigensolveOptions& options = {});

}  // namespace critmech::oracle
