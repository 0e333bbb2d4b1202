#include "critmech/oracle/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "critmech/errors.hpp"

namespace critmech::oracle {

namespace {

template <typename Mat>
double residual_ratio(const Mat& h, const Eigen::VectorXd& values, const Mat& vectors) {
  const double norm = std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
  const Mat r = h * vectors - vectors * values.template cast<typename Mat::Scalar>().asDiagonal();
  const double worst = r.colwise().norm().maxCoeff();
  return norm > 0.0 ? worst / norm : worst;
}

}  // namespace

SpectrumResult hermitian_eigensolve(const OperatorMatrix& matrix, const EigensolveOptions& options) {
  SpectrumResult out;
  if (matrix.dim() == 0) return out;

  const double scale = std::max(1.0, matrix.max_abs());
  const double herm = matrix.hermiticity_error();
  if (herm > options.hermitian_tolerance * scale)
    throw ContractError("matrix is not Hermitian (max deviation " + std::to_string(herm) + ")");

  const int mode = options.compute_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  const bool check = options.compute_vectors && options.check_residuals;

  if (matrix.is_real()) {
    const Eigen::MatrixXd h = matrix.entries().real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, mode);
    if (solver.info() != Eigen::Success) throw ContractError("eigensolver did not converge");
    out.eigenvalues = solver.eigenvalues();
    if (options.compute_vectors) {
      if (check) out.max_residual = residual_ratio(h, out.eigenvalues, Eigen::MatrixXd(solver.eigenvectors()));
      out.eigenvectors = solver.eigenvectors().cast<std::complex<double>>();
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix.entries(), mode);
    if (solver.info() != Eigen::Success) throw ContractError("eigensolver did not converge");
    out.eigenvalues = solver.eigenvalues();
    if (options.compute_vectors) {
      out.eigenvectors = solver.eigenvectors();
      if (check) out.max_residual = residual_ratio(matrix.entries(), out.eigenvalues, out.eigenvectors);
    }
  }
  if (check && out.max_residual > 1e-9)
    throw ContractError("eigenpair residual " + std::to_string(out.max_residual) + " above 1e-9 ||H||");
  return out;
}

}  // namespace critmech::oracle
