#include "critmech/oracle/space.hpp"

#include <cmath>
#include <string>

#include "critmech/errors.hpp"

namespace critmech::oracle {

TruncatedSpace::TruncatedSpace(std::vector<int> boson_cutoffs, std::optional<int> two_j,
                               std::size_t dimension_cap)
    : cutoffs_(std::move(boson_cutoffs)), two_j_(two_j) {
  if (cutoffs_.empty() && !two_j_) throw ConfigurationError("space needs at least one boson mode or a spin");
  for (int c : cutoffs_)
    if (c < 1) throw DomainError("Fock cutoffs must be >= 1");
  if (two_j_ && *two_j_ < 1) throw DomainError("spin 2j must be >= 1");

  // Accumulate as double first so an absurd request cannot overflow.
  double dim = static_cast<double>(spin_dimension());
  for (int c : cutoffs_) dim *= static_cast<double>(c + 1);
  if (dim > static_cast<double>(dimension_cap))
    throw ResourceError("Hilbert-space dimension " + std::to_string(static_cast<long long>(dim)) +
                        " exceeds cap " + std::to_string(dimension_cap));
  dimension_ = static_cast<std::size_t>(dim);

  strides_.assign(cutoffs_.size(), 1);
  std::size_t stride = spin_dimension();
  for (std::size_t i = cutoffs_.size(); i-- > 0;) {
    strides_[i] = stride;
    stride *= static_cast<std::size_t>(cutoffs_[i] + 1);
  }
}

double TruncatedSpace::spin_j() const {
  require_spin();
  return 0.5 * *two_j_;
}

void TruncatedSpace::require_mode(std::size_t mode) const {
  if (mode >= cutoffs_.size()) throw ConfigurationError("boson mode index out of range");
}

void TruncatedSpace::require_spin() const {
  if (!two_j_) throw ConfigurationError("space has no spin sector");
}

std::size_t TruncatedSpace::index_of(const BasisState& state) const {
  if (state.occupations.size() != cutoffs_.size()) throw DomainError("occupation list has wrong length");
  std::size_t idx = static_cast<std::size_t>(state.spin_index);
  for (std::size_t i = 0; i < cutoffs_.size(); ++i) idx += strides_[i] * static_cast<std::size_t>(state.occupations[i]);
  return idx;
}

BasisState TruncatedSpace::state_at(std::size_t index) const {
  BasisState s;
  s.occupations.resize(cutoffs_.size());
  for (std::size_t i = 0; i < cutoffs_.size(); ++i) {
    s.occupations[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  s.spin_index = static_cast<int>(index);
  return s;
}

OperatorMatrix TruncatedSpace::annihilation(std::size_t mode) const {
  require_mode(mode);
  auto op = OperatorMatrix::zero(dimension_);
  const std::size_t stride = strides_[mode];
  for (std::size_t idx = 0; idx < dimension_; ++idx) {
    const auto n = static_cast<int>((idx / stride) % static_cast<std::size_t>(cutoffs_[mode] + 1));
    if (n == 0) continue;
    op.entries()(static_cast<Eigen::Index>(idx - stride), static_cast<Eigen::Index>(idx)) = std::sqrt(double(n));
  }
  return op;
}

OperatorMatrix TruncatedSpace::creation(std::size_t mode) const { return annihilation(mode).adjoint(); }

OperatorMatrix TruncatedSpace::number(std::size_t mode) const {
  require_mode(mode);
  auto op = OperatorMatrix::zero(dimension_);
  for (std::size_t idx = 0; idx < dimension_; ++idx) {
    const auto n = (idx / strides_[mode]) % static_cast<std::size_t>(cutoffs_[mode] + 1);
    op.entries()(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) = double(n);
  }
  return op;
}

OperatorMatrix TruncatedSpace::spin_z() const {
  require_spin();
  const std::size_t sd = spin_dimension();
  auto op = OperatorMatrix::zero(dimension_);
  for (std::size_t idx = 0; idx < dimension_; ++idx) {
    const int s = static_cast<int>(idx % sd);
    op.entries()(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) = s - 0.5 * *two_j_;
  }
  return op;
}

OperatorMatrix TruncatedSpace::spin_plus() const {
  require_spin();
  const std::size_t sd = spin_dimension();
  const double j = spin_j();
  auto op = OperatorMatrix::zero(dimension_);
  for (std::size_t idx = 0; idx < dimension_; ++idx) {
    const int s = static_cast<int>(idx % sd);
    if (s == *two_j_) continue;
    const double m = s - j;
    op.entries()(static_cast<Eigen::Index>(idx + 1), static_cast<Eigen::Index>(idx)) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  return op;
}

OperatorMatrix TruncatedSpace::spin_minus() const { return spin_plus().adjoint(); }

OperatorMatrix TruncatedSpace::spin_x() const {
  auto plus = spin_plus();
  return (plus + plus.adjoint()) * OperatorMatrix::Scalar(0.5);
}

int TruncatedSpace::parity_of(std::size_t index) const {
  const BasisState s = state_at(index);
  int total = s.spin_index;
  for (int n : s.occupations) total += n;
  return total % 2 == 0 ? 1 : -1;
}

OperatorMatrix TruncatedSpace::parity() const {
  auto op = OperatorMatrix::zero(dimension_);
  for (std::size_t idx = 0; idx < dimension_; ++idx)
    op.entries()(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) = double(parity_of(idx));
  return op;
}

TruncatedSpace build_space(std::vector<int> boson_cutoffs, std::optional<int> two_j, std::size_t dimension_cap) {
  return TruncatedSpace(std::move(boson_cutoffs), two_j, dimension_cap);
}

}  // namespace critmech::oracle
