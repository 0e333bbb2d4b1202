#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "critmech/oracle/operator_matrix.hpp"

namespace critmech::oracle {

inline constexpr std::size_t kDefaultDimensionCap = 20000;

// One product-basis vector: Fock occupation per boson mode plus the spin
// index s = m + j in [0, 2j].
struct BasisState {
  std::vector<int> occupations;
  int spin_index = 0;
};

// Tensor product of truncated Fock spaces (mode i keeps 0..cutoff_i) with an
// optional collective spin of magnitude j. The spin is stored as two_j = 2j
// so that half-integer j (odd N) is exact. Basis ordering: mode 0 is the
// most significant digit, the spin index the least significant.
//
// Operators are built on request and never cached.
class TruncatedSpace {
 public:
  TruncatedSpace(std::vector<int> boson_cutoffs, std::optional<int> two_j = std::nullopt,
                 std::size_t dimension_cap = kDefaultDimensionCap);

  std::span<const int> boson_cutoffs() const { return cutoffs_; }
  std::size_t mode_count() const { return cutoffs_.size(); }
  bool has_spin() const { return two_j_.has_value(); }
  std::optional<int> two_j() const { return two_j_; }
  double spin_j() const;
  std::size_t spin_dimension() const { return two_j_ ? static_cast<std::size_t>(*two_j_ + 1) : 1; }
  std::size_t dimension() const { return dimension_; }

  std::size_t index_of(const BasisState& state) const;
  BasisState state_at(std::size_t index) const;

  OperatorMatrix annihilation(std::size_t mode) const;
  OperatorMatrix creation(std::size_t mode) const;
  OperatorMatrix number(std::size_t mode) const;

  OperatorMatrix spin_z() const;
  OperatorMatrix spin_plus() const;
  OperatorMatrix spin_minus() const;
  OperatorMatrix spin_x() const;

  // exp[i pi (sum_i n_i + J_z + j)], diagonal with entries +-1.
  OperatorMatrix parity() const;
  // +1 / -1 parity of a single basis vector.
  int parity_of(std::size_t index) const;

  OperatorMatrix identity() const { return OperatorMatrix::identity(dimension_); }

 private:
  void require_mode(std::size_t mode) const;
  void require_spin() const;

  std::vector<int> cutoffs_;
  std::optional<int> two_j_;
  std::vector<std::size_t> strides_;  // per mode
  std::size_t dimension_ = 1;
};

// Validated constructor: cutoffs >= 1, 2j >= 1 when present, dimension
// within cap (ResourceError otherwise).
TruncatedSpace build_space(std::vector<int> boson_cutoffs, std::optional<int> two_j = std::nullopt,
                           std::size_t dimension_cap = kDefaultDimensionCap);

}  // namespace critmech::oracle
