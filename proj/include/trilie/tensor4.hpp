#pragma once

#include <cstddef>
#include <vector>

#include "trilie/scalar.hpp"

namespace trilie {

/// Dense rank-4 coefficient tensor on a dim-n space: entry (i,j,k,l) is the
/// coefficient of basis vector l in the product of (e_i, e_j, e_k).
/// Symmetry constraints are imposed by the owning algebra type, not here.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t dim) : dim_(dim), a_(dim * dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return a_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return a_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }

  /// Value vector of the product of basis triple (i,j,k).
  std::vector<Scalar> value(std::size_t i, std::size_t j, std::size_t k) const;

  bool all_real() const;

  friend bool operator==(const Tensor4& a, const Tensor4& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Tensor4& a, const Tensor4& b) { return !(a == b); }

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> a_;
};

}  // namespace trilie
