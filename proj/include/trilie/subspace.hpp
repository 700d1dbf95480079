#pragma once

#include <vector>

#include "trilie/linalg.hpp"
#include "trilie/matrix.hpp"

namespace trilie {

/// Subspace of a coordinate space, stored as a canonical (RREF) basis so
/// equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the given vectors inside a dim-`ambient` space.
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  /// Null space of a matrix, as a subspace of its column space.
  static Subspace kernel_of(const Matrix& a);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;  // canonical row-echelon basis
};

/// Image of a subspace under a linear map.
Subspace apply(const Matrix& m, const Subspace& w);

/// True iff u + w spans the whole ambient space with trivial intersection.
bool is_direct_sum(const Subspace& u, const Subspace& w);

}  // namespace trilie
