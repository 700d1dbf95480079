#pragma once

#include <vector>

#include "trilie/threelie.hpp"

namespace trilie {

/// Representation rho of a 3-Lie algebra on a dim-vdim space: skew matrices
/// on canonical basis pairs i<j, extended skew-symmetrically. Validity per
/// the two defining identities is checked by check_representation, not by
/// constructors.
class Representation {
 public:
  Representation() = default;
  /// maps[pair_index(i,j)] is rho(e_i, e_j) for i<j.
  Representation(ThreeLieAlgebra base, std::size_t vdim, std::vector<Matrix> maps);

  static Representation zero(ThreeLieAlgebra base, std::size_t vdim);

  const ThreeLieAlgebra& base() const { return base_; }
  std::size_t vdim() const { return vdim_; }

  Matrix rho(std::size_t i, std::size_t j) const;     ///< signed lookup
  Matrix rho(const Vec& x, const Vec& y) const;       ///< bilinear extension
  const std::vector<Matrix>& canonical_maps() const { return maps_; }

 private:
  ThreeLieAlgebra base_;
  std::size_t vdim_ = 0;
  std::vector<Matrix> maps_;
};

/// Index of (i,j), i<j, in the canonical pair enumeration of {0..n-1}.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
std::size_t pair_count(std::size_t n);

Representation adjoint_rep(const ThreeLieAlgebra& g);

/// Both defining identities on all basis 4-tuples.
Report check_representation(const Representation& r,
                            std::size_t max_witnesses = kDefaultMaxWitnesses);

/// rho*(x,y) = -rho(x,y)^T on the dual space.
Representation dual_representation(const Representation& r);

/// 3-Lie structure on g + V; never validates r (the equivalence "semidirect
/// passes FI iff r is a representation" is itself a test target).
ThreeLieAlgebra semidirect_product(const ThreeLieAlgebra& g, const Representation& r);

}  // namespace trilie
