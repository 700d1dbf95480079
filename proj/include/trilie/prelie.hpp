#pragma once

#include "trilie/bilform.hpp"
#include "trilie/reps.hpp"

namespace trilie {

/// 3-pre-Lie algebra: ternary product skew in its first two arguments.
/// The two five-variable axioms are checked by check_prelie_axioms.
class ThreePreLie {
 public:
  ThreePreLie() = default;

  /// Entries on pairs i<j with arbitrary third index; the (j,i,k) values
  /// are filled in by skewness.
  static ThreePreLie from_canonical(std::size_t dim, Field field,
                                    const std::vector<CanonicalEntry>& entries,
                                    std::vector<std::string> basis = {});

  /// Wrap a dense tensor, checking skewness in the first two slots.
  static ThreePreLie from_dense(Tensor4 d, Field field, std::vector<std::string> basis = {});

  static ThreePreLie abelian(std::size_t dim, Field field = Field::rational);

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const Tensor4& constants() const { return d_; }

  Vec product(std::size_t i, std::size_t j, std::size_t k) const { return d_.value(i, j, k); }
  Vec product(const Vec& x, const Vec& y, const Vec& z) const;

  /// Matrix of left multiplication L(x,y) : z -> {x,y,z}.
  Matrix left(std::size_t i, std::size_t j) const;
  /// Matrix of right multiplication R(x,y) : z -> {z,x,y}.
  Matrix right(std::size_t i, std::size_t j) const;

  friend bool operator==(const ThreePreLie& a, const ThreePreLie& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.d_ == b.d_;
  }

 private:
  std::size_t dim_ = 0;
  Field field_ = Field::rational;
  std::vector<std::string> basis_;
  Tensor4 d_;
};

/// Skewness in the first two slots plus both five-variable axioms.
Report check_prelie_axioms(const ThreePreLie& a,
                           std::size_t max_witnesses = kDefaultMaxWitnesses);

/// Sub-adjacent 3-Lie bracket [x,y,z]_C = {x,y,z} + {y,z,x} + {z,x,y}.
ThreeLieAlgebra sub_adjacent(const ThreePreLie& a);

/// Left multiplication packaged as a representation of sub_adjacent(a).
Representation left_mult(const ThreePreLie& a);
/// Right multiplications R(e_i,e_j), indexed i*dim+j; no representation claim.
std::vector<Matrix> right_mult(const ThreePreLie& a);

/// Representation (rho, mu) of a 3-pre-Lie algebra: rho on canonical skew
/// pairs, mu on all ordered pairs (no symmetry).
class PreLieRep {
 public:
  PreLieRep() = default;
  PreLieRep(ThreePreLie base, std::size_t vdim, std::vector<Matrix> rho_maps,
            std::vector<Matrix> mu_maps);

  static PreLieRep zero(ThreePreLie base, std::size_t vdim);
  /// (rho, 0) from a representation of the sub-adjacent algebra.
  static PreLieRep from_rho(ThreePreLie base, const Representation& rho);

  const ThreePreLie& base() const { return base_; }
  std::size_t vdim() const { return vdim_; }

  Matrix rho(std::size_t i, std::size_t j) const;
  Matrix rho(const Vec& x, const Vec& y) const;
  Matrix mu(std::size_t i, std::size_t j) const { return mu_[i * base_.dim() + j]; }
  Matrix mu(const Vec& x, const Vec& y) const;

 private:
  ThreePreLie base_;
  std::size_t vdim_ = 0;
  std::vector<Matrix> rho_;  // canonical pairs
  std::vector<Matrix> mu_;   // all ordered pairs, i*dim+j
};

/// The regular representation (L, R) on the algebra itself.
PreLieRep regular_rep(const ThreePreLie& a);

/// rho must represent the sub-adjacent algebra, plus the four mu identities
/// on all basis 4-tuples. Operator products apply the rightmost factor
/// first; this reading is pinned by the regular pair (L,R) passing.
Report check_prelie_representation(const PreLieRep& pr,
                                   std::size_t max_witnesses = kDefaultMaxWitnesses);

/// Pre-Lie product on A + V; does not validate pr.
ThreePreLie semidirect_prelie(const PreLieRep& pr);

/// (rho - mu tau + mu)(x,y) = rho(x,y) - mu(y,x) + mu(x,y), a representation
/// of the sub-adjacent algebra.
Representation combined_rep(const PreLieRep& pr);

/// Dual pair (rho* - mu* tau + mu*, -mu*) on V*.
PreLieRep dual_prelie_rep(const PreLieRep& pr);

/// [Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v) on basis triples.
Report check_O_operator(const ThreeLieAlgebra& g, const Representation& r, const Matrix& t,
                        std::size_t max_witnesses = kDefaultMaxWitnesses);

/// {x,y,z} = T rho(x,y) T^{-1} z for an invertible O-operator T. Throws when
/// T is singular or fails check_O_operator.
ThreePreLie compatible_prelie_from_O(const ThreeLieAlgebra& g, const Representation& r,
                                     const Matrix& t);

/// Invariance B({x,y,z},w) = -B(z,{x,y,w}) on all basis 4-tuples.
/// Throws when B is not symmetric nondegenerate.
bool check_invariant_form(const ThreePreLie& a, const BilForm& b);

/// Basis of the space of symmetric bilinear forms satisfying the invariance
/// identity (solved as a linear system); possibly all degenerate.
std::vector<Matrix> invariant_form_space(const ThreePreLie& a);

}  // namespace trilie
