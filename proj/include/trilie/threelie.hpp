#pragma once

#include <string>
#include <vector>

#include "trilie/matrix.hpp"
#include "trilie/report.hpp"
#include "trilie/subspace.hpp"
#include "trilie/tensor4.hpp"

namespace trilie {

/// One structure-constant record on a canonical index tuple.
struct CanonicalEntry {
  std::size_t i, j, k;
  Vec value;  ///< coefficients over the basis
};

/// Finite-dimensional 3-Lie algebra: a totally skew-symmetric trilinear
/// bracket given by structure constants. The fundamental identity is NOT
/// enforced by constructors; run check_fundamental_identity.
class ThreeLieAlgebra {
 public:
  ThreeLieAlgebra() = default;

  /// Build from entries on canonical triples i<j<k; the rest of the tensor
  /// is filled in by skew-symmetry. Throws on non-canonical or duplicate
  /// triples and on shape mismatches.
  static ThreeLieAlgebra from_canonical(std::size_t dim, Field field,
                                        const std::vector<CanonicalEntry>& entries,
                                        std::vector<std::string> basis = {});

  /// Wrap a dense tensor, checking it is alternating in (i,j,k).
  static ThreeLieAlgebra from_dense(Tensor4 c, Field field, std::vector<std::string> basis = {});

  static ThreeLieAlgebra abelian(std::size_t dim, Field field = Field::rational);

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const Tensor4& constants() const { return c_; }

  Vec bracket(std::size_t i, std::size_t j, std::size_t k) const { return c_.value(i, j, k); }
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;

  /// Matrix of ad_{x,y} : z -> [x,y,z].
  Matrix ad(const Vec& x, const Vec& y) const;
  Matrix ad(std::size_t i, std::size_t j) const;

  friend bool operator==(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  std::size_t dim_ = 0;
  Field field_ = Field::rational;
  std::vector<std::string> basis_;
  Tensor4 c_;
};

std::vector<std::string> default_basis_names(std::size_t dim, const std::string& stem = "e");

/// Fundamental identity on canonical basis tuples (x<y, z<w<v); exhaustive
/// by multilinearity and skew-symmetry.
Report check_fundamental_identity(const ThreeLieAlgebra& g,
                                  std::size_t max_witnesses = kDefaultMaxWitnesses);

/// Equivalent formulation: every ad_{x,y} is a derivation of the bracket.
Report check_fundamental_identity_derivation_form(const ThreeLieAlgebra& g,
                                                  std::size_t max_witnesses = kDefaultMaxWitnesses);

bool is_subalgebra(const ThreeLieAlgebra& g, const Subspace& w);
bool is_abelian_on(const ThreeLieAlgebra& g, const Subspace& w);

/// First deformed bracket of a linear map N.
Vec bracket_n1(const ThreeLieAlgebra& g, const Matrix& n, const Vec& x, const Vec& y, const Vec& z);
/// Second deformed bracket of a linear map N.
Vec bracket_n2(const ThreeLieAlgebra& g, const Matrix& n, const Vec& x, const Vec& y, const Vec& z);

/// Nijenhuis condition [Nx,Ny,Nz] = N[x,y,z]_N^2 on all basis triples.
Report check_nijenhuis(const ThreeLieAlgebra& g, const Matrix& n,
                       std::size_t max_witnesses = kDefaultMaxWitnesses);

/// Block direct sum with zero mixed brackets.
ThreeLieAlgebra direct_sum(const ThreeLieAlgebra& g1, const ThreeLieAlgebra& g2);

}  // namespace trilie
