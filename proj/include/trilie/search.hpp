#pragma once

#include "trilie/kaehler.hpp"

namespace trilie {

/// Structured candidate endomorphisms with an exact involution constraint.
struct CandidateFamily {
  enum class Kind { diagonal_signs, signed_permutations, explicit_list };
  enum class Constraint { square_is_identity, square_is_minus_identity };

  Kind kind = Kind::diagonal_signs;
  Constraint constraint = Constraint::square_is_identity;
  std::vector<Matrix> explicit_candidates;  ///< for Kind::explicit_list
};

inline constexpr std::size_t kDiagonalFamilyMaxDim = 20;
inline constexpr std::size_t kSignedPermutationFamilyMaxDim = 10;

/// All candidates with E^2 = Id and E != +-Id, classified, in a canonical
/// (lexicographic) order. Throws when the dimension exceeds the family cap
/// or the family constraint is not square_is_identity.
std::vector<std::pair<Matrix, ProductClass>> enumerate_products(const ThreeLieAlgebra& g,
                                                                const CandidateFamily& family);

/// All candidates with J^2 = -Id, classified. For signed permutations these
/// are the pairings of basis vectors into 2-cycles carrying one + and one -.
/// Throws on odd dimension or a cap/constraint violation.
std::vector<std::pair<Matrix, ComplexClass>> enumerate_complex(const ThreeLieAlgebra& g,
                                                               const CandidateFamily& family);

/// Compatible pairings among enumerated structures; indices refer to the
/// input lists. Every reported pair re-verifies under its module-of-record
/// checker.
struct PairReport {
  std::vector<std::pair<std::size_t, std::size_t>> complex_product;  ///< (j_idx, e_idx)
  std::vector<std::pair<std::size_t, std::size_t>> para_kaehler;     ///< (omega_idx, e_idx)
  std::vector<std::pair<std::size_t, std::size_t>> pseudo_kaehler;   ///< (omega_idx, j_idx)
};

PairReport pair_search(const ThreeLieAlgebra& g, const std::vector<Matrix>& products,
                       const std::vector<Matrix>& complexes,
                       const std::vector<BilForm>& omegas);

}  // namespace trilie
