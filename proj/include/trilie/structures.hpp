#pragma once

#include <optional>

#include "trilie/prelie.hpp"

namespace trilie {

/// Containment facts about the eigenspace decomposition, reported alongside
/// the integrability flags and used as classifier self-checks.
struct DecompositionFacts {
  bool plus_subalgebra = false;
  bool minus_subalgebra = false;
  bool plus_abelian = false;
  bool minus_abelian = false;
  bool mixed_ppm_zero = false;      ///< [g+,g+,g-] = 0
  bool mixed_mmp_zero = false;      ///< [g-,g-,g+] = 0
  bool mixed_ppm_in_plus = false;   ///< [g+,g+,g-] contained in g+
  bool mixed_ppm_in_minus = false;
  bool mixed_mmp_in_plus = false;
  bool mixed_mmp_in_minus = false;
};

/// Verdict of classify_product. Structure flags are only set when E is an
/// almost product structure (E^2 = Id, E != +-Id); the exclusion itself is
/// reported, not thrown.
struct ProductClass {
  bool square_is_identity = false;
  bool is_plus_minus_identity = false;
  bool almost = false;
  bool product = false;
  bool strict = false;
  bool abelian = false;
  bool strong_abelian = false;
  bool perfect = false;
  bool paracomplex = false;
  Subspace plus, minus;  ///< kernels of E - Id and E + Id
  std::optional<ThreePreLie> induced_prelie;  ///< present when strong_abelian
  DecompositionFacts facts;
};

ProductClass classify_product(const ThreeLieAlgebra& g, const Matrix& e);

/// E = +1 on w_plus, -1 on w_minus. Throws when the spans are not
/// complementary or one is not a subalgebra.
Matrix product_from_decomposition(const ThreeLieAlgebra& g, const Subspace& w_plus,
                                  const Subspace& w_minus);

/// Complexification g (x) C with the conjugation sigma fixing the real form.
struct Complexified {
  ThreeLieAlgebra algebra;  ///< same constants, gaussian_rational field
  ThreeLieAlgebra origin;
};

/// Throws when g is already over the gaussian rationals.
Complexified complexify(const ThreeLieAlgebra& g);

/// Verdict of classify_complex; flags only set when J^2 = -Id. Eigenspaces
/// live in the complexification.
struct ComplexClass {
  bool square_is_minus_identity = false;
  bool almost = false;
  bool complex_structure = false;
  bool strict = false;
  bool abelian = false;
  bool strong_abelian = false;
  bool perfect = false;
  Subspace eig_i, eig_minus_i;  ///< kernels of J_C -+ i Id in g (x) C
  std::optional<ThreePreLie> induced_prelie;  ///< present when strong_abelian (via -J)
  DecompositionFacts facts;     ///< over the complexification
};

/// Throws on odd dimension (J^2 = -Id is impossible there).
ComplexClass classify_complex(const ThreeLieAlgebra& g, const Matrix& j);

/// Deformed bracket [x,y,z]_J = 1/4([x,y,z] - [x,Jy,Jz] - [Jx,y,Jz] - [Jx,Jy,z]).
/// Requires a complex structure; the phi-intertwining with the +i eigenspace
/// bracket is verified internally on basis triples.
ThreeLieAlgebra j_bracket(const ThreeLieAlgebra& g, const Matrix& j);

/// Real complex structure from a subalgebra q with g_C = q + sigma(q),
/// via J_C(X + sigma(Y)) = iX - i sigma(Y).
Matrix complex_from_subalgebra(const Complexified& gc, const Subspace& q);

enum class DualityMode { product_to_complex, complex_to_product };

/// On a gaussian-field algebra: J = iE (or E = -iJ). Throws on real-field
/// input.
Matrix product_complex_duality(const ThreeLieAlgebra& g, const Matrix& m, DualityMode mode);

}  // namespace trilie
