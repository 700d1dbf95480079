#pragma once

#include "trilie/prelie.hpp"

namespace trilie {

/// Skewness, nondegeneracy and the 2-cocycle identity
/// w([x,y,z],w') - w([y,z,w'],x) + w([z,w',x],y) - w([w',x,y],z) = 0.
Report check_symplectic(const ThreeLieAlgebra& g, const BilForm& omega,
                        std::size_t max_witnesses = kDefaultMaxWitnesses);

/// Compatible pre-Lie product defined by w({x,y,z},w') = -w(z,[x,y,w']);
/// one linear solve per basis triple, unique by nondegeneracy. Throws when
/// omega is not symplectic.
ThreePreLie prelie_from_symplectic(const ThreeLieAlgebra& g, const BilForm& omega);

/// Invariance w({x,y,z},w') = -w(z,[x,y,w']_C) on all basis 4-tuples.
/// Throws when omega is degenerate or not skew.
bool check_quadratic_prelie(const ThreePreLie& a, const BilForm& omega);

/// Phase space of a 3-pre-Lie algebra: the semidirect product by the dual
/// of left multiplication, with the canonical pairing form.
struct PhaseSpace {
  ThreeLieAlgebra algebra;  ///< on A + A*, basis (e_1..e_n, e_1*..e_n*)
  BilForm omega;
  std::size_t half = 0;
};

/// Throws when a fails check_prelie_axioms.
PhaseSpace phase_space(const ThreePreLie& a);

struct PhaseSpaceVerdict {
  bool is_phase_space = false;
  bool perfect = false;
  bool omega_canonical = false;
  bool omega_symplectic = false;
  bool primal_subalgebra = false;
  bool dual_subalgebra = false;
};

/// Checks the declared splitting (first `half` basis vectors span h, the
/// rest h*). Throws when the dimensions do not split. half == 0 means dim/2.
PhaseSpaceVerdict check_phase_space(const ThreeLieAlgebra& g, const BilForm& omega,
                                    std::size_t half = 0);

/// Manin triple conditions for a 2n-dim pre-Lie algebra with the declared
/// splitting: quadratic invariance, isotropic pre-Lie subalgebras, and the
/// four mixed-product closure conditions.
Report check_manin_triple(const ThreePreLie& script_a, const BilForm& omega,
                          std::size_t half = 0,
                          std::size_t max_witnesses = kDefaultMaxWitnesses);

struct ManinAssembly {
  ThreePreLie algebra;            ///< assembled product on A + A*
  bool prelie_axioms_pass = false;
  bool subadjacent_matches = false;  ///< sub-adjacent equals the double bracket formula
};

/// Assembles the product on A + A* from two factor pre-Lie algebras via the
/// mixed-product formulas; validity is reported, not guaranteed.
ManinAssembly manin_mixed_products(const ThreePreLie& a, const ThreePreLie& a_star);

}  // namespace trilie
