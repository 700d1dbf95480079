#pragma once

#include "trilie/structures.hpp"
#include "trilie/symplectic.hpp"

namespace trilie {

/// Levi-Civita product of a pseudo-Riemannian 3-Lie algebra:
/// nabla(i,j,k,l) is the coefficient of e_l in nabla_{e_i,e_j} e_k.
struct LeviCivita {
  Tensor4 nabla;

  Vec eval(const Vec& x, const Vec& y, const Vec& z) const;
};

/// Combined verdict for the paired structures of the last three sections.
struct KaehlerVerdict {
  bool complex_product = false;
  bool perfect_complex_product = false;
  bool para_kaehler = false;
  bool perfect_para_kaehler = false;
  bool pseudo_kaehler = false;
  bool kaehler = false;
  std::optional<BilForm> metric;        ///< S = w(., E.) or w(., J.)
  std::pair<int, int> metric_signature{0, 0};  ///< (#pos, #neg); rational metrics only
};

/// Complex structure J and product structure E with JE = -EJ.
KaehlerVerdict check_complex_product(const ThreeLieAlgebra& g, const Matrix& j, const Matrix& e);

/// J from a linear isomorphism phi: g+ -> g- satisfying the compatibility
/// identity on g+ triples; phi's column t is the ambient image of the t-th
/// canonical basis vector of g+. Requires E perfect paracomplex; throws when
/// phi fails the identity.
Matrix complex_product_from_phi(const ThreeLieAlgebra& g, const Matrix& e, const Matrix& phi);

/// Symplectic omega + paracomplex E with w(Ex,Ey) = -w(x,y); on success the
/// metric S = w(., E.) is attached, verified symmetric nondegenerate.
KaehlerVerdict check_para_kaehler(const ThreeLieAlgebra& g, const BilForm& omega, const Matrix& e);

/// 3S(nabla_{x,y}z, w) = S([x,y,z],w) - 2S([x,y,w],z) + S([y,z,w],x) + S([z,x,w],y),
/// one linear solve per basis triple. Throws when S is degenerate or asymmetric.
LeviCivita levi_civita(const ThreeLieAlgebra& g, const BilForm& s);

/// Verifies, for a para-Kaehler triple: the pure restriction identities of
/// the Levi-Civita product against the omega-induced pre-Lie product; the
/// four mixed connection formulas (perfect case; reported not-applicable
/// otherwise); and on canonical phase spaces their L*/R* forms.
Report para_kaehler_mixed_formulas(const ThreeLieAlgebra& g, const BilForm& omega,
                                   const Matrix& e,
                                   std::size_t max_witnesses = kDefaultMaxWitnesses);

/// Symplectic omega + complex J with w(Jx,Jy) = w(x,y); kaehler flag set
/// when the induced metric is positive definite.
KaehlerVerdict check_pseudo_kaehler(const ThreeLieAlgebra& g, const BilForm& omega, const Matrix& j);

struct ComplexParaKaehler {
  Complexified g;
  BilForm omega;  ///< same matrix, gaussian field
  Matrix e;       ///< -i J_C
};

/// Throws when (g, omega, J) is not pseudo-Kaehler.
ComplexParaKaehler complexify_pseudo_kaehler(const ThreeLieAlgebra& g, const BilForm& omega,
                                             const Matrix& j);

struct RealPseudoKaehler {
  ThreeLieAlgebra g;  ///< realification, basis (e_1..e_n, i e_1..i e_n)
  BilForm omega;      ///< real part
  Matrix j;           ///< realification of iE
};

/// Throws when the gaussian triple is not para-Kaehler.
RealPseudoKaehler realify_para_kaehler(const ThreeLieAlgebra& gc, const BilForm& omega,
                                       const Matrix& e);

struct MetricPreLieResult {
  ThreeLieAlgebra algebra;  ///< phase space of A
  BilForm omega;
  Matrix j;  ///< from B-sharp
  Matrix e;  ///< x + a -> x - a
  KaehlerVerdict complex_product_verdict;   ///< for {J, E}
  KaehlerVerdict para_kaehler_verdict;      ///< for {omega, E}
  KaehlerVerdict pseudo_kaehler_verdict;    ///< for {omega, -J}
  bool kaehler = false;
};

/// All phase-space structures induced by an invariant metric B on a
/// 3-pre-Lie algebra. Throws when B is not symmetric nondegenerate invariant.
MetricPreLieResult metric_prelie_structures(const ThreePreLie& a, const BilForm& b);

struct AffComplexProduct {
  ThreeLieAlgebra algebra;  ///< aff(A) = A^c x|_L A
  Matrix j;                 ///< (x,y) -> (-y,x)
  Matrix e;                 ///< (x,y) -> (x,-y)
  KaehlerVerdict verdict;
};

AffComplexProduct aff_complex_product(const ThreePreLie& a);

}  // namespace trilie
