#include <doctest.h>

#include "support/fixtures.hpp"

using namespace trilie;
using namespace trilie::testing;

TEST_CASE("the six listed forms are symplectic on A4") {
  ThreeLieAlgebra g = a4();
  for (int i = 1; i <= 6; ++i) CHECK(check_symplectic(g, a4_omega(i)).ok());
}

TEST_CASE("zero form fails nondegeneracy with a det witness") {
  Report r = check_symplectic(a4(), BilForm(Matrix::zero(4, 4), FormKind::skew));
  CHECK_FALSE(r.ok());
  const CheckItem* item = r.find("nondegenerate");
  REQUIRE(item != nullptr);
  CHECK(item->failed());
  CHECK(item->note == "det = 0");
}

TEST_CASE("any nondegenerate skew form on an even abelian algebra is symplectic") {
  Rng rng(71);
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(4);
  for (int t = 0; t < 20; ++t) CHECK(check_symplectic(ab, random_skew_nondegenerate(rng, 4)).ok());
}

TEST_CASE("pre-Lie structure from a symplectic form") {
  ThreeLieAlgebra g = a4();

  ThreePreLie p6 = prelie_from_symplectic(g, a4_omega(6));
  CHECK(check_prelie_axioms(p6).ok());
  CHECK(sub_adjacent(p6) == g);
  // The defining identity, on all basis 4-tuples, as an independent oracle.
  BilForm w6 = a4_omega(6);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l)
          CHECK(w6.eval(p6.product(i, j, k), unit_vec(4, l)) ==
                -w6.eval(unit_vec(4, k), g.bracket(i, j, l)));
  CHECK(check_quadratic_prelie(p6, w6));

  // Abelian input gives the abelian pre-Lie algebra.
  Rng rng(73);
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(4);
  ThreePreLie pa = prelie_from_symplectic(ab, random_skew_nondegenerate(rng, 4));
  CHECK(pa.constants() == ThreePreLie::abelian(4).constants());

  CHECK_THROWS_AS(prelie_from_symplectic(g, BilForm(Matrix::zero(4, 4), FormKind::skew)),
                  std::invalid_argument);
}

TEST_CASE("quadratic check rejects odd-dimensional skew forms") {
  ThreePreLie a = derived_prelie3();
  Matrix skew(3, 3);
  skew.at(0, 1) = Scalar(1);
  skew.at(1, 0) = Scalar(-1);
  CHECK_THROWS_AS(check_quadratic_prelie(a, BilForm(skew, FormKind::skew)), std::invalid_argument);
}

TEST_CASE("phase space of the derived pre-Lie algebra") {
  ThreePreLie a = derived_prelie3();
  PhaseSpace ps = phase_space(a);
  CHECK(ps.algebra.dim() == 6);
  CHECK(ps.half == 3);
  CHECK(check_fundamental_identity(ps.algebra).ok());
  CHECK(check_symplectic(ps.algebra, ps.omega).ok());

  PhaseSpaceVerdict v = check_phase_space(ps.algebra, ps.omega);
  CHECK(v.is_phase_space);
  CHECK(v.perfect);

  // The canonical form in the (basis, dual basis) order is [[0,-I],[I,0]].
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(ps.omega.m.at(i, 3 + i) == Scalar(-1));
    CHECK(ps.omega.m.at(3 + i, i) == Scalar(1));
  }

  // The primal half keeps the original pre-Lie product (restriction of the
  // induced quadratic structure).
  ThreePreLie induced = prelie_from_symplectic(ps.algebra, ps.omega);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        Vec v6 = induced.product(i, j, k);
        Vec expect = a.product(i, j, k);
        for (std::size_t l = 0; l < 3; ++l) {
          CHECK(v6[l] == expect[l]);
          CHECK(v6[3 + l].is_zero());
        }
      }
}

TEST_CASE("phase space of an abelian pre-Lie algebra") {
  PhaseSpace ps = phase_space(ThreePreLie::abelian(2));
  CHECK(ps.algebra.dim() == 4);
  CHECK(is_abelian_on(ps.algebra, Subspace::span(4, {unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2),
                                                     unit_vec(4, 3)})));
  PhaseSpaceVerdict v = check_phase_space(ps.algebra, ps.omega);
  CHECK(v.is_phase_space);
  CHECK(v.perfect);
}

TEST_CASE("phase space checker on other inputs") {
  // Direct sum of A4 with a 4-dim abelian block under the canonical pairing
  // form: the mixed conditions hold trivially, so the verdict reduces to the
  // symplectic check.
  ThreeLieAlgebra g = direct_sum(a4(), ThreeLieAlgebra::abelian(4));
  BilForm omega = canonical_phase_form(4);
  PhaseSpaceVerdict v = check_phase_space(g, omega);
  CHECK(v.primal_subalgebra);
  CHECK(v.dual_subalgebra);
  CHECK(v.perfect);
  CHECK(v.is_phase_space == (v.omega_canonical && v.omega_symplectic));

  CHECK_THROWS_AS(check_phase_space(threedim(), canonical_phase_form(2), 0),
                  std::invalid_argument);
}

TEST_CASE("Manin triple of the derived pre-Lie phase space") {
  ThreePreLie a = derived_prelie3();
  PhaseSpace ps = phase_space(a);
  ThreePreLie quad = prelie_from_symplectic(ps.algebra, ps.omega);
  CHECK(check_manin_triple(quad, ps.omega).ok());

  // Abelian ambient algebra with the standard form.
  ThreePreLie ab = ThreePreLie::abelian(4);
  CHECK(check_manin_triple(ab, canonical_phase_form(2)).ok());
}

TEST_CASE("mixed-product assembly reproduces the double bracket") {
  ThreePreLie a = derived_prelie3();

  // A' abelian: reduces to the phase-space product.
  ManinAssembly m = manin_mixed_products(a, ThreePreLie::abelian(3));
  CHECK(m.prelie_axioms_pass);
  CHECK(m.subadjacent_matches);
  PhaseSpace ps = phase_space(a);
  CHECK(sub_adjacent(m.algebra).constants() == ps.algebra.constants());
  ThreePreLie quad = prelie_from_symplectic(ps.algebra, ps.omega);
  CHECK(m.algebra.constants() == quad.constants());

  // Both abelian.
  ManinAssembly m0 = manin_mixed_products(ThreePreLie::abelian(2), ThreePreLie::abelian(2));
  CHECK(m0.prelie_axioms_pass);
  CHECK(m0.subadjacent_matches);
  CHECK(m0.algebra.constants() == ThreePreLie::abelian(4).constants());

  // The sub-adjacent bracket always matches the double-bracket formula, even
  // for factor pairs that fail the pre-Lie axioms.
  Rng rng(79);
  for (int t = 0; t < 30; ++t) {
    std::vector<CanonicalEntry> entries;
    for (std::size_t k = 0; k < 2; ++k) entries.push_back({0, 1, k, random_vec(rng, 2)});
    ThreePreLie f1 = ThreePreLie::from_canonical(2, Field::rational, entries);
    ThreePreLie f2 = change_basis(f1, random_invertible(rng, 2));
    ManinAssembly mm = manin_mixed_products(f1, f2);
    CHECK(mm.subadjacent_matches);
  }
}

TEST_CASE("iterated doubling produces growing symplectic algebras") {
  ThreePreLie a = derived_prelie3();
  PhaseSpace ps1 = phase_space(a);
  ThreePreLie a2 = prelie_from_symplectic(ps1.algebra, ps1.omega);
  PhaseSpace ps2 = phase_space(a2);
  CHECK(ps2.algebra.dim() == 12);
  CHECK(check_fundamental_identity(ps2.algebra).ok());
  CHECK(check_symplectic(ps2.algebra, ps2.omega).ok());
  PhaseSpaceVerdict v = check_phase_space(ps2.algebra, ps2.omega);
  CHECK(v.is_phase_space);
  CHECK(v.perfect);
}
