#include <doctest.h>

#include "support/fixtures.hpp"

using namespace trilie;
using namespace trilie::testing;

TEST_CASE("derived 3-dim pre-Lie algebra") {
  ThreePreLie a = derived_prelie3();
  // {x,y,z} = E[x,y,Ez] with E = diag(1,1,-1) on [e1,e2,e3] = e1.
  CHECK(a.product(0, 1, 2) == -unit_vec(3, 0));
  CHECK(a.product(1, 2, 0) == unit_vec(3, 0));
  CHECK(a.product(2, 0, 1) == unit_vec(3, 0));
  CHECK(a.product(0, 2, 1) == -a.product(2, 0, 1));
  CHECK(check_prelie_axioms(a).ok());

  // Sub-adjacent bracket recovers the 3-dim algebra entrywise.
  CHECK(sub_adjacent(a) == threedim());
}

TEST_CASE("pre-Lie axioms reject a symmetric product") {
  Tensor4 d(3);
  d.at(0, 1, 2, 0) = Scalar(1);
  d.at(1, 0, 2, 0) = Scalar(1);
  CHECK_THROWS_AS(ThreePreLie::from_dense(d, Field::rational), std::logic_error);

  CHECK(check_prelie_axioms(ThreePreLie::abelian(4)).ok());
}

TEST_CASE("sub-adjacent bracket is alternating for random skew tensors") {
  Rng rng(47);
  for (int t = 0; t < 40; ++t) {
    std::vector<CanonicalEntry> entries;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) entries.push_back({i, j, k, random_vec(rng, 3)});
    ThreePreLie a = ThreePreLie::from_canonical(3, Field::rational, entries);
    // The cyclic sum is alternating whether or not the axioms hold.
    Vec x = random_vec(rng, 3), y = random_vec(rng, 3);
    auto cyc = [&](const Vec& u, const Vec& v, const Vec& w) {
      return a.product(u, v, w) + a.product(v, w, u) + a.product(w, u, v);
    };
    CHECK(is_zero(cyc(x, x, y)));
    CHECK(is_zero(cyc(x, y, y)));
    CHECK(cyc(x, y, x + y) == cyc(x, y, x) + cyc(x, y, y));
  }
}

TEST_CASE("left multiplication is a representation of the sub-adjacent algebra") {
  ThreePreLie a = derived_prelie3();
  CHECK(a.left(0, 1).apply(unit_vec(3, 2)) == -unit_vec(3, 0));
  Representation l = left_mult(a);
  CHECK(check_representation(l).ok());

  ThreePreLie ab = ThreePreLie::abelian(3);
  Representation lab = left_mult(ab);
  for (const Matrix& m : lab.canonical_maps()) CHECK(m == Matrix::zero(3, 3));
  for (const Matrix& m : right_mult(ab)) CHECK(m == Matrix::zero(3, 3));

  Rng rng(53);
  for (int t = 0; t < 25; ++t) {
    ThreePreLie b = change_basis(derived_prelie3(), random_invertible(rng, 3));
    CHECK(check_prelie_axioms(b).ok());
    CHECK(check_representation(left_mult(b)).ok());
  }
}

TEST_CASE("pre-Lie representation identities accept the canonical pairs") {
  ThreePreLie a = derived_prelie3();

  // (rho, 0) for a sub-adjacent representation.
  PreLieRep rho0 = PreLieRep::from_rho(a, adjoint_rep(sub_adjacent(a)));
  CHECK(check_prelie_representation(rho0).ok());

  // The regular pair (L, R); this pins the operator-composition reading.
  CHECK(check_prelie_representation(regular_rep(a)).ok());

  CHECK(check_prelie_representation(PreLieRep::zero(ThreePreLie::abelian(3), 2)).ok());

  Rng rng(59);
  for (int t = 0; t < 10; ++t) {
    ThreePreLie b = change_basis(derived_prelie3(), random_invertible(rng, 3));
    CHECK(check_prelie_representation(regular_rep(b)).ok());
  }
}

TEST_CASE("semidirect pre-Lie products") {
  ThreePreLie a = derived_prelie3();

  PreLieRep zero = PreLieRep::zero(a, 2);
  ThreePreLie sd0 = semidirect_prelie(zero);
  CHECK(sd0.dim() == 5);
  CHECK(check_prelie_axioms(sd0).ok());

  ThreePreLie sd = semidirect_prelie(regular_rep(a));
  CHECK(sd.dim() == 6);
  CHECK(check_prelie_axioms(sd).ok());
}

TEST_CASE("sub-adjacent of a semidirect product matches the combined representation") {
  Rng rng(61);
  for (int trial = 0; trial < 210; ++trial) {
    ThreePreLie a = trial % 2 ? derived_prelie3()
                              : change_basis(derived_prelie3(), random_invertible(rng, 3));
    PreLieRep pr = [&]() -> PreLieRep {
      switch (trial % 3) {
        case 0: return regular_rep(a);
        case 1: return PreLieRep::from_rho(a, adjoint_rep(sub_adjacent(a)));
        default: return dual_prelie_rep(regular_rep(a));
      }
    }();
    ThreeLieAlgebra lhs = sub_adjacent(semidirect_prelie(pr));
    ThreeLieAlgebra rhs = semidirect_product(sub_adjacent(a), combined_rep(pr));
    CHECK(lhs.constants() == rhs.constants());
  }
}

TEST_CASE("combined representation") {
  ThreePreLie a = derived_prelie3();

  // (L,R) combines to the adjoint representation of the sub-adjacent algebra.
  Representation combined = combined_rep(regular_rep(a));
  Representation ad = adjoint_rep(sub_adjacent(a));
  for (std::size_t t = 0; t < combined.canonical_maps().size(); ++t)
    CHECK(combined.canonical_maps()[t] == ad.canonical_maps()[t]);

  // (rho, 0) is left unchanged.
  PreLieRep rho0 = PreLieRep::from_rho(a, adjoint_rep(sub_adjacent(a)));
  Representation same = combined_rep(rho0);
  for (std::size_t t = 0; t < same.canonical_maps().size(); ++t)
    CHECK(same.canonical_maps()[t] == ad.canonical_maps()[t]);

  CHECK(check_representation(combined).ok());
}

TEST_CASE("dual pre-Lie representation") {
  ThreePreLie a = derived_prelie3();

  // Dual of (rho, 0) is (rho*, 0).
  Representation ad = adjoint_rep(sub_adjacent(a));
  PreLieRep dual0 = dual_prelie_rep(PreLieRep::from_rho(a, ad));
  Representation adstar = dual_representation(ad);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(dual0.rho(i, j) == adstar.rho(i, j));
      CHECK(dual0.mu(i, j) == Matrix::zero(3, 3));
    }

  // Dual of the regular pair is (ad*, -R*).
  PreLieRep dual = dual_prelie_rep(regular_rep(a));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i < j) CHECK(dual.rho(i, j) == adstar.rho(i, j));
      CHECK(dual.mu(i, j) == a.right(i, j).transpose());
    }
  CHECK(check_prelie_representation(dual).ok());

  // combined_rep of the dual pair equals the dual of left multiplication.
  Representation lstar = dual_representation(left_mult(a));
  Representation comb = combined_rep(dual);
  for (std::size_t t = 0; t < comb.canonical_maps().size(); ++t)
    CHECK(comb.canonical_maps()[t] == lstar.canonical_maps()[t]);
}

TEST_CASE("O-operators") {
  ThreeLieAlgebra g3 = threedim();
  Representation ad3 = adjoint_rep(g3);

  CHECK(check_O_operator(g3, ad3, Matrix::zero(3, 3)).ok());
  CHECK(check_O_operator(g3, ad3, diag({1, 1, -1})).ok());

  // T = Id on A4 fails: [u,v,w] on the left, 3[u,v,w] on the right.
  ThreeLieAlgebra g4 = a4();
  Report r = check_O_operator(g4, adjoint_rep(g4), Matrix::identity(4));
  CHECK_FALSE(r.ok());

  CHECK_THROWS_AS(check_O_operator(g4, ad3, Matrix::zero(3, 3)), std::invalid_argument);
}

TEST_CASE("compatible pre-Lie structure from an invertible O-operator") {
  ThreeLieAlgebra g = threedim();
  Matrix e = diag({1, 1, -1});
  ThreePreLie a = compatible_prelie_from_O(g, adjoint_rep(g), e);
  // {x,y,z} = E[x,y,Ez].
  CHECK(a.product(0, 1, 2) == -unit_vec(3, 0));
  CHECK(check_prelie_axioms(a).ok());
  CHECK(sub_adjacent(a) == g);

  // Abelian algebra: any invertible T gives the abelian pre-Lie structure.
  Rng rng(67);
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(3);
  ThreePreLie pa = compatible_prelie_from_O(ab, adjoint_rep(ab), random_invertible(rng, 3));
  CHECK(pa.constants() == ThreePreLie::abelian(3).constants());

  CHECK_THROWS_AS(compatible_prelie_from_O(a4(), adjoint_rep(a4()), Matrix::identity(4)),
                  std::invalid_argument);
  Matrix singular(3, 3);
  CHECK_THROWS_AS(compatible_prelie_from_O(g, adjoint_rep(g), singular), std::invalid_argument);
}

TEST_CASE("invariant bilinear forms") {
  ThreePreLie ab = ThreePreLie::abelian(3);
  BilForm id3(Matrix::identity(3), FormKind::symmetric);
  CHECK(check_invariant_form(ab, id3));

  ThreePreLie a = derived_prelie3();
  CHECK_FALSE(check_invariant_form(a, id3));

  // Invariance is preserved under positive rational scaling.
  Matrix scaled = Scalar(7, 3) * Matrix::identity(3);
  CHECK(check_invariant_form(ab, BilForm(scaled, FormKind::symmetric)));

  Matrix degenerate(3, 3);
  CHECK_THROWS_AS(check_invariant_form(a, BilForm(degenerate, FormKind::symmetric)),
                  std::invalid_argument);
}

TEST_CASE("invariant form solution space") {
  // For the abelian pre-Lie algebra every symmetric form is invariant.
  CHECK(invariant_form_space(ThreePreLie::abelian(2)).size() == 3);

  // Solutions of the linear system are exactly the invariant forms.
  ThreePreLie a = derived_prelie3();
  for (const Matrix& b : invariant_form_space(a)) {
    if (determinant(b).is_zero()) continue;
    CHECK(check_invariant_form(a, BilForm(b, FormKind::symmetric)));
  }
}
