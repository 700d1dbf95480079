#include <doctest.h>

#include "support/fixtures.hpp"

using namespace trilie;
using namespace trilie::testing;

TEST_CASE("complex product structures {J_i, E_i} on A4") {
  ThreeLieAlgebra g = a4();
  for (int i = 1; i <= 6; ++i) {
    KaehlerVerdict v = check_complex_product(g, a4_complex_j(i), a4_product_e(i));
    CHECK(v.complex_product);
    CHECK(v.perfect_complex_product);
  }
  // {J1, E2} do not anticommute: the verdict is decided by the matrix check.
  Matrix j1 = a4_complex_j(1), e2 = a4_product_e(2);
  bool anti = (j1 * e2 == -(e2 * j1));
  CHECK(check_complex_product(g, j1, e2).complex_product == anti);

  // Block pair on an even abelian algebra.
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(4);
  CHECK(check_complex_product(ab, a4_complex_j(2), a4_product_e(2)).complex_product);
}

TEST_CASE("complex product structure from phi") {
  ThreeLieAlgebra g = a4();
  Matrix e1 = a4_product_e(1);

  // phi: e1 -> e3, e2 -> e4 recovers J1.
  Matrix phi(4, 2);
  phi.at(2, 0) = Scalar(1);
  phi.at(3, 1) = Scalar(1);
  CHECK(complex_product_from_phi(g, e1, phi) == a4_complex_j(1));

  // phi: e1 -> e3, e2 -> -e4 is accepted or rejected strictly by the
  // compatibility identity.
  Matrix phi2(4, 2);
  phi2.at(2, 0) = Scalar(1);
  phi2.at(3, 1) = Scalar(-1);
  bool ok = true;
  Matrix j2(4, 4);
  try {
    j2 = complex_product_from_phi(g, e1, phi2);
  } catch (const std::invalid_argument&) {
    ok = false;
  }
  if (ok) CHECK(check_complex_product(g, j2, e1).complex_product);

  // Any isomorphism works on an abelian algebra.
  Rng rng(103);
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(4);
  Matrix phi3(4, 2);
  Matrix r = random_invertible(rng, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) phi3.at(2 + i, j) = r.at(i, j);
  Matrix j3 = complex_product_from_phi(ab, e1, phi3);
  CHECK(check_complex_product(ab, j3, e1).perfect_complex_product);

  CHECK_THROWS_AS(complex_product_from_phi(g, diag({1, 1, 1, -1}), phi), std::invalid_argument);
}

TEST_CASE("para-Kaehler structures {omega_i, E_i} on A4") {
  ThreeLieAlgebra g = a4();
  for (int i = 1; i <= 6; ++i) {
    KaehlerVerdict v = check_para_kaehler(g, a4_omega(i), a4_product_e(i));
    CHECK(v.para_kaehler);
    CHECK(v.perfect_para_kaehler);
    REQUIRE(v.metric.has_value());
    CHECK(v.metric->m.is_symmetric());
    CHECK(v.metric->nondegenerate());
    // Neutral signature: both eigenspaces are isotropic for S as well.
    CHECK(v.metric_signature == std::pair<int, int>(2, 2));
  }
}

TEST_CASE("phase spaces carry the standard para-Kaehler structure") {
  ThreePreLie a = derived_prelie3();
  PhaseSpace ps = phase_space(a);
  Matrix e(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    e.at(i, i) = Scalar(1);
    e.at(3 + i, 3 + i) = Scalar(-1);
  }
  KaehlerVerdict v = check_para_kaehler(ps.algebra, ps.omega, e);
  CHECK(v.para_kaehler);
  CHECK(v.perfect_para_kaehler);

  // Abelian dim-2 case with the standard form and E = diag(1,-1).
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(2);
  CHECK(check_para_kaehler(ab, canonical_phase_form(1), diag({1, -1})).para_kaehler);
}

TEST_CASE("Levi-Civita product of the Euclidean metric on A4") {
  ThreeLieAlgebra g = a4();
  BilForm s(Matrix::identity(4), FormKind::symmetric);
  LeviCivita lc = levi_civita(g, s);

  const std::size_t n = 4;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        // Skewness and the cyclic identity.
        CHECK(lc.eval(ei, ej, ek) == -lc.eval(ej, ei, ek));
        CHECK(lc.eval(ei, ej, ek) + lc.eval(ej, ek, ei) + lc.eval(ek, ei, ej) ==
              g.bracket(i, j, k));
        // The defining relation itself, as the oracle.
        for (std::size_t l = 0; l < n; ++l) {
          Vec el = unit_vec(n, l);
          CHECK(Scalar(3) * s.eval(lc.eval(ei, ej, ek), el) ==
                s.eval(g.bracket(i, j, k), el) - Scalar(2) * s.eval(g.bracket(i, j, l), ek) +
                    s.eval(g.bracket(j, k, l), ei) + s.eval(g.bracket(k, i, l), ej));
        }
      }

  // Abelian algebras have the zero product for any metric.
  Rng rng(107);
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(3);
  LeviCivita lz =
      levi_civita(ab, BilForm(random_symmetric_nondegenerate(rng, 3), FormKind::symmetric));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(is_zero(lz.nabla.value(i, j, k)));

  CHECK_THROWS_AS(levi_civita(g, BilForm(Matrix::zero(4, 4), FormKind::symmetric)),
                  std::invalid_argument);
}

TEST_CASE("Levi-Civita product is E-compatible on para-Kaehler algebras") {
  ThreeLieAlgebra g = a4();
  for (int i = 1; i <= 6; ++i) {
    Matrix e = a4_product_e(i);
    KaehlerVerdict v = check_para_kaehler(g, a4_omega(i), e);
    REQUIRE(v.metric.has_value());
    LeviCivita lc = levi_civita(g, *v.metric);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t c = 0; c < 4; ++c)
          CHECK(e.apply(lc.eval(unit_vec(4, a), unit_vec(4, b), unit_vec(4, c))) ==
                lc.eval(e.column(a), e.column(b), e.column(c)));
  }
}

TEST_CASE("Levi-Civita skewness and cyclic identity for random metrics on A4") {
  Rng rng(109);
  ThreeLieAlgebra g = a4();
  for (int t = 0; t < 200; ++t) {
    BilForm s(random_symmetric_nondegenerate(rng, 4), FormKind::symmetric);
    LeviCivita lc = levi_civita(g, s);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
          Vec ei = unit_vec(4, i), ej = unit_vec(4, j), ek = unit_vec(4, k);
          CHECK(lc.nabla.value(i, j, k) == Vec(-lc.eval(ej, ei, ek)));
          CHECK(lc.eval(ei, ej, ek) + lc.eval(ej, ek, ei) + lc.eval(ek, ei, ej) ==
                g.bracket(i, j, k));
        }
  }
}

TEST_CASE("mixed connection formulas on the A4 para-Kaehler structures") {
  ThreeLieAlgebra g = a4();
  Report r = para_kaehler_mixed_formulas(g, a4_omega(1), a4_product_e(1));
  CHECK(r.ok());
  CHECK(r.find("mixed-conn1")->status == CheckStatus::passed);
  // omega1 equals the canonical pairing form and E1 splits A4 into the
  // canonical halves, so A4 is itself a perfect phase space (of the abelian
  // 2-dim algebra) and the dual-multiplication forms apply.
  CHECK(r.find("phase-conn11")->status == CheckStatus::passed);

  // {omega6, E1}: omega6 is not the canonical pairing form, so the
  // phase-space forms are skipped while the mixed ones still run.
  KaehlerVerdict v61 = check_para_kaehler(g, a4_omega(6), a4_product_e(1));
  if (v61.para_kaehler) {
    Report r61 = para_kaehler_mixed_formulas(g, a4_omega(6), a4_product_e(1));
    CHECK(r61.find("phase-conn11")->status == CheckStatus::not_applicable);
  }
}

TEST_CASE("mixed connection formulas on phase spaces") {
  ThreePreLie a = derived_prelie3();
  PhaseSpace ps = phase_space(a);
  Matrix e(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    e.at(i, i) = Scalar(1);
    e.at(3 + i, 3 + i) = Scalar(-1);
  }
  Report r = para_kaehler_mixed_formulas(ps.algebra, ps.omega, e);
  CHECK(r.ok());
  for (const char* item : {"restriction-plus", "restriction-minus", "mixed-conn1", "mixed-conn2",
                           "mixed-conn3", "mixed-conn4", "phase-conn11", "phase-conn22",
                           "phase-conn33", "phase-conn44"})
    CHECK(r.find(item)->status == CheckStatus::passed);

  // Abelian pre-Lie: everything vanishes but the report still passes.
  PhaseSpace ps0 = phase_space(ThreePreLie::abelian(2));
  Matrix e0(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    e0.at(i, i) = Scalar(1);
    e0.at(2 + i, 2 + i) = Scalar(-1);
  }
  CHECK(para_kaehler_mixed_formulas(ps0.algebra, ps0.omega, e0).ok());

  CHECK_THROWS_AS(para_kaehler_mixed_formulas(a4(), a4_omega(1), a4_product_e(2)),
                  std::invalid_argument);
}

TEST_CASE("pseudo-Kaehler structures {omega_i, J_i} on A4") {
  ThreeLieAlgebra g = a4();
  for (int i = 1; i <= 6; ++i) {
    KaehlerVerdict v = check_pseudo_kaehler(g, a4_omega(i), a4_complex_j(i));
    CHECK(v.pseudo_kaehler);
    REQUIRE(v.metric.has_value());
    CHECK(v.metric->m.is_symmetric());
  }
  // {omega1, J2} decided by the compatibility identity.
  Matrix j2 = a4_complex_j(2);
  bool compat = (j2.transpose() * a4_omega(1).m * j2 == a4_omega(1).m);
  CHECK(check_pseudo_kaehler(g, a4_omega(1), j2).pseudo_kaehler ==
        (compat && check_symplectic(g, a4_omega(1)).ok()));
}

TEST_CASE("abelian block pair is Kaehler") {
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(4);
  // omega = [[0,-I],[I,0]] with J = [[0,I],[-I,0]]: S = omega * J = Id.
  BilForm omega = canonical_phase_form(2);
  Matrix j(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    j.at(2 + i, i) = Scalar(-1);
    j.at(i, 2 + i) = Scalar(1);
  }
  KaehlerVerdict v = check_pseudo_kaehler(ab, omega, j);
  CHECK(v.pseudo_kaehler);
  CHECK(v.kaehler);
  CHECK(v.metric_signature == std::pair<int, int>(4, 0));
  // The opposite orientation is pseudo-Kaehler with the negated metric.
  KaehlerVerdict w = check_pseudo_kaehler(ab, omega, -j);
  CHECK(w.pseudo_kaehler);
  CHECK_FALSE(w.kaehler);
  CHECK(w.metric_signature == std::pair<int, int>(0, 4));
}

TEST_CASE("pseudo-Kaehler complexification round trip") {
  ThreeLieAlgebra g = a4();
  ComplexParaKaehler cpk = complexify_pseudo_kaehler(g, a4_omega(1), a4_complex_j(1));
  CHECK(cpk.g.algebra.field() == Field::gaussian_rational);

  KaehlerVerdict v = check_para_kaehler(cpk.g.algebra, cpk.omega, cpk.e);
  CHECK(v.para_kaehler);

  // Eigenspaces of E = -iJ_C are the J-eigenspaces and are omega-isotropic.
  ProductClass pc = classify_product(cpk.g.algebra, cpk.e);
  ComplexClass cc = classify_complex(g, a4_complex_j(1));
  CHECK(pc.plus == cc.eig_i);
  CHECK(pc.minus == cc.eig_minus_i);
  for (const Vec& x : pc.plus.basis())
    for (const Vec& y : pc.plus.basis()) CHECK(cpk.omega.eval(x, y).is_zero());

  // Realify back to a dim-8 real pseudo-Kaehler triple.
  RealPseudoKaehler rpk = realify_para_kaehler(cpk.g.algebra, cpk.omega, cpk.e);
  CHECK(rpk.g.dim() == 8);
  CHECK(check_fundamental_identity(rpk.g).ok());
  KaehlerVerdict rv = check_pseudo_kaehler(rpk.g, rpk.omega, rpk.j);
  CHECK(rv.pseudo_kaehler);

  // {omega1, J3} violates the compatibility identity, so the construction
  // refuses it.
  CHECK_FALSE(check_pseudo_kaehler(g, a4_omega(1), a4_complex_j(3)).pseudo_kaehler);
  CHECK_THROWS_AS(complexify_pseudo_kaehler(g, a4_omega(1), a4_complex_j(3)),
                  std::invalid_argument);
}

TEST_CASE("abelian complexification round trip") {
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(2);
  Matrix j(2, 2);
  j.at(1, 0) = Scalar(1);
  j.at(0, 1) = Scalar(-1);
  Matrix w(2, 2);
  w.at(0, 1) = Scalar(-1);
  w.at(1, 0) = Scalar(1);
  ComplexParaKaehler cpk = complexify_pseudo_kaehler(ab, BilForm(w, FormKind::skew), j);
  CHECK(check_para_kaehler(cpk.g.algebra, cpk.omega, cpk.e).para_kaehler);
  RealPseudoKaehler rpk = realify_para_kaehler(cpk.g.algebra, cpk.omega, cpk.e);
  CHECK(is_abelian_on(rpk.g, Subspace::span(4, {unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2),
                                                unit_vec(4, 3)})));
  CHECK(check_pseudo_kaehler(rpk.g, rpk.omega, rpk.j).pseudo_kaehler);
}

TEST_CASE("metric pre-Lie structures: the Kaehler construction") {
  ThreePreLie ab = ThreePreLie::abelian(3);
  BilForm b(Matrix::identity(3), FormKind::symmetric);
  MetricPreLieResult r = metric_prelie_structures(ab, b);
  CHECK(r.complex_product_verdict.perfect_complex_product);
  CHECK(r.para_kaehler_verdict.perfect_para_kaehler);
  CHECK(r.pseudo_kaehler_verdict.pseudo_kaehler);
  CHECK(r.kaehler);

  // S(x+a, x+a) is the sum of the squared coordinates.
  REQUIRE(r.pseudo_kaehler_verdict.metric.has_value());
  const BilForm& s = *r.pseudo_kaehler_verdict.metric;
  Rng rng(113);
  for (int t = 0; t < 20; ++t) {
    Vec v = random_vec(rng, 6);
    Scalar expect(0);
    for (const Scalar& c : v) expect += c * c;
    CHECK(s.eval(v, v) == expect);
  }
  CHECK(r.pseudo_kaehler_verdict.metric_signature == std::pair<int, int>(6, 0));

  // The para-Kaehler verdict agrees with checking the phase space directly.
  PhaseSpace ps = phase_space(ab);
  KaehlerVerdict direct = check_para_kaehler(ps.algebra, ps.omega, r.e);
  CHECK(direct.para_kaehler == r.para_kaehler_verdict.para_kaehler);

  // Non-invariant B errors.
  ThreePreLie d3 = derived_prelie3();
  CHECK_THROWS_AS(metric_prelie_structures(d3, b), std::invalid_argument);
}

TEST_CASE("derived 3-dim pre-Lie admits no nondegenerate invariant form") {
  // The invariance system only has degenerate solutions, so the metric
  // construction cannot apply to this algebra.
  ThreePreLie a = derived_prelie3();
  for (const Matrix& m : invariant_form_space(a)) CHECK(determinant(m).is_zero());
}

TEST_CASE("aff(A) carries a perfect complex product structure") {
  AffComplexProduct aff = aff_complex_product(derived_prelie3());
  CHECK(aff.algebra.dim() == 6);
  CHECK(check_fundamental_identity(aff.algebra).ok());
  CHECK(aff.verdict.perfect_complex_product);

  // E's eigenspaces are the two factors.
  ProductClass pc = classify_product(aff.algebra, aff.e);
  CHECK(pc.plus == Subspace::span(6, {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)}));
  CHECK(pc.minus == Subspace::span(6, {unit_vec(6, 3), unit_vec(6, 4), unit_vec(6, 5)}));

  AffComplexProduct aff0 = aff_complex_product(ThreePreLie::abelian(2));
  CHECK(aff0.algebra.dim() == 4);
  CHECK(aff0.verdict.perfect_complex_product);
}
