#include "trilie/kaehler.hpp"

#include <stdexcept>

#include "trilie/linalg.hpp"

namespace trilie {

Vec LeviCivita::eval(const Vec& x, const Vec& y, const Vec& z) const {
  const std::size_t n = nabla.dim();
  if (x.size() != n || y.size() != n || z.size() != n)
    throw std::invalid_argument("levi-civita eval: dimension mismatch");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        Scalar coeff = xy * z[k];
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& c = nabla.at(i, j, k, l);
          if (!c.is_zero()) out[l] += coeff * c;
        }
      }
    }
  }
  return out;
}

KaehlerVerdict check_complex_product(const ThreeLieAlgebra& g, const Matrix& j, const Matrix& e) {
  KaehlerVerdict v;
  ComplexClass cc = classify_complex(g, j);
  ProductClass pc = classify_product(g, e);
  const bool anticommute = (j * e == -(e * j));
  v.complex_product = cc.complex_structure && pc.product && anticommute;
  v.perfect_complex_product = v.complex_product && pc.perfect;
  if (v.complex_product) {
    // J swaps the eigenspaces of E.
    if (apply(j, pc.plus) != pc.minus || apply(j, pc.minus) != pc.plus)
      throw std::logic_error("check_complex_product: J does not swap the eigenspaces");
  }
  return v;
}

Matrix complex_product_from_phi(const ThreeLieAlgebra& g, const Matrix& e, const Matrix& phi) {
  ProductClass pc = classify_product(g, e);
  if (!(pc.perfect && pc.paracomplex))
    throw std::invalid_argument("complex_product_from_phi: E must be perfect paracomplex");
  const std::size_t n = g.dim(), k = pc.plus.dim();
  if (phi.rows() != n || phi.cols() != k)
    throw std::invalid_argument("complex_product_from_phi: phi must map the g+ basis to ambient vectors");
  for (std::size_t t = 0; t < k; ++t)
    if (!pc.minus.contains(phi.column(t)))
      throw std::invalid_argument("complex_product_from_phi: phi image must lie in g-");

  // Coordinates of phi in the (plus basis -> minus basis) pair.
  Matrix bminus = Matrix::from_columns(n, pc.minus.basis());
  Matrix phi_coords(k, k);
  for (std::size_t t = 0; t < k; ++t) {
    auto sol = solve_linear(bminus, phi.column(t));
    if (!sol) throw std::logic_error("complex_product_from_phi: coordinate solve failed");
    for (std::size_t l = 0; l < k; ++l) phi_coords.at(l, t) = (*sol)[l];
  }
  Matrix phi_coords_inv;
  try {
    phi_coords_inv = inverse(phi_coords);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("complex_product_from_phi: phi is not an isomorphism onto g-");
  }

  // Ambient operators: split coordinates, apply phi forward / backward.
  std::vector<Vec> cols = pc.plus.basis();
  cols.insert(cols.end(), pc.minus.basis().begin(), pc.minus.basis().end());
  Matrix c = Matrix::from_columns(n, cols);
  Matrix cinv = inverse(c);
  Matrix bplus = Matrix::from_columns(n, pc.plus.basis());
  auto phi_hat = [&](const Vec& v) {  // phi on the g+ component
    Vec coords = cinv.apply(v);
    Vec plus_coords(coords.begin(), coords.begin() + k);
    return bminus.apply(phi_coords.apply(plus_coords));
  };

  // Compatibility identity on g+ basis triples; perfectness keeps every
  // argument of phi inside g+.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t cidx = 0; cidx < k; ++cidx) {
        const Vec& x = pc.plus.basis()[a];
        const Vec& y = pc.plus.basis()[b];
        const Vec& z = pc.plus.basis()[cidx];
        Vec px = phi_hat(x), py = phi_hat(y), pz = phi_hat(z);
        Vec lhs = phi_hat(g.bracket(x, y, z));
        Vec rhs = -g.bracket(px, py, pz) + g.bracket(px, y, z) + g.bracket(x, py, z) +
                  g.bracket(x, y, pz) + phi_hat(g.bracket(px, py, z)) +
                  phi_hat(g.bracket(x, py, pz)) + phi_hat(g.bracket(px, y, pz));
        if (lhs != rhs)
          throw std::invalid_argument(
              "complex_product_from_phi: phi fails the compatibility identity");
      }

  // J(x + a) = -phi^{-1}(a) + phi(x).
  Matrix jmat(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    Vec coords = cinv.apply(unit_vec(n, m));
    Vec plus_coords(coords.begin(), coords.begin() + k);
    Vec minus_coords(coords.begin() + k, coords.end());
    Vec img = bminus.apply(phi_coords.apply(plus_coords)) -
              bplus.apply(phi_coords_inv.apply(minus_coords));
    for (std::size_t l = 0; l < n; ++l) jmat.at(l, m) = img[l];
  }
  KaehlerVerdict v = check_complex_product(g, jmat, e);
  if (!v.perfect_complex_product)
    throw std::logic_error("complex_product_from_phi: constructed J failed verification");
  return jmat;
}

KaehlerVerdict check_para_kaehler(const ThreeLieAlgebra& g, const BilForm& omega, const Matrix& e) {
  KaehlerVerdict v;
  Report sym = check_symplectic(g, omega);
  ProductClass pc = classify_product(g, e);
  const bool compat = (e.transpose() * omega.m * e == -omega.m);
  v.para_kaehler = sym.ok() && pc.paracomplex && compat;
  v.perfect_para_kaehler = v.para_kaehler && pc.perfect;
  if (v.para_kaehler) {
    for (const Vec& x : pc.plus.basis())
      for (const Vec& y : pc.plus.basis())
        if (!omega.eval(x, y).is_zero())
          throw std::logic_error("check_para_kaehler: g+ is not isotropic");
    for (const Vec& x : pc.minus.basis())
      for (const Vec& y : pc.minus.basis())
        if (!omega.eval(x, y).is_zero())
          throw std::logic_error("check_para_kaehler: g- is not isotropic");
    Matrix s = omega.m * e;  // S(x,y) = omega(x, Ey)
    if (!s.is_symmetric() || determinant(s).is_zero())
      throw std::logic_error("check_para_kaehler: induced metric is not pseudo-Riemannian");
    v.metric = BilForm(s, FormKind::symmetric);
    if (s.all_real()) v.metric_signature = signature(s);
  }
  return v;
}

LeviCivita levi_civita(const ThreeLieAlgebra& g, const BilForm& s) {
  if (s.kind != FormKind::symmetric || !s.m.is_symmetric())
    throw std::invalid_argument("levi_civita: metric must be symmetric");
  if (s.dim() != g.dim()) throw std::invalid_argument("levi_civita: dimension mismatch");
  Matrix sinv;
  try {
    sinv = inverse(s.m);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("levi_civita: metric is degenerate");
  }
  const std::size_t n = g.dim();
  const Scalar third(1, 3);
  Tensor4 nabla(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec rhs(n);
        for (std::size_t l = 0; l < n; ++l) {
          Vec el = unit_vec(n, l);
          rhs[l] = s.eval(g.bracket(i, j, k), el) - Scalar(2) * s.eval(g.bracket(i, j, l), unit_vec(n, k)) +
                   s.eval(g.bracket(j, k, l), unit_vec(n, i)) +
                   s.eval(g.bracket(k, i, l), unit_vec(n, j));
        }
        Vec nab = third * sinv.apply(rhs);
        for (std::size_t l = 0; l < n; ++l) {
          nabla.at(i, j, k, l) = nab[l];
          nabla.at(j, i, k, l) = -nab[l];
        }
      }
  return LeviCivita{std::move(nabla)};
}

Report para_kaehler_mixed_formulas(const ThreeLieAlgebra& g, const BilForm& omega, const Matrix& e,
                                   std::size_t max_witnesses) {
  KaehlerVerdict v = check_para_kaehler(g, omega, e);
  if (!v.para_kaehler)
    throw std::invalid_argument("para_kaehler_mixed_formulas: triple is not para-Kaehler");
  ProductClass pc = classify_product(g, e);
  LeviCivita lc = levi_civita(g, *v.metric);
  ThreePreLie p = prelie_from_symplectic(g, omega);
  const std::size_t n = g.dim();
  const Scalar third(1, 3), two_thirds(2, 3);

  ReportBuilder rb("para-Kaehler Levi-Civita formulas", max_witnesses);

  rb.begin("restriction-plus");
  const auto& bp = pc.plus.basis();
  const auto& bm = pc.minus.basis();
  for (std::size_t a = 0; a < bp.size(); ++a)
    for (std::size_t b = 0; b < bp.size(); ++b)
      for (std::size_t c = 0; c < bp.size(); ++c) {
        Vec lhs = lc.eval(bp[a], bp[b], bp[c]);
        Vec rhs = p.product(bp[a], bp[b], bp[c]);
        if (lhs != rhs) rb.violation({a, b, c}, to_string(lhs), to_string(rhs));
      }
  rb.end();
  rb.begin("restriction-minus");
  for (std::size_t a = 0; a < bm.size(); ++a)
    for (std::size_t b = 0; b < bm.size(); ++b)
      for (std::size_t c = 0; c < bm.size(); ++c) {
        Vec lhs = lc.eval(bm[a], bm[b], bm[c]);
        Vec rhs = p.product(bm[a], bm[b], bm[c]);
        if (lhs != rhs) rb.violation({a, b, c}, to_string(lhs), to_string(rhs));
      }
  rb.end();

  if (pc.perfect) {
    rb.begin("mixed-conn1");
    for (std::size_t a = 0; a < bp.size(); ++a)
      for (std::size_t b = 0; b < bp.size(); ++b)
        for (std::size_t c = 0; c < bm.size(); ++c) {
          Vec lhs = lc.eval(bp[a], bp[b], bm[c]);
          Vec rhs = p.product(bp[a], bp[b], bm[c]) +
                    two_thirds * (p.product(bp[b], bm[c], bp[a]) + p.product(bm[c], bp[a], bp[b]));
          if (lhs != rhs) rb.violation({a, b, c}, to_string(lhs), to_string(rhs));
        }
    rb.end();
    rb.begin("mixed-conn2");
    for (std::size_t c = 0; c < bm.size(); ++c)
      for (std::size_t a = 0; a < bp.size(); ++a)
        for (std::size_t b = 0; b < bp.size(); ++b) {
          Vec lhs = lc.eval(bm[c], bp[a], bp[b]);
          Vec rhs = -(third * p.product(bm[c], bp[a], bp[b])) +
                    two_thirds * p.product(bp[b], bm[c], bp[a]);
          if (lhs != rhs) rb.violation({c, a, b}, to_string(lhs), to_string(rhs));
        }
    rb.end();
    rb.begin("mixed-conn3");
    for (std::size_t a = 0; a < bm.size(); ++a)
      for (std::size_t b = 0; b < bm.size(); ++b)
        for (std::size_t c = 0; c < bp.size(); ++c) {
          Vec lhs = lc.eval(bm[a], bm[b], bp[c]);
          Vec rhs = p.product(bm[a], bm[b], bp[c]) +
                    two_thirds * (p.product(bm[b], bp[c], bm[a]) + p.product(bp[c], bm[a], bm[b]));
          if (lhs != rhs) rb.violation({a, b, c}, to_string(lhs), to_string(rhs));
        }
    rb.end();
    rb.begin("mixed-conn4");
    for (std::size_t c = 0; c < bp.size(); ++c)
      for (std::size_t a = 0; a < bm.size(); ++a)
        for (std::size_t b = 0; b < bm.size(); ++b) {
          Vec lhs = lc.eval(bp[c], bm[a], bm[b]);
          Vec rhs = -(third * p.product(bp[c], bm[a], bm[b])) +
                    two_thirds * p.product(bm[b], bp[c], bm[a]);
          if (lhs != rhs) rb.violation({c, a, b}, to_string(lhs), to_string(rhs));
        }
    rb.end();
  } else {
    rb.not_applicable("mixed-conn1", "requires a perfect para-Kaehler structure");
    rb.not_applicable("mixed-conn2", "requires a perfect para-Kaehler structure");
    rb.not_applicable("mixed-conn3", "requires a perfect para-Kaehler structure");
    rb.not_applicable("mixed-conn4", "requires a perfect para-Kaehler structure");
  }

  // On a canonical phase space whose eigenspace splitting is the canonical
  // (h, h*) splitting, the mixed formulas take dual multiplication form.
  bool phase_applicable = false;
  const std::size_t half = n / 2;
  if (n % 2 == 0 && half > 0) {
    PhaseSpaceVerdict psv = check_phase_space(g, omega, half);
    std::vector<Vec> primal, dual;
    for (std::size_t i = 0; i < half; ++i) primal.push_back(unit_vec(n, i));
    for (std::size_t i = 0; i < half; ++i) dual.push_back(unit_vec(n, half + i));
    phase_applicable = psv.is_phase_space && pc.perfect &&
                       pc.plus == Subspace::span(n, primal) &&
                       pc.minus == Subspace::span(n, dual);
  }
  if (phase_applicable) {
    // Factor pre-Lie products on h and h* read from the quadratic product.
    Tensor4 th(half), ts(half);
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = 0; j < half; ++j)
        for (std::size_t k = 0; k < half; ++k) {
          Vec vh = p.product(i, j, k);
          Vec vs = p.product(half + i, half + j, half + k);
          for (std::size_t l = 0; l < half; ++l) {
            if (!vh[half + l].is_zero() || !vs[l].is_zero())
              throw std::logic_error(
                  "para_kaehler_mixed_formulas: factor products do not respect the splitting");
            th.at(i, j, k, l) = vh[l];
            ts.at(i, j, k, l) = vs[half + l];
          }
        }
    ThreePreLie ph = ThreePreLie::from_dense(std::move(th), g.field());
    ThreePreLie ps = ThreePreLie::from_dense(std::move(ts), g.field());

    auto embed = [&](const Vec& v, std::size_t offset) {
      Vec out(n);
      for (std::size_t l = 0; l < half; ++l) out[offset + l] = v[l];
      return out;
    };
    rb.begin("phase-conn11");
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = 0; j < half; ++j)
        for (std::size_t a = 0; a < half; ++a) {
          Vec lhs = lc.eval(unit_vec(n, i), unit_vec(n, j), unit_vec(n, half + a));
          Matrix op = -ph.left(i, j).transpose() + third * ph.right(j, i).transpose() -
                      third * ph.right(i, j).transpose();
          Vec rhs = embed(op.apply(unit_vec(half, a)), half);
          if (lhs != rhs) rb.violation({i, j, half + a}, to_string(lhs), to_string(rhs));
        }
    rb.end();
    rb.begin("phase-conn22");
    for (std::size_t a = 0; a < half; ++a)
      for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = 0; j < half; ++j) {
          Vec lhs = lc.eval(unit_vec(n, half + a), unit_vec(n, i), unit_vec(n, j));
          Matrix op = -(third * ph.right(i, j).transpose()) -
                      two_thirds * ph.right(j, i).transpose();
          Vec rhs = embed(op.apply(unit_vec(half, a)), half);
          if (lhs != rhs) rb.violation({half + a, i, j}, to_string(lhs), to_string(rhs));
        }
    rb.end();
    rb.begin("phase-conn33");
    for (std::size_t a = 0; a < half; ++a)
      for (std::size_t b = 0; b < half; ++b)
        for (std::size_t k = 0; k < half; ++k) {
          Vec lhs = lc.eval(unit_vec(n, half + a), unit_vec(n, half + b), unit_vec(n, k));
          Matrix op = -ps.left(a, b).transpose() + third * ps.right(b, a).transpose() -
                      third * ps.right(a, b).transpose();
          Vec rhs = embed(op.apply(unit_vec(half, k)), 0);
          if (lhs != rhs) rb.violation({half + a, half + b, k}, to_string(lhs), to_string(rhs));
        }
    rb.end();
    rb.begin("phase-conn44");
    for (std::size_t k = 0; k < half; ++k)
      for (std::size_t a = 0; a < half; ++a)
        for (std::size_t b = 0; b < half; ++b) {
          Vec lhs = lc.eval(unit_vec(n, k), unit_vec(n, half + a), unit_vec(n, half + b));
          Matrix op = -(third * ps.right(a, b).transpose()) -
                      two_thirds * ps.right(b, a).transpose();
          Vec rhs = embed(op.apply(unit_vec(half, k)), 0);
          if (lhs != rhs) rb.violation({k, half + a, half + b}, to_string(lhs), to_string(rhs));
        }
    rb.end();
  } else {
    rb.not_applicable("phase-conn11", "not a canonical perfect phase-space splitting");
    rb.not_applicable("phase-conn22", "not a canonical perfect phase-space splitting");
    rb.not_applicable("phase-conn33", "not a canonical perfect phase-space splitting");
    rb.not_applicable("phase-conn44", "not a canonical perfect phase-space splitting");
  }
  return rb.take();
}

KaehlerVerdict check_pseudo_kaehler(const ThreeLieAlgebra& g, const BilForm& omega,
                                    const Matrix& j) {
  KaehlerVerdict v;
  Report sym = check_symplectic(g, omega);
  ComplexClass cc = classify_complex(g, j);
  const bool compat = (j.transpose() * omega.m * j == omega.m);
  v.pseudo_kaehler = sym.ok() && cc.complex_structure && compat;
  if (v.pseudo_kaehler) {
    Matrix s = omega.m * j;  // S(x,y) = omega(x, Jy)
    if (!s.is_symmetric() || determinant(s).is_zero())
      throw std::logic_error("check_pseudo_kaehler: induced metric is not pseudo-Riemannian");
    v.metric = BilForm(s, FormKind::symmetric);
    if (s.all_real()) {
      v.metric_signature = signature(s);
      v.kaehler = is_positive_definite(s);
    }
  }
  return v;
}

ComplexParaKaehler complexify_pseudo_kaehler(const ThreeLieAlgebra& g, const BilForm& omega,
                                             const Matrix& j) {
  if (!check_pseudo_kaehler(g, omega, j).pseudo_kaehler)
    throw std::invalid_argument("complexify_pseudo_kaehler: triple is not pseudo-Kaehler");
  ComplexParaKaehler out{complexify(g), BilForm(omega.m, omega.kind),
                         (-imaginary_unit()) * j};
  return out;
}

RealPseudoKaehler realify_para_kaehler(const ThreeLieAlgebra& gc, const BilForm& omega,
                                       const Matrix& e) {
  if (gc.field() != Field::gaussian_rational)
    throw std::invalid_argument("realify_para_kaehler: input must be a gaussian-field algebra");
  if (!check_para_kaehler(gc, omega, e).para_kaehler)
    throw std::invalid_argument("realify_para_kaehler: triple is not para-Kaehler");
  const std::size_t n = gc.dim(), d = 2 * n;
  const Scalar i_unit = imaginary_unit();

  // Real basis (e_1..e_n, i e_1..i e_n); i-powers multiply out of brackets.
  Tensor4 c(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t cc = 0; cc < d; ++cc) {
        std::size_t p = (a >= n) + (b >= n) + (cc >= n);
        Vec w = gc.bracket(a % n, b % n, cc % n);
        Scalar phase(1);
        for (std::size_t t = 0; t < p; ++t) phase *= i_unit;
        for (std::size_t l = 0; l < n; ++l) {
          Scalar z = phase * w[l];
          c.at(a, b, cc, l) = Scalar(z.re);
          c.at(a, b, cc, n + l) = Scalar(z.im);
        }
      }
  std::vector<std::string> basis = gc.basis();
  for (std::size_t t = 0; t < n; ++t) basis.push_back("i" + gc.basis()[t]);
  ThreeLieAlgebra gr = ThreeLieAlgebra::from_dense(std::move(c), Field::rational, std::move(basis));

  Matrix omega_r(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      std::size_t p = (a >= n) + (b >= n);
      Scalar phase(1);
      for (std::size_t t = 0; t < p; ++t) phase *= i_unit;
      omega_r.at(a, b) = Scalar((phase * omega.m.at(a % n, b % n)).re);
    }

  // J = iE, realified: iE = A + iB acts as [[A, -B], [B, A]].
  Matrix ie = i_unit * e;
  Matrix jr(d, d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      jr.at(a, b) = Scalar(ie.at(a, b).re);
      jr.at(a, n + b) = Scalar(-ie.at(a, b).im);
      jr.at(n + a, b) = Scalar(ie.at(a, b).im);
      jr.at(n + a, n + b) = Scalar(ie.at(a, b).re);
    }
  return RealPseudoKaehler{std::move(gr), BilForm(std::move(omega_r), FormKind::skew),
                           std::move(jr)};
}

MetricPreLieResult metric_prelie_structures(const ThreePreLie& a, const BilForm& b) {
  if (b.kind != FormKind::symmetric || b.dim() != a.dim())
    throw std::invalid_argument("metric_prelie_structures: B must be a symmetric form on A");
  if (!b.nondegenerate())
    throw std::invalid_argument("metric_prelie_structures: B is degenerate");
  if (!check_invariant_form(a, b))
    throw std::invalid_argument("metric_prelie_structures: B is not invariant");
  PhaseSpace ps = phase_space(a);
  const std::size_t n = a.dim(), d = 2 * n;

  Matrix e(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    e.at(i, i) = Scalar(1);
    e.at(n + i, n + i) = Scalar(-1);
  }
  // J(x + alpha) = -B-sharp^{-1}(alpha) + B-sharp(x), B-sharp = B in the
  // (basis, dual basis) coordinates.
  Matrix binv = inverse(b.m);
  Matrix j(d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      j.at(n + i, k) = b.m.at(i, k);
      j.at(i, n + k) = -binv.at(i, k);
    }

  MetricPreLieResult out;
  out.omega = ps.omega;
  out.algebra = std::move(ps.algebra);
  out.j = j;
  out.e = e;
  out.complex_product_verdict = check_complex_product(out.algebra, j, e);
  out.para_kaehler_verdict = check_para_kaehler(out.algebra, out.omega, e);
  out.pseudo_kaehler_verdict = check_pseudo_kaehler(out.algebra, out.omega, -j);
  out.kaehler = out.pseudo_kaehler_verdict.kaehler;
  return out;
}

AffComplexProduct aff_complex_product(const ThreePreLie& a) {
  if (!check_prelie_axioms(a).ok())
    throw std::invalid_argument("aff_complex_product: input is not a 3-pre-Lie algebra");
  const std::size_t n = a.dim(), d = 2 * n;
  ThreeLieAlgebra aff = semidirect_product(sub_adjacent(a), left_mult(a));
  Matrix j(d, d), e(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    j.at(n + i, i) = Scalar(1);
    j.at(i, n + i) = Scalar(-1);
    e.at(i, i) = Scalar(1);
    e.at(n + i, n + i) = Scalar(-1);
  }
  AffComplexProduct out{std::move(aff), std::move(j), std::move(e), {}};
  out.verdict = check_complex_product(out.algebra, out.j, out.e);
  return out;
}

}  // namespace trilie
