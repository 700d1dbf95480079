#include "trilie/structures.hpp"

#include <stdexcept>

#include "trilie/linalg.hpp"

namespace trilie {

namespace {

void require_shape(const ThreeLieAlgebra& g, const Matrix& m, const char* who) {
  if (!m.is_square() || m.rows() != g.dim())
    throw std::invalid_argument(std::string(who) + ": map dimension mismatch");
  if (g.field() == Field::rational && !m.all_real())
    throw std::invalid_argument(std::string(who) + ": non-rational entries on a rational algebra");
}

// Containment facts of the bracket over the decomposition (plus, minus).
DecompositionFacts decomposition_facts(const ThreeLieAlgebra& g, const Subspace& plus,
                                       const Subspace& minus) {
  DecompositionFacts f;
  f.plus_subalgebra = is_subalgebra(g, plus);
  f.minus_subalgebra = is_subalgebra(g, minus);
  f.plus_abelian = is_abelian_on(g, plus);
  f.minus_abelian = is_abelian_on(g, minus);
  f.mixed_ppm_zero = f.mixed_ppm_in_plus = f.mixed_ppm_in_minus = true;
  f.mixed_mmp_zero = f.mixed_mmp_in_plus = f.mixed_mmp_in_minus = true;
  const auto& bp = plus.basis();
  const auto& bm = minus.basis();
  for (std::size_t i = 0; i < bp.size(); ++i)
    for (std::size_t j = i + 1; j < bp.size(); ++j)
      for (const Vec& w : bm) {
        Vec v = g.bracket(bp[i], bp[j], w);
        if (!is_zero(v)) f.mixed_ppm_zero = false;
        if (!plus.contains(v)) f.mixed_ppm_in_plus = false;
        if (!minus.contains(v)) f.mixed_ppm_in_minus = false;
      }
  for (std::size_t i = 0; i < bm.size(); ++i)
    for (std::size_t j = i + 1; j < bm.size(); ++j)
      for (const Vec& w : bp) {
        Vec v = g.bracket(bm[i], bm[j], w);
        if (!is_zero(v)) f.mixed_mmp_zero = false;
        if (!minus.contains(v)) f.mixed_mmp_in_minus = false;
        if (!plus.contains(v)) f.mixed_mmp_in_plus = false;
      }
  return f;
}

void self_check(bool condition, const char* what) {
  if (!condition)
    throw std::logic_error(std::string("structure classifier self-check failed: ") + what);
}

}  // namespace

ProductClass classify_product(const ThreeLieAlgebra& g, const Matrix& e) {
  require_shape(g, e, "classify_product");
  const std::size_t n = g.dim();
  ProductClass pc;
  Matrix id = Matrix::identity(n);
  pc.square_is_identity = (e * e == id);
  pc.is_plus_minus_identity = (e == id || e == -id);
  pc.almost = pc.square_is_identity && !pc.is_plus_minus_identity;
  pc.plus = Subspace::kernel_of(e - id);
  pc.minus = Subspace::kernel_of(e + id);
  if (!pc.almost) return pc;

  // All identities except the strict one are alternating in (x,y,z), so
  // canonical basis triples are exhaustive for them.
  bool product = true, abelian = true, strong = true, perfect = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        Vec ex = e.column(i), ey = e.column(j), ez = e.column(k);
        Vec br = g.bracket(i, j, k);
        Vec ebr = e.apply(br);
        Vec eee = g.bracket(ex, ey, ez);
        Vec exy = g.bracket(ex, ey, z), eyz = g.bracket(x, ey, ez), exz = g.bracket(ex, y, ez);
        Vec ex_ = g.bracket(ex, y, z), ey_ = g.bracket(x, ey, z), ez_ = g.bracket(x, y, ez);
        if (ebr != eee + ex_ + ey_ + ez_ - e.apply(exy) - e.apply(eyz) - e.apply(exz))
          product = false;
        if (br != -(eyz + exz + exy)) abelian = false;
        if (br != e.apply(ex_) + e.apply(ey_) + e.apply(ez_)) strong = false;
        if (ebr != eee) perfect = false;
      }
  // The strict identity E[x,y,z] = [Ex,y,z] has E in one fixed slot, so all
  // ordered tuples (repeats included) carry constraints.
  bool strict = true;
  for (std::size_t i = 0; i < n && strict; ++i)
    for (std::size_t j = 0; j < n && strict; ++j)
      for (std::size_t k = 0; k < n && strict; ++k)
        if (e.apply(g.bracket(i, j, k)) !=
            g.bracket(e.column(i), unit_vec(n, j), unit_vec(n, k)))
          strict = false;
  pc.product = product;
  pc.strict = strict;
  pc.abelian = abelian;
  pc.strong_abelian = strong;
  pc.perfect = perfect;
  pc.paracomplex = product && pc.plus.dim() == pc.minus.dim();
  pc.facts = decomposition_facts(g, pc.plus, pc.minus);

  if (pc.strong_abelian) {
    pc.induced_prelie = compatible_prelie_from_O(g, adjoint_rep(g), e);
    self_check(check_prelie_axioms(*pc.induced_prelie).ok(), "induced pre-Lie axioms");
  }

  // Decomposition-table consequences of each flag.
  if (pc.product) self_check(pc.facts.plus_subalgebra && pc.facts.minus_subalgebra, "product table");
  if (pc.strict)
    self_check(pc.product && pc.perfect && pc.facts.mixed_ppm_zero && pc.facts.mixed_mmp_zero,
               "strict table");
  if (pc.abelian) self_check(pc.product && pc.facts.plus_abelian && pc.facts.minus_abelian,
                             "abelian table");
  if (pc.strong_abelian)
    self_check(pc.abelian && pc.facts.mixed_ppm_in_plus && pc.facts.mixed_mmp_in_minus,
               "strong abelian table");
  if (pc.perfect)
    self_check(pc.product && pc.facts.mixed_ppm_in_minus && pc.facts.mixed_mmp_in_plus,
               "perfect table");
  return pc;
}

Matrix product_from_decomposition(const ThreeLieAlgebra& g, const Subspace& w_plus,
                                  const Subspace& w_minus) {
  if (w_plus.ambient() != g.dim() || w_minus.ambient() != g.dim())
    throw std::invalid_argument("product_from_decomposition: ambient dimension mismatch");
  if (!is_direct_sum(w_plus, w_minus))
    throw std::invalid_argument("product_from_decomposition: spans are not complementary");
  if (!is_subalgebra(g, w_plus))
    throw std::invalid_argument("product_from_decomposition: W+ is not a subalgebra");
  if (!is_subalgebra(g, w_minus))
    throw std::invalid_argument("product_from_decomposition: W- is not a subalgebra");
  const std::size_t n = g.dim(), k = w_plus.dim();
  std::vector<Vec> cols = w_plus.basis();
  cols.insert(cols.end(), w_minus.basis().begin(), w_minus.basis().end());
  Matrix c = Matrix::from_columns(n, cols);
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d.at(i, i) = i < k ? Scalar(1) : Scalar(-1);
  return c * d * inverse(c);
}

Complexified complexify(const ThreeLieAlgebra& g) {
  if (g.field() != Field::rational)
    throw std::invalid_argument("complexify: algebra is already over the gaussian rationals");
  ThreeLieAlgebra gc =
      ThreeLieAlgebra::from_dense(g.constants(), Field::gaussian_rational, g.basis());
  return Complexified{std::move(gc), g};
}

ComplexClass classify_complex(const ThreeLieAlgebra& g, const Matrix& j) {
  require_shape(g, j, "classify_complex");
  if (g.dim() % 2 != 0)
    throw std::invalid_argument("classify_complex: odd dimension admits no almost complex structure");
  const std::size_t n = g.dim();
  ComplexClass cc;
  Matrix id = Matrix::identity(n);
  cc.square_is_minus_identity = (j * j == -id);
  cc.almost = cc.square_is_minus_identity;

  // Eigenspaces of J_C inside the complexification.
  const ThreeLieAlgebra gc =
      g.field() == Field::rational ? complexify(g).algebra : g;
  Matrix i_id = imaginary_unit() * id;
  cc.eig_i = Subspace::kernel_of(j - i_id);
  cc.eig_minus_i = Subspace::kernel_of(j + i_id);
  if (!cc.almost) return cc;

  // As with products, only the strict identity needs all ordered tuples.
  bool cx = true, abelian = true, strong = true, perfect = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Vec x = unit_vec(n, a), y = unit_vec(n, b), z = unit_vec(n, c);
        Vec jx = j.column(a), jy = j.column(b), jz = j.column(c);
        Vec br = g.bracket(a, b, c);
        Vec jbr = j.apply(br);
        Vec jjj = g.bracket(jx, jy, jz);
        Vec jx_ = g.bracket(jx, y, z), jy_ = g.bracket(x, jy, z), jz_ = g.bracket(x, y, jz);
        Vec jxy = g.bracket(jx, jy, z), jyz = g.bracket(x, jy, jz), jxz = g.bracket(jx, y, jz);
        if (jbr != -jjj + jx_ + jy_ + jz_ + j.apply(jxy) + j.apply(jyz) + j.apply(jxz)) cx = false;
        if (br != jyz + jxz + jxy) abelian = false;
        if (br != -(j.apply(jx_) + j.apply(jy_) + j.apply(jz_))) strong = false;
        if (jbr != -jjj) perfect = false;
      }
  bool strict = true;
  for (std::size_t a = 0; a < n && strict; ++a)
    for (std::size_t b = 0; b < n && strict; ++b)
      for (std::size_t c = 0; c < n && strict; ++c)
        if (j.apply(g.bracket(a, b, c)) !=
            g.bracket(j.column(a), unit_vec(n, b), unit_vec(n, c)))
          strict = false;
  cc.complex_structure = cx;
  cc.strict = strict;
  cc.abelian = abelian;
  cc.strong_abelian = strong;
  cc.perfect = perfect;
  cc.facts = decomposition_facts(gc, cc.eig_i, cc.eig_minus_i);

  if (cc.strong_abelian) {
    cc.induced_prelie = compatible_prelie_from_O(g, adjoint_rep(g), -j);
    self_check(check_prelie_axioms(*cc.induced_prelie).ok(), "induced pre-Lie axioms");
  }

  if (cc.complex_structure)
    self_check(cc.facts.plus_subalgebra && cc.facts.minus_subalgebra, "complex table");
  if (cc.strict)
    self_check(cc.complex_structure && cc.perfect && cc.facts.mixed_ppm_zero &&
                   cc.facts.mixed_mmp_zero,
               "strict complex table");
  if (cc.abelian)
    self_check(cc.complex_structure && cc.facts.plus_abelian && cc.facts.minus_abelian,
               "abelian complex table");
  if (cc.strong_abelian)
    self_check(cc.abelian && cc.facts.mixed_ppm_in_plus && cc.facts.mixed_mmp_in_minus,
               "strong abelian complex table");
  if (cc.perfect)
    self_check(cc.complex_structure && cc.facts.mixed_ppm_in_minus && cc.facts.mixed_mmp_in_plus,
               "perfect complex table");
  return cc;
}

ThreeLieAlgebra j_bracket(const ThreeLieAlgebra& g, const Matrix& j) {
  ComplexClass cc = classify_complex(g, j);
  if (!cc.complex_structure)
    throw std::invalid_argument("j_bracket: J is not a complex structure");
  const std::size_t n = g.dim();
  const Scalar quarter(1, 4);
  Tensor4 t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vec x = unit_vec(n, a), y = unit_vec(n, b), z = unit_vec(n, c);
        Vec jx = j.column(a), jy = j.column(b), jz = j.column(c);
        Vec v = quarter * (g.bracket(a, b, c) - g.bracket(x, jy, jz) - g.bracket(jx, y, jz) -
                           g.bracket(jx, jy, z));
        for (std::size_t l = 0; l < n; ++l) t.at(a, b, c, l) = v[l];
      }
  ThreeLieAlgebra gj = ThreeLieAlgebra::from_dense(std::move(t), g.field(), g.basis());

  // phi(x) = (x - iJx)/2 must intertwine the deformed bracket with the
  // bracket of the +i eigenspace inside the complexification.
  const ThreeLieAlgebra gc =
      g.field() == Field::rational ? complexify(g).algebra : g;
  const Scalar half(1, 2);
  auto phi = [&](const Vec& v) { return half * (v - imaginary_unit() * j.apply(v)); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Vec lhs = gc.bracket(phi(unit_vec(n, a)), phi(unit_vec(n, b)), phi(unit_vec(n, c)));
        Vec rhs = phi(gj.bracket(a, b, c));
        if (lhs != rhs) throw std::logic_error("j_bracket: eigenspace intertwining failed");
      }
  return gj;
}

Matrix complex_from_subalgebra(const Complexified& gc, const Subspace& q) {
  const std::size_t n = gc.algebra.dim();
  if (q.ambient() != n) throw std::invalid_argument("complex_from_subalgebra: ambient mismatch");
  std::vector<Vec> conj_basis;
  for (const Vec& v : q.basis()) conj_basis.push_back(conj(v));
  Subspace sigma_q = Subspace::span(n, conj_basis);
  if (!is_direct_sum(q, sigma_q))
    throw std::invalid_argument("complex_from_subalgebra: q and sigma(q) do not split the space");
  if (!is_subalgebra(gc.algebra, q))
    throw std::invalid_argument("complex_from_subalgebra: q is not a subalgebra");

  std::vector<Vec> cols = q.basis();
  cols.insert(cols.end(), sigma_q.basis().begin(), sigma_q.basis().end());
  Matrix c = Matrix::from_columns(n, cols);
  Matrix cinv = inverse(c);
  const Scalar i = imaginary_unit();
  Matrix jc(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    Vec coords = cinv.apply(unit_vec(n, m));
    Vec img(n);
    for (std::size_t t = 0; t < q.dim(); ++t) img += (i * coords[t]) * cols[t];
    for (std::size_t t = q.dim(); t < n; ++t) img -= (i * coords[t]) * cols[t];
    for (std::size_t l = 0; l < n; ++l) jc.at(l, m) = img[l];
  }
  if (!jc.all_real())
    throw std::logic_error("complex_from_subalgebra: restriction to the real form is not real");
  return jc;
}

Matrix product_complex_duality(const ThreeLieAlgebra& g, const Matrix& m, DualityMode mode) {
  if (g.field() != Field::gaussian_rational)
    throw std::invalid_argument("product_complex_duality: requires a gaussian-field algebra");
  require_shape(g, m, "product_complex_duality");
  const Scalar i = imaginary_unit();
  return mode == DualityMode::product_to_complex ? i * m : (-i) * m;
}

}  // namespace trilie
