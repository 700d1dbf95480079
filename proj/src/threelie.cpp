#include "trilie/threelie.hpp"

#include <stdexcept>

namespace trilie {

std::vector<std::string> default_basis_names(std::size_t dim, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 1; i <= dim; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

namespace {

void check_basis(std::vector<std::string>& basis, std::size_t dim) {
  if (basis.empty()) basis = default_basis_names(dim);
  if (basis.size() != dim) throw std::invalid_argument("basis name count does not match dimension");
}

// Writes value into all 6 permutations of (i,j,k) with alternating signs.
void fill_alternating(Tensor4& c, std::size_t i, std::size_t j, std::size_t k, const Vec& value) {
  const std::size_t n = c.dim();
  const std::size_t idx[6][3] = {{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}};
  for (int p = 0; p < 6; ++p) {
    const bool odd = p >= 3;
    for (std::size_t l = 0; l < n; ++l)
      c.at(idx[p][0], idx[p][1], idx[p][2], l) = odd ? -value[l] : value[l];
  }
}

}  // namespace

ThreeLieAlgebra ThreeLieAlgebra::from_canonical(std::size_t dim, Field field,
                                                const std::vector<CanonicalEntry>& entries,
                                                std::vector<std::string> basis) {
  ThreeLieAlgebra g;
  g.dim_ = dim;
  g.field_ = field;
  g.basis_ = std::move(basis);
  check_basis(g.basis_, dim);
  g.c_ = Tensor4(dim);
  std::vector<bool> seen(dim * dim * dim, false);
  for (const CanonicalEntry& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim)
      throw std::invalid_argument("structure constant index out of range");
    if (!(e.i < e.j && e.j < e.k))
      throw std::invalid_argument("3-Lie entries must use canonical triples i<j<k");
    std::size_t key = (e.i * dim + e.j) * dim + e.k;
    if (seen[key]) throw std::invalid_argument("duplicate structure constant triple");
    seen[key] = true;
    if (e.value.size() != dim) throw std::invalid_argument("structure constant value length");
    fill_alternating(g.c_, e.i, e.j, e.k, e.value);
  }
  if (field == Field::rational && !g.c_.all_real())
    throw std::invalid_argument("rational-field algebra with non-real constants");
  return g;
}

ThreeLieAlgebra ThreeLieAlgebra::from_dense(Tensor4 c, Field field,
                                            std::vector<std::string> basis) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& v = c.at(i, j, k, l);
          if ((i == j || j == k || i == k) && !v.is_zero())
            throw std::logic_error("3-Lie tensor not alternating (repeated index)");
          if (c.at(j, i, k, l) != -v || c.at(i, k, j, l) != -v)
            throw std::logic_error("3-Lie tensor not alternating");
        }
  ThreeLieAlgebra g;
  g.dim_ = n;
  g.field_ = field;
  g.basis_ = std::move(basis);
  check_basis(g.basis_, n);
  if (field == Field::rational && !c.all_real())
    throw std::invalid_argument("rational-field algebra with non-real constants");
  g.c_ = std::move(c);
  return g;
}

ThreeLieAlgebra ThreeLieAlgebra::abelian(std::size_t dim, Field field) {
  return from_canonical(dim, field, {});
}

Vec ThreeLieAlgebra::bracket(const Vec& x, const Vec& y, const Vec& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
    throw std::invalid_argument("bracket: vector dimension mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j == i || y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (k == i || k == j || z[k].is_zero()) continue;
        Scalar coeff = xy * z[k];
        for (std::size_t l = 0; l < dim_; ++l) {
          const Scalar& c = c_.at(i, j, k, l);
          if (!c.is_zero()) out[l] += coeff * c;
        }
      }
    }
  }
  return out;
}

Matrix ThreeLieAlgebra::ad(std::size_t i, std::size_t j) const {
  Matrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = 0; l < dim_; ++l) m.at(l, k) = c_.at(i, j, k, l);
  return m;
}

Matrix ThreeLieAlgebra::ad(const Vec& x, const Vec& y) const {
  Matrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    Vec col = bracket(x, y, unit_vec(dim_, k));
    for (std::size_t l = 0; l < dim_; ++l) m.at(l, k) = col[l];
  }
  return m;
}

Report check_fundamental_identity(const ThreeLieAlgebra& g, std::size_t max_witnesses) {
  const std::size_t n = g.dim();
  ReportBuilder rb("fundamental identity", max_witnesses);
  rb.begin("fundamental-identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec ea = unit_vec(n, a), eb = unit_vec(n, b);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          for (std::size_t r = q + 1; r < n; ++r) {
            Vec lhs = g.bracket(ea, eb, g.bracket(p, q, r));
            Vec rhs = g.bracket(g.bracket(a, b, p), unit_vec(n, q), unit_vec(n, r)) +
                      g.bracket(unit_vec(n, p), g.bracket(a, b, q), unit_vec(n, r)) +
                      g.bracket(unit_vec(n, p), unit_vec(n, q), g.bracket(a, b, r));
            if (lhs != rhs) rb.violation({a, b, p, q, r}, to_string(lhs), to_string(rhs));
          }
    }
  rb.end();
  return rb.take();
}

Report check_fundamental_identity_derivation_form(const ThreeLieAlgebra& g,
                                                  std::size_t max_witnesses) {
  const std::size_t n = g.dim();
  ReportBuilder rb("fundamental identity (derivation form)", max_witnesses);
  rb.begin("ad-derivation");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix adab = g.ad(a, b);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          for (std::size_t r = q + 1; r < n; ++r) {
            Vec lhs = adab.apply(g.bracket(p, q, r));
            Vec rhs = g.bracket(adab.apply(unit_vec(n, p)), unit_vec(n, q), unit_vec(n, r)) +
                      g.bracket(unit_vec(n, p), adab.apply(unit_vec(n, q)), unit_vec(n, r)) +
                      g.bracket(unit_vec(n, p), unit_vec(n, q), adab.apply(unit_vec(n, r)));
            if (lhs != rhs) rb.violation({a, b, p, q, r}, to_string(lhs), to_string(rhs));
          }
    }
  rb.end();
  return rb.take();
}

bool is_subalgebra(const ThreeLieAlgebra& g, const Subspace& w) {
  if (w.ambient() != g.dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
  const auto& basis = w.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      for (std::size_t k = j + 1; k < basis.size(); ++k)
        if (!w.contains(g.bracket(basis[i], basis[j], basis[k]))) return false;
  return true;
}

bool is_abelian_on(const ThreeLieAlgebra& g, const Subspace& w) {
  if (w.ambient() != g.dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
  const auto& basis = w.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      for (std::size_t k = j + 1; k < basis.size(); ++k)
        if (!is_zero(g.bracket(basis[i], basis[j], basis[k]))) return false;
  return true;
}

Vec bracket_n1(const ThreeLieAlgebra& g, const Matrix& n, const Vec& x, const Vec& y,
               const Vec& z) {
  return g.bracket(n.apply(x), y, z) + g.bracket(x, n.apply(y), z) + g.bracket(x, y, n.apply(z)) -
         n.apply(g.bracket(x, y, z));
}

Vec bracket_n2(const ThreeLieAlgebra& g, const Matrix& n, const Vec& x, const Vec& y,
               const Vec& z) {
  return g.bracket(n.apply(x), n.apply(y), z) + g.bracket(x, n.apply(y), n.apply(z)) +
         g.bracket(n.apply(x), y, n.apply(z)) - n.apply(bracket_n1(g, n, x, y, z));
}

Report check_nijenhuis(const ThreeLieAlgebra& g, const Matrix& n, std::size_t max_witnesses) {
  if (n.rows() != g.dim() || n.cols() != g.dim())
    throw std::invalid_argument("check_nijenhuis: map dimension mismatch");
  ReportBuilder rb("Nijenhuis condition", max_witnesses);
  rb.begin("nijenhuis");
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Vec x = unit_vec(d, i), y = unit_vec(d, j), z = unit_vec(d, k);
        Vec lhs = g.bracket(n.apply(x), n.apply(y), n.apply(z));
        Vec rhs = n.apply(bracket_n2(g, n, x, y, z));
        if (lhs != rhs) rb.violation({i, j, k}, to_string(lhs), to_string(rhs));
      }
  rb.end();
  return rb.take();
}

ThreeLieAlgebra direct_sum(const ThreeLieAlgebra& g1, const ThreeLieAlgebra& g2) {
  if (g1.field() != g2.field())
    throw std::invalid_argument("direct_sum: scalar field mismatch");
  const std::size_t n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
  Tensor4 c(n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k)
        for (std::size_t l = 0; l < n1; ++l) c.at(i, j, k, l) = g1.constants().at(i, j, k, l);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k < n2; ++k)
        for (std::size_t l = 0; l < n2; ++l)
          c.at(n1 + i, n1 + j, n1 + k, n1 + l) = g2.constants().at(i, j, k, l);
  std::vector<std::string> basis = g1.basis();
  basis.insert(basis.end(), g2.basis().begin(), g2.basis().end());
  return ThreeLieAlgebra::from_dense(std::move(c), g1.field(), std::move(basis));
}

}  // namespace trilie
