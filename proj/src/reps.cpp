#include "trilie/reps.hpp"

#include <stdexcept>

namespace trilie {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

Representation::Representation(ThreeLieAlgebra base, std::size_t vdim, std::vector<Matrix> maps)
    : base_(std::move(base)), vdim_(vdim), maps_(std::move(maps)) {
  if (maps_.size() != pair_count(base_.dim()))
    throw std::invalid_argument("representation: wrong number of canonical pair maps");
  for (const Matrix& m : maps_)
    if (m.rows() != vdim_ || m.cols() != vdim_)
      throw std::invalid_argument("representation: map size does not match vdim");
}

Representation Representation::zero(ThreeLieAlgebra base, std::size_t vdim) {
  std::vector<Matrix> maps(pair_count(base.dim()), Matrix::zero(vdim, vdim));
  return Representation(std::move(base), vdim, std::move(maps));
}

Matrix Representation::rho(std::size_t i, std::size_t j) const {
  if (i == j) return Matrix::zero(vdim_, vdim_);
  if (i < j) return maps_[pair_index(i, j, base_.dim())];
  return -maps_[pair_index(j, i, base_.dim())];
}

Matrix Representation::rho(const Vec& x, const Vec& y) const {
  const std::size_t n = base_.dim();
  Matrix out(vdim_, vdim_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar coeff = x[i] * y[j] - x[j] * y[i];
      if (coeff.is_zero()) continue;
      out = out + coeff * maps_[pair_index(i, j, n)];
    }
  return out;
}

Representation adjoint_rep(const ThreeLieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> maps;
  maps.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) maps.push_back(g.ad(i, j));
  return Representation(g, n, std::move(maps));
}

Report check_representation(const Representation& r, std::size_t max_witnesses) {
  const ThreeLieAlgebra& g = r.base();
  const std::size_t n = g.dim();

  // rho(w, e_j) for an arbitrary first argument.
  auto rho_vec = [&](const Vec& w, std::size_t j) {
    Matrix out(r.vdim(), r.vdim());
    for (std::size_t m = 0; m < n; ++m) {
      if (w[m].is_zero()) continue;
      out = out + w[m] * r.rho(m, j);
    }
    return out;
  };

  ReportBuilder rb("3-Lie representation", max_witnesses);
  rb.begin("rep-commutator");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          // rho(x3, [x1,x2,x4]) carries the vector in its second slot:
          // rho(e_c, w) = -rho(w, e_c).
          Matrix lhs = rho_vec(g.bracket(a, b, c), d) - rho_vec(g.bracket(a, b, d), c);
          Matrix rhs = r.rho(a, b) * r.rho(c, d) - r.rho(c, d) * r.rho(a, b);
          if (lhs != rhs) rb.violation({a, b, c, d}, matrix_brief(lhs), matrix_brief(rhs));
        }
  rb.end();
  rb.begin("rep-cyclic");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Matrix lhs = rho_vec(g.bracket(a, b, c), d);
          Matrix rhs = r.rho(a, b) * r.rho(c, d) + r.rho(b, c) * r.rho(a, d) +
                       r.rho(c, a) * r.rho(b, d);
          if (lhs != rhs) rb.violation({a, b, c, d}, matrix_brief(lhs), matrix_brief(rhs));
        }
  rb.end();
  return rb.take();
}

Representation dual_representation(const Representation& r) {
  std::vector<Matrix> maps;
  maps.reserve(r.canonical_maps().size());
  for (const Matrix& m : r.canonical_maps()) maps.push_back(-m.transpose());
  return Representation(r.base(), r.vdim(), std::move(maps));
}

ThreeLieAlgebra semidirect_product(const ThreeLieAlgebra& g, const Representation& r) {
  if (g.field() != r.base().field())
    throw std::invalid_argument("semidirect_product: scalar field mismatch");
  const std::size_t n = g.dim(), v = r.vdim(), d = n + v;
  Tensor4 c(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) c.at(i, j, k, l) = g.constants().at(i, j, k, l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix rho = r.rho(i, j);
      for (std::size_t b = 0; b < v; ++b)
        for (std::size_t l = 0; l < v; ++l) {
          const Scalar& val = rho.at(l, b);
          if (val.is_zero()) continue;
          c.at(i, j, n + b, n + l) = val;          // rho(x1,x2) v3
          c.at(n + b, i, j, n + l) = val;          // rho(x2,x3) v1
          c.at(i, n + b, j, n + l) = -val;         // rho(x3,x1) v2
        }
    }
  std::vector<std::string> basis = g.basis();
  std::vector<std::string> vnames = default_basis_names(v, "v");
  basis.insert(basis.end(), vnames.begin(), vnames.end());
  return ThreeLieAlgebra::from_dense(std::move(c), g.field(), std::move(basis));
}

}  // namespace trilie
