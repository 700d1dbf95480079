#include "trilie/prelie.hpp"

#include <stdexcept>

#include "trilie/linalg.hpp"

namespace trilie {

namespace {

void check_basis(std::vector<std::string>& basis, std::size_t dim) {
  if (basis.empty()) basis = default_basis_names(dim);
  if (basis.size() != dim) throw std::invalid_argument("basis name count does not match dimension");
}

}  // namespace

ThreePreLie ThreePreLie::from_canonical(std::size_t dim, Field field,
                                        const std::vector<CanonicalEntry>& entries,
                                        std::vector<std::string> basis) {
  ThreePreLie a;
  a.dim_ = dim;
  a.field_ = field;
  a.basis_ = std::move(basis);
  check_basis(a.basis_, dim);
  a.d_ = Tensor4(dim);
  std::vector<bool> seen(dim * dim * dim, false);
  for (const CanonicalEntry& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim)
      throw std::invalid_argument("structure constant index out of range");
    if (!(e.i < e.j)) throw std::invalid_argument("3-pre-Lie entries must use pairs i<j");
    std::size_t key = (e.i * dim + e.j) * dim + e.k;
    if (seen[key]) throw std::invalid_argument("duplicate structure constant triple");
    seen[key] = true;
    if (e.value.size() != dim) throw std::invalid_argument("structure constant value length");
    for (std::size_t l = 0; l < dim; ++l) {
      a.d_.at(e.i, e.j, e.k, l) = e.value[l];
      a.d_.at(e.j, e.i, e.k, l) = -e.value[l];
    }
  }
  if (field == Field::rational && !a.d_.all_real())
    throw std::invalid_argument("rational-field algebra with non-real constants");
  return a;
}

ThreePreLie ThreePreLie::from_dense(Tensor4 d, Field field, std::vector<std::string> basis) {
  const std::size_t n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (i == j && !d.at(i, j, k, l).is_zero())
            throw std::logic_error("3-pre-Lie tensor not skew in first two slots");
          if (d.at(j, i, k, l) != -d.at(i, j, k, l))
            throw std::logic_error("3-pre-Lie tensor not skew in first two slots");
        }
  ThreePreLie a;
  a.dim_ = n;
  a.field_ = field;
  a.basis_ = std::move(basis);
  check_basis(a.basis_, n);
  if (field == Field::rational && !d.all_real())
    throw std::invalid_argument("rational-field algebra with non-real constants");
  a.d_ = std::move(d);
  return a;
}

ThreePreLie ThreePreLie::abelian(std::size_t dim, Field field) {
  return from_canonical(dim, field, {});
}

Vec ThreePreLie::product(const Vec& x, const Vec& y, const Vec& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
    throw std::invalid_argument("product: vector dimension mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j == i || y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (z[k].is_zero()) continue;
        Scalar coeff = xy * z[k];
        for (std::size_t l = 0; l < dim_; ++l) {
          const Scalar& c = d_.at(i, j, k, l);
          if (!c.is_zero()) out[l] += coeff * c;
        }
      }
    }
  }
  return out;
}

Matrix ThreePreLie::left(std::size_t i, std::size_t j) const {
  Matrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = 0; l < dim_; ++l) m.at(l, k) = d_.at(i, j, k, l);
  return m;
}

Matrix ThreePreLie::right(std::size_t i, std::size_t j) const {
  Matrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = 0; l < dim_; ++l) m.at(l, k) = d_.at(k, i, j, l);
  return m;
}

namespace {

// Cyclic-sum bracket vector on basis indices.
Vec subadj_bracket(const ThreePreLie& a, std::size_t i, std::size_t j, std::size_t k) {
  return a.product(i, j, k) + a.product(j, k, i) + a.product(k, i, j);
}

}  // namespace

Report check_prelie_axioms(const ThreePreLie& a, std::size_t max_witnesses) {
  const std::size_t n = a.dim();
  ReportBuilder rb("3-pre-Lie axioms", max_witnesses);

  rb.begin("skew-first-two");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.product(i, j, k);
        Vec rhs = -a.product(j, i, k);
        if (lhs != rhs) rb.violation({i, j, k}, to_string(lhs), to_string(rhs));
      }
  rb.end();

  // Both five-variable axioms are skew in (x1,x2), so pairs x1<x2 are
  // exhaustive over basis tuples.
  rb.begin("prelie-axiom-1");
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
      Vec e1 = unit_vec(n, x1), e2 = unit_vec(n, x2);
      for (std::size_t x3 = 0; x3 < n; ++x3)
        for (std::size_t x4 = 0; x4 < n; ++x4)
          for (std::size_t x5 = 0; x5 < n; ++x5) {
            Vec e3 = unit_vec(n, x3), e4 = unit_vec(n, x4), e5 = unit_vec(n, x5);
            Vec lhs = a.product(e1, e2, a.product(x3, x4, x5));
            Vec rhs = a.product(subadj_bracket(a, x1, x2, x3), e4, e5) +
                      a.product(e3, subadj_bracket(a, x1, x2, x4), e5) +
                      a.product(e3, e4, a.product(x1, x2, x5));
            if (lhs != rhs) rb.violation({x1, x2, x3, x4, x5}, to_string(lhs), to_string(rhs));
          }
    }
  rb.end();

  rb.begin("prelie-axiom-2");
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
      Vec e1 = unit_vec(n, x1), e2 = unit_vec(n, x2);
      for (std::size_t x3 = 0; x3 < n; ++x3)
        for (std::size_t x4 = 0; x4 < n; ++x4)
          for (std::size_t x5 = 0; x5 < n; ++x5) {
            Vec e3 = unit_vec(n, x3), e4 = unit_vec(n, x4), e5 = unit_vec(n, x5);
            Vec lhs = a.product(subadj_bracket(a, x1, x2, x3), e4, e5);
            Vec rhs = a.product(e1, e2, a.product(x3, x4, x5)) +
                      a.product(e2, e3, a.product(x1, x4, x5)) +
                      a.product(e3, e1, a.product(x2, x4, x5));
            if (lhs != rhs) rb.violation({x1, x2, x3, x4, x5}, to_string(lhs), to_string(rhs));
          }
    }
  rb.end();
  return rb.take();
}

ThreeLieAlgebra sub_adjacent(const ThreePreLie& a) {
  const std::size_t n = a.dim();
  Tensor4 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec v = subadj_bracket(a, i, j, k);
        for (std::size_t l = 0; l < n; ++l) c.at(i, j, k, l) = v[l];
      }
  return ThreeLieAlgebra::from_dense(std::move(c), a.field(), a.basis());
}

Representation left_mult(const ThreePreLie& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> maps;
  maps.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) maps.push_back(a.left(i, j));
  return Representation(sub_adjacent(a), n, std::move(maps));
}

std::vector<Matrix> right_mult(const ThreePreLie& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> maps;
  maps.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) maps.push_back(a.right(i, j));
  return maps;
}

PreLieRep::PreLieRep(ThreePreLie base, std::size_t vdim, std::vector<Matrix> rho_maps,
                     std::vector<Matrix> mu_maps)
    : base_(std::move(base)), vdim_(vdim), rho_(std::move(rho_maps)), mu_(std::move(mu_maps)) {
  const std::size_t n = base_.dim();
  if (rho_.size() != pair_count(n)) throw std::invalid_argument("pre-Lie rep: rho map count");
  if (mu_.size() != n * n) throw std::invalid_argument("pre-Lie rep: mu map count");
  for (const Matrix& m : rho_)
    if (m.rows() != vdim_ || m.cols() != vdim_)
      throw std::invalid_argument("pre-Lie rep: rho map size");
  for (const Matrix& m : mu_)
    if (m.rows() != vdim_ || m.cols() != vdim_)
      throw std::invalid_argument("pre-Lie rep: mu map size");
}

PreLieRep PreLieRep::zero(ThreePreLie base, std::size_t vdim) {
  const std::size_t n = base.dim();
  std::vector<Matrix> rho(pair_count(n), Matrix::zero(vdim, vdim));
  std::vector<Matrix> mu(n * n, Matrix::zero(vdim, vdim));
  return PreLieRep(std::move(base), vdim, std::move(rho), std::move(mu));
}

PreLieRep PreLieRep::from_rho(ThreePreLie base, const Representation& rho) {
  const std::size_t n = base.dim();
  std::vector<Matrix> mu(n * n, Matrix::zero(rho.vdim(), rho.vdim()));
  return PreLieRep(std::move(base), rho.vdim(), rho.canonical_maps(), std::move(mu));
}

Matrix PreLieRep::rho(std::size_t i, std::size_t j) const {
  if (i == j) return Matrix::zero(vdim_, vdim_);
  if (i < j) return rho_[pair_index(i, j, base_.dim())];
  return -rho_[pair_index(j, i, base_.dim())];
}

Matrix PreLieRep::rho(const Vec& x, const Vec& y) const {
  const std::size_t n = base_.dim();
  Matrix out(vdim_, vdim_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar coeff = x[i] * y[j] - x[j] * y[i];
      if (coeff.is_zero()) continue;
      out = out + coeff * rho_[pair_index(i, j, n)];
    }
  return out;
}

Matrix PreLieRep::mu(const Vec& x, const Vec& y) const {
  const std::size_t n = base_.dim();
  Matrix out(vdim_, vdim_);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      out = out + (x[i] * y[j]) * mu_[i * n + j];
    }
  }
  return out;
}

PreLieRep regular_rep(const ThreePreLie& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> rho;
  rho.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rho.push_back(a.left(i, j));
  std::vector<Matrix> mu;
  mu.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mu.push_back(a.right(i, j));
  return PreLieRep(a, n, std::move(rho), std::move(mu));
}

Report check_prelie_representation(const PreLieRep& pr, std::size_t max_witnesses) {
  const ThreePreLie& a = pr.base();
  const std::size_t n = a.dim();

  // mu with a coefficient vector in one slot.
  auto mu_vec_left = [&](const Vec& w, std::size_t j) {
    Matrix out(pr.vdim(), pr.vdim());
    for (std::size_t m = 0; m < n; ++m)
      if (!w[m].is_zero()) out = out + w[m] * pr.mu(m, j);
    return out;
  };
  auto mu_vec_right = [&](std::size_t i, const Vec& w) {
    Matrix out(pr.vdim(), pr.vdim());
    for (std::size_t m = 0; m < n; ++m)
      if (!w[m].is_zero()) out = out + w[m] * pr.mu(i, m);
    return out;
  };

  ReportBuilder rb("3-pre-Lie representation", max_witnesses);

  // rho must be a representation of the sub-adjacent 3-Lie algebra.
  std::vector<Matrix> rho_maps;
  rho_maps.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rho_maps.push_back(pr.rho(i, j));
  Representation rho_rep(sub_adjacent(a), pr.vdim(), std::move(rho_maps));
  Report rho_report = check_representation(rho_rep, max_witnesses);
  Report out = rb.take();
  out.subject = "3-pre-Lie representation";
  for (CheckItem& item : rho_report.items) {
    item.identity = "rho-" + item.identity;
    out.items.push_back(std::move(item));
  }

  // Operator products apply the rightmost factor first (matrix products).
  ReportBuilder rb2("", max_witnesses);
  rb2.begin("rep1");
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t x3 = 0; x3 < n; ++x3)
        for (std::size_t x4 = 0; x4 < n; ++x4) {
          Matrix lhs = pr.rho(x1, x2) * pr.mu(x3, x4);
          Matrix rhs = pr.mu(x3, x4) * pr.rho(x1, x2) - pr.mu(x3, x4) * pr.mu(x2, x1) +
                       pr.mu(x3, x4) * pr.mu(x1, x2) +
                       mu_vec_left(subadj_bracket(a, x1, x2, x3), x4) +
                       mu_vec_right(x3, a.product(x1, x2, x4));
          if (lhs != rhs) rb2.violation({x1, x2, x3, x4}, matrix_brief(lhs), matrix_brief(rhs));
        }
  rb2.end();
  rb2.begin("rep2");
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t x3 = 0; x3 < n; ++x3)
        for (std::size_t x4 = 0; x4 < n; ++x4) {
          Matrix lhs = mu_vec_left(subadj_bracket(a, x1, x2, x3), x4);
          Matrix rhs = pr.rho(x1, x2) * pr.mu(x3, x4) + pr.rho(x2, x3) * pr.mu(x1, x4) +
                       pr.rho(x3, x1) * pr.mu(x2, x4);
          if (lhs != rhs) rb2.violation({x1, x2, x3, x4}, matrix_brief(lhs), matrix_brief(rhs));
        }
  rb2.end();
  rb2.begin("rep3");
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t x3 = 0; x3 < n; ++x3)
        for (std::size_t x4 = 0; x4 < n; ++x4) {
          Matrix lhs = mu_vec_right(x1, a.product(x2, x3, x4));
          Matrix rhs = pr.mu(x3, x4) * pr.mu(x1, x2) + pr.mu(x3, x4) * pr.rho(x1, x2) -
                       pr.mu(x3, x4) * pr.mu(x2, x1) - pr.mu(x2, x4) * pr.mu(x1, x3) -
                       pr.mu(x2, x4) * pr.rho(x1, x3) + pr.mu(x2, x4) * pr.mu(x3, x1) +
                       pr.rho(x2, x3) * pr.mu(x1, x4);
          if (lhs != rhs) rb2.violation({x1, x2, x3, x4}, matrix_brief(lhs), matrix_brief(rhs));
        }
  rb2.end();
  rb2.begin("rep4");
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t x3 = 0; x3 < n; ++x3)
        for (std::size_t x4 = 0; x4 < n; ++x4) {
          Matrix lhs = pr.mu(x3, x4) * pr.rho(x1, x2);
          Matrix rhs = pr.mu(x3, x4) * pr.mu(x2, x1) - pr.mu(x3, x4) * pr.mu(x1, x2) +
                       pr.rho(x1, x2) * pr.mu(x3, x4) -
                       mu_vec_right(x2, a.product(x1, x3, x4)) +
                       mu_vec_right(x1, a.product(x2, x3, x4));
          if (lhs != rhs) rb2.violation({x1, x2, x3, x4}, matrix_brief(lhs), matrix_brief(rhs));
        }
  rb2.end();
  Report mu_report = rb2.take();
  for (CheckItem& item : mu_report.items) out.items.push_back(std::move(item));
  return out;
}

ThreePreLie semidirect_prelie(const PreLieRep& pr) {
  const ThreePreLie& a = pr.base();
  const std::size_t n = a.dim(), v = pr.vdim(), d = n + v;
  Tensor4 t(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t.at(i, j, k, l) = a.constants().at(i, j, k, l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix rho = pr.rho(i, j);
      Matrix mu = pr.mu(i, j);
      for (std::size_t b = 0; b < v; ++b)
        for (std::size_t l = 0; l < v; ++l) {
          if (!rho.at(l, b).is_zero()) t.at(i, j, n + b, n + l) = rho.at(l, b);
          if (!mu.at(l, b).is_zero()) {
            t.at(n + b, i, j, n + l) = mu.at(l, b);    // mu(x2,x3) v1
            t.at(i, n + b, j, n + l) = -mu.at(l, b);   // -mu(x1,x3) v2
          }
        }
    }
  std::vector<std::string> basis = a.basis();
  std::vector<std::string> vnames = default_basis_names(v, "v");
  basis.insert(basis.end(), vnames.begin(), vnames.end());
  return ThreePreLie::from_dense(std::move(t), a.field(), std::move(basis));
}

Representation combined_rep(const PreLieRep& pr) {
  const std::size_t n = pr.base().dim();
  std::vector<Matrix> maps;
  maps.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      maps.push_back(pr.rho(i, j) - pr.mu(j, i) + pr.mu(i, j));
  return Representation(sub_adjacent(pr.base()), pr.vdim(), std::move(maps));
}

PreLieRep dual_prelie_rep(const PreLieRep& pr) {
  const std::size_t n = pr.base().dim();
  std::vector<Matrix> rho;
  rho.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rho.push_back((-(pr.rho(i, j) - pr.mu(j, i) + pr.mu(i, j))).transpose());
  std::vector<Matrix> mu;
  mu.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mu.push_back(pr.mu(i, j).transpose());
  return PreLieRep(pr.base(), pr.vdim(), std::move(rho), std::move(mu));
}

Report check_O_operator(const ThreeLieAlgebra& g, const Representation& r, const Matrix& t,
                        std::size_t max_witnesses) {
  if (t.rows() != g.dim() || t.cols() != r.vdim())
    throw std::invalid_argument("check_O_operator: T must map V into g");
  const std::size_t v = r.vdim();
  ReportBuilder rb("O-operator", max_witnesses);
  rb.begin("o-operator");
  // Both sides are alternating trilinear in (u,v,w), so canonical triples of
  // the V basis are exhaustive.
  for (std::size_t uu = 0; uu < v; ++uu)
    for (std::size_t vv = uu + 1; vv < v; ++vv)
      for (std::size_t ww = vv + 1; ww < v; ++ww) {
        Vec tu = t.column(uu), tv = t.column(vv), tw = t.column(ww);
        Vec lhs = g.bracket(tu, tv, tw);
        Vec inner = r.rho(tu, tv).apply(unit_vec(v, ww)) + r.rho(tv, tw).apply(unit_vec(v, uu)) +
                    r.rho(tw, tu).apply(unit_vec(v, vv));
        Vec rhs = t.apply(inner);
        if (lhs != rhs) rb.violation({uu, vv, ww}, to_string(lhs), to_string(rhs));
      }
  rb.end();
  return rb.take();
}

ThreePreLie compatible_prelie_from_O(const ThreeLieAlgebra& g, const Representation& r,
                                     const Matrix& t) {
  if (!t.is_square() || t.rows() != g.dim() || r.vdim() != g.dim())
    throw std::invalid_argument("compatible_prelie_from_O: T must be square of the algebra dim");
  Matrix tinv;
  try {
    tinv = inverse(t);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("compatible_prelie_from_O: T is singular");
  }
  if (!check_O_operator(g, r, t).ok())
    throw std::invalid_argument("compatible_prelie_from_O: T is not an O-operator");
  const std::size_t n = g.dim();
  Tensor4 d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix m = t * r.rho(i, j) * tinv;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          d.at(i, j, k, l) = m.at(l, k);
          d.at(j, i, k, l) = -m.at(l, k);
        }
    }
  return ThreePreLie::from_dense(std::move(d), g.field(), g.basis());
}

bool check_invariant_form(const ThreePreLie& a, const BilForm& b) {
  if (b.kind != FormKind::symmetric)
    throw std::invalid_argument("check_invariant_form: form must be symmetric");
  if (b.dim() != a.dim()) throw std::invalid_argument("check_invariant_form: dimension mismatch");
  if (!b.nondegenerate())
    throw std::invalid_argument("check_invariant_form: form must be nondegenerate");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar lhs = b.eval(a.product(i, j, k), unit_vec(n, l));
          Scalar rhs = -b.eval(unit_vec(n, k), a.product(i, j, l));
          if (lhs != rhs) return false;
        }
  return true;
}

std::vector<Matrix> invariant_form_space(const ThreePreLie& a) {
  const std::size_t n = a.dim();
  // Unknowns: entries b_{pq} with p <= q of a symmetric matrix.
  const std::size_t unknowns = n * (n + 1) / 2;
  auto unknown_index = [n](std::size_t p, std::size_t q) {
    if (p > q) std::swap(p, q);
    return p * (2 * n - p + 1) / 2 + (q - p);
  };
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          // sum_m d(i,j,k,m) B(m,l) + sum_m d(i,j,l,m) B(k,m) = 0
          Vec row(unknowns);
          bool nonzero = false;
          for (std::size_t m = 0; m < n; ++m) {
            const Scalar& c1 = a.constants().at(i, j, k, m);
            if (!c1.is_zero()) {
              row[unknown_index(m, l)] += c1;
              nonzero = true;
            }
            const Scalar& c2 = a.constants().at(i, j, l, m);
            if (!c2.is_zero()) {
              row[unknown_index(k, m)] += c2;
              nonzero = true;
            }
          }
          if (nonzero) rows.push_back(std::move(row));
        }
  std::vector<Vec> solutions;
  if (rows.empty()) {
    for (std::size_t t = 0; t < unknowns; ++t) solutions.push_back(unit_vec(unknowns, t));
  } else {
    Matrix sys(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < unknowns; ++c) sys.at(r, c) = rows[r][c];
    solutions = kernel_basis(sys);
  }
  std::vector<Matrix> forms;
  for (const Vec& sol : solutions) {
    Matrix b(n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p; q < n; ++q) {
        b.at(p, q) = sol[unknown_index(p, q)];
        b.at(q, p) = sol[unknown_index(p, q)];
      }
    forms.push_back(std::move(b));
  }
  return forms;
}

}  // namespace trilie
