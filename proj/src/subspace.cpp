#include "trilie/subspace.hpp"

#include <stdexcept>

namespace trilie {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace w;
  w.ambient_ = ambient;
  if (vectors.empty()) return w;
  Matrix rows(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw std::invalid_argument("span: vector length mismatch");
    for (std::size_t j = 0; j < ambient; ++j) rows.at(i, j) = vectors[i][j];
  }
  Matrix r = rref(rows);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Vec v(ambient);
    bool nonzero = false;
    for (std::size_t j = 0; j < ambient; ++j) {
      v[j] = r.at(i, j);
      nonzero = nonzero || !v[j].is_zero();
    }
    if (nonzero) w.basis_.push_back(std::move(v));
  }
  return w;
}

Subspace Subspace::kernel_of(const Matrix& a) { return span(a.cols(), kernel_basis(a)); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: vector length mismatch");
  // Reduce v against the echelon basis.
  Vec rem = v;
  for (const Vec& b : basis_) {
    std::size_t lead = 0;
    while (lead < ambient_ && b[lead].is_zero()) ++lead;
    if (lead == ambient_) continue;
    if (!rem[lead].is_zero()) {
      Scalar f = rem[lead] / b[lead];
      for (std::size_t j = lead; j < ambient_; ++j) rem[j] -= f * b[j];
    }
  }
  return is_zero(rem);
}

bool Subspace::contains(const Subspace& other) const {
  for (const Vec& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Subspace apply(const Matrix& m, const Subspace& w) {
  std::vector<Vec> images;
  images.reserve(w.dim());
  for (const Vec& b : w.basis()) images.push_back(m.apply(b));
  return Subspace::span(m.rows(), images);
}

bool is_direct_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) return false;
  if (u.dim() + w.dim() != u.ambient()) return false;
  std::vector<Vec> all = u.basis();
  all.insert(all.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.ambient(), all).dim() == u.ambient();
}

}  // namespace trilie
