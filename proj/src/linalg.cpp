#include "trilie/linalg.hpp"

#include <stdexcept>

namespace trilie {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv_piv = inverse(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv_piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  Matrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }

  // Fraction-free forward elimination (Bareiss), with column skipping for
  // rank-deficient systems.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug.at(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != r)
      for (std::size_t j = 0; j <= n; ++j) std::swap(aug.at(p, j), aug.at(r, j));
    const Scalar piv = aug.at(r, c);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j <= n; ++j)
        aug.at(i, j) = (aug.at(i, j) * piv - aug.at(i, c) * aug.at(r, j)) / prev;
      aug.at(i, c) = Scalar(0);
    }
    prev = piv;
    pivots.emplace_back(r, c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!aug.at(i, n).is_zero()) return std::nullopt;

  Vec x(n);  // free variables stay zero
  for (std::size_t t = pivots.size(); t-- > 0;) {
    auto [row, col] = pivots[t];
    Scalar sum = aug.at(row, n);
    for (std::size_t j = col + 1; j < n; ++j) sum -= aug.at(row, j) * x[j];
    x[col] = sum / aug.at(row, col);
  }
  return x;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
  Matrix r = a;
  std::vector<std::size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols());
    v[f] = Scalar(1);
    for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -r.at(t, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix m = a;
  Scalar prev(1);
  bool flip = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m.at(p, k).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
      flip = !flip;
    }
    const Scalar piv = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * piv - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = Scalar(0);
    }
    prev = piv;
  }
  Scalar det = m.at(n - 1, n - 1);
  return flip ? -det : det;
}

std::size_t rank(const Matrix& a) {
  Matrix r = a;
  return rref_in_place(r).size();
}

Matrix rref(const Matrix& a) {
  Matrix r = a;
  rref_in_place(r);
  return r;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  std::vector<std::size_t> pivots = rref_in_place(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::domain_error("inverse: singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

bool is_positive_definite(const Matrix& s) {
  if (!s.is_square() || !s.is_symmetric())
    throw std::invalid_argument("is_positive_definite: matrix must be symmetric");
  if (!s.all_real())
    throw std::invalid_argument("is_positive_definite: matrix must have rational entries");
  for (std::size_t k = 1; k <= s.rows(); ++k) {
    Matrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = s.at(i, j);
    Scalar minor = determinant(lead);
    if (!(minor.re > 0)) return false;
  }
  return true;
}

std::pair<int, int> signature(const Matrix& s) {
  if (!s.is_square() || !s.is_symmetric())
    throw std::invalid_argument("signature: matrix must be symmetric");
  if (!s.all_real()) throw std::invalid_argument("signature: matrix must have rational entries");
  Matrix m = s;
  const std::size_t n = m.rows();
  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t swap_j = n;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!m.at(j, j).is_zero()) {
          swap_j = j;
          break;
        }
      if (swap_j < n) {
        for (std::size_t t = 0; t < n; ++t) std::swap(m.at(k, t), m.at(swap_j, t));
        for (std::size_t t = 0; t < n; ++t) std::swap(m.at(t, k), m.at(t, swap_j));
      } else {
        std::size_t off = n;
        for (std::size_t j = k + 1; j < n; ++j)
          if (!m.at(k, j).is_zero()) {
            off = j;
            break;
          }
        if (off == n) continue;  // zero row/column: null direction
        for (std::size_t t = 0; t < n; ++t) m.at(k, t) += m.at(off, t);
        for (std::size_t t = 0; t < n; ++t) m.at(t, k) += m.at(t, off);
      }
    }
    const Scalar piv = m.at(k, k);
    if (piv.re > 0)
      ++pos;
    else
      ++neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      Scalar f = m.at(i, k) / piv;
      for (std::size_t t = 0; t < n; ++t) m.at(i, t) -= f * m.at(k, t);
      for (std::size_t t = 0; t < n; ++t) m.at(t, i) -= f * m.at(t, k);
    }
  }
  return {pos, neg};
}

}  // namespace trilie
