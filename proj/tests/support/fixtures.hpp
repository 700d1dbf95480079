#pragma once

#include <random>

#include "trilie/kaehler.hpp"
#include "trilie/linalg.hpp"
#include "trilie/symplectic.hpp"

namespace trilie::testing {

inline Vec unit(std::size_t n, std::size_t i) { return unit_vec(n, i); }

/// The 4-dimensional Euclidean 3-Lie algebra A4:
/// [e1,e2,e3]=e4, [e2,e3,e4]=e1, [e1,e3,e4]=e2, [e1,e2,e4]=e3.
inline ThreeLieAlgebra a4() {
  return ThreeLieAlgebra::from_canonical(
      4, Field::rational,
      {{0, 1, 2, unit(4, 3)}, {1, 2, 3, unit(4, 0)}, {0, 2, 3, unit(4, 1)}, {0, 1, 3, unit(4, 2)}});
}

/// The unique nontrivial 3-dimensional 3-Lie algebra: [e1,e2,e3] = e1.
inline ThreeLieAlgebra threedim() {
  return ThreeLieAlgebra::from_canonical(3, Field::rational, {{0, 1, 2, unit(3, 0)}});
}

inline Matrix diag(const std::vector<int>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = Scalar(entries[i]);
  return m;
}

/// E1..E6 on A4: the six sign diagonals with two -1 entries (1-based index).
inline Matrix a4_product_e(int idx) {
  switch (idx) {
    case 1: return diag({1, 1, -1, -1});
    case 2: return diag({1, -1, 1, -1});
    case 3: return diag({1, -1, -1, 1});
    case 4: return diag({-1, 1, 1, -1});
    case 5: return diag({-1, 1, -1, 1});
    default: return diag({-1, -1, 1, 1});
  }
}

// A signed 2-cycle pairing: J e_a = s e_b, J e_b = -s e_a.
inline void set_pair(Matrix& m, std::size_t a, std::size_t b, int s) {
  m.at(b, a) = Scalar(s);
  m.at(a, b) = Scalar(-s);
}

/// J1..J6 on A4 (1-based index), as listed in the worked example.
inline Matrix a4_complex_j(int idx) {
  Matrix m(4, 4);
  switch (idx) {
    case 1: set_pair(m, 0, 2, 1); set_pair(m, 1, 3, 1); break;
    case 2: set_pair(m, 0, 1, 1); set_pair(m, 2, 3, 1); break;
    case 3: set_pair(m, 0, 1, 1); set_pair(m, 2, 3, -1); break;
    case 4: set_pair(m, 0, 1, -1); set_pair(m, 2, 3, 1); break;
    case 5: set_pair(m, 0, 1, -1); set_pair(m, 2, 3, -1); break;
    default: set_pair(m, 0, 2, -1); set_pair(m, 1, 3, -1); break;
  }
  return m;
}

/// omega1..omega6 on A4 (1-based index), with (a* ^ b*)(x,y) = a*(x)b*(y) - a*(y)b*(x).
inline BilForm a4_omega(int idx) {
  Matrix m(4, 4);
  auto wedge = [&m](std::size_t a, std::size_t b) {
    m.at(a, b) += Scalar(1);
    m.at(b, a) -= Scalar(1);
  };
  switch (idx) {
    case 1: wedge(2, 0); wedge(3, 1); break;
    case 2: wedge(1, 0); wedge(3, 2); break;
    case 3: wedge(1, 0); wedge(2, 3); break;
    case 4: wedge(0, 1); wedge(3, 2); break;
    case 5: wedge(0, 1); wedge(2, 3); break;
    default: wedge(0, 2); wedge(1, 3); break;
  }
  return BilForm(std::move(m), FormKind::skew);
}

/// The 3-pre-Lie algebra induced on the 3-dim algebra by the strong abelian
/// product structure diag(1,1,-1): {e1,e2,e3} = -e1 and cyclic companions.
inline ThreePreLie derived_prelie3() {
  return compatible_prelie_from_O(threedim(), adjoint_rep(threedim()), diag({1, 1, -1}));
}

// --- deterministic random data ------------------------------------------

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_range = 3, int den_range = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Vec random_vec(Rng& rng, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Scalar(random_rational(rng));
  return v;
}

inline Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(random_rational(rng));
  return m;
}

inline Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (!determinant(m).is_zero()) return m;
  }
}

inline Matrix random_symmetric_nondegenerate(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    Matrix s = m + m.transpose();
    if (!determinant(s).is_zero()) return s;
  }
}

inline BilForm random_skew_nondegenerate(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    Matrix s = m - m.transpose();
    if (!determinant(s).is_zero()) return BilForm(std::move(s), FormKind::skew);
  }
}

/// Isomorphic image of g under an invertible P: [x,y,z]' = P^{-1}[Px,Py,Pz].
inline ThreeLieAlgebra change_basis(const ThreeLieAlgebra& g, const Matrix& p) {
  const std::size_t n = g.dim();
  Matrix pinv = inverse(p);
  Tensor4 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec v = pinv.apply(g.bracket(p.column(i), p.column(j), p.column(k)));
        const std::size_t idx[6][3] = {{i, j, k}, {j, k, i}, {k, i, j},
                                       {j, i, k}, {i, k, j}, {k, j, i}};
        for (int t = 0; t < 6; ++t)
          for (std::size_t l = 0; l < n; ++l)
            c.at(idx[t][0], idx[t][1], idx[t][2], l) = t < 3 ? v[l] : -v[l];
      }
  return ThreeLieAlgebra::from_dense(std::move(c), g.field());
}

/// Isomorphic image of a pre-Lie algebra under an invertible P.
inline ThreePreLie change_basis(const ThreePreLie& a, const Matrix& p) {
  const std::size_t n = a.dim();
  Matrix pinv = inverse(p);
  Tensor4 d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec v = pinv.apply(a.product(p.column(i), p.column(j), p.column(k)));
        for (std::size_t l = 0; l < n; ++l) {
          d.at(i, j, k, l) = v[l];
          d.at(j, i, k, l) = -v[l];
        }
      }
  return ThreePreLie::from_dense(std::move(d), a.field());
}

}  // namespace trilie::testing
