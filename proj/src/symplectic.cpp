#include "trilie/symplectic.hpp"

#include <stdexcept>

#include "trilie/linalg.hpp"

namespace trilie {

Report check_symplectic(const ThreeLieAlgebra& g, const BilForm& omega,
                        std::size_t max_witnesses) {
  if (omega.dim() != g.dim()) throw std::invalid_argument("check_symplectic: dimension mismatch");
  ReportBuilder rb("symplectic structure", max_witnesses);

  const bool skew = omega.kind == FormKind::skew && omega.m.is_skew();
  rb.begin("skew-symmetric");
  if (!skew) rb.violation({}, "omega", "-omega^T");
  rb.end();

  if (!omega.nondegenerate()) {
    rb.fail_note("nondegenerate", "det = 0");
  } else {
    rb.begin("nondegenerate");
    rb.end();
  }

  rb.begin("symplectic-cocycle");
  const std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          Vec ex = unit_vec(n, x), ey = unit_vec(n, y), ez = unit_vec(n, z), ew = unit_vec(n, w);
          Scalar val = omega.eval(g.bracket(x, y, z), ew) - omega.eval(g.bracket(y, z, w), ex) +
                       omega.eval(g.bracket(z, w, x), ey) - omega.eval(g.bracket(w, x, y), ez);
          if (!val.is_zero()) rb.violation({x, y, z, w}, to_string(val), "0");
        }
  rb.end();
  return rb.take();
}

ThreePreLie prelie_from_symplectic(const ThreeLieAlgebra& g, const BilForm& omega) {
  if (!check_symplectic(g, omega).ok())
    throw std::invalid_argument("prelie_from_symplectic: omega is not symplectic");
  const std::size_t n = g.dim();
  // omega({x,y,z}, e_l) = -omega(z, [x,y,e_l]) determines {x,y,z} uniquely:
  // (Omega^T u)_l = rhs_l.
  Matrix solve = inverse(omega.m.transpose());
  Tensor4 d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec rhs(n);
        for (std::size_t l = 0; l < n; ++l)
          rhs[l] = -omega.eval(unit_vec(n, k), g.bracket(i, j, l));
        Vec u = solve.apply(rhs);
        for (std::size_t l = 0; l < n; ++l) {
          d.at(i, j, k, l) = u[l];
          d.at(j, i, k, l) = -u[l];
        }
      }
  return ThreePreLie::from_dense(std::move(d), g.field(), g.basis());
}

bool check_quadratic_prelie(const ThreePreLie& a, const BilForm& omega) {
  if (omega.dim() != a.dim())
    throw std::invalid_argument("check_quadratic_prelie: dimension mismatch");
  if (omega.kind != FormKind::skew)
    throw std::invalid_argument("check_quadratic_prelie: omega must be skew");
  if (!omega.nondegenerate())
    throw std::invalid_argument("check_quadratic_prelie: omega is degenerate");
  const std::size_t n = a.dim();
  auto bracket_c = [&](std::size_t i, std::size_t j, std::size_t k) {
    return a.product(i, j, k) + a.product(j, k, i) + a.product(k, i, j);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar lhs = omega.eval(a.product(i, j, k), unit_vec(n, l));
          Scalar rhs = -omega.eval(unit_vec(n, k), bracket_c(i, j, l));
          if (lhs != rhs) return false;
        }
  return true;
}

PhaseSpace phase_space(const ThreePreLie& a) {
  if (!check_prelie_axioms(a).ok())
    throw std::invalid_argument("phase_space: input is not a 3-pre-Lie algebra");
  const std::size_t n = a.dim();
  ThreeLieAlgebra sd = semidirect_product(sub_adjacent(a), dual_representation(left_mult(a)));
  std::vector<std::string> basis = a.basis();
  for (std::size_t i = 0; i < n; ++i) basis.push_back(a.basis()[i] + "*");
  ThreeLieAlgebra algebra =
      ThreeLieAlgebra::from_dense(sd.constants(), a.field(), std::move(basis));
  return PhaseSpace{std::move(algebra), canonical_phase_form(n), n};
}

PhaseSpaceVerdict check_phase_space(const ThreeLieAlgebra& g, const BilForm& omega,
                                    std::size_t half) {
  if (half == 0) half = g.dim() / 2;
  if (g.dim() == 0 || g.dim() % 2 != 0 || 2 * half != g.dim())
    throw std::invalid_argument("check_phase_space: no valid splitting of the dimension");
  if (omega.dim() != g.dim()) throw std::invalid_argument("check_phase_space: dimension mismatch");
  const std::size_t n = half;
  PhaseSpaceVerdict v;
  v.omega_canonical = omega.kind == FormKind::skew && omega.m == canonical_phase_form(n).m;
  v.omega_symplectic = check_symplectic(g, omega).ok();

  std::vector<Vec> primal, dual;
  for (std::size_t i = 0; i < n; ++i) primal.push_back(unit_vec(2 * n, i));
  for (std::size_t i = 0; i < n; ++i) dual.push_back(unit_vec(2 * n, n + i));
  Subspace h = Subspace::span(2 * n, primal);
  Subspace hstar = Subspace::span(2 * n, dual);
  v.primal_subalgebra = is_subalgebra(g, h);
  v.dual_subalgebra = is_subalgebra(g, hstar);
  v.is_phase_space =
      v.omega_canonical && v.omega_symplectic && v.primal_subalgebra && v.dual_subalgebra;

  v.perfect = true;
  for (std::size_t i = 0; i < n && v.perfect; ++i)
    for (std::size_t j = i + 1; j < n && v.perfect; ++j)
      for (std::size_t k = 0; k < n && v.perfect; ++k) {
        Vec b = g.bracket(i, j, n + k);  // [h, h, h*] must lie in h*
        for (std::size_t l = 0; l < n; ++l)
          if (!b[l].is_zero()) v.perfect = false;
      }
  for (std::size_t i = 0; i < n && v.perfect; ++i)
    for (std::size_t j = i + 1; j < n && v.perfect; ++j)
      for (std::size_t k = 0; k < n && v.perfect; ++k) {
        Vec b = g.bracket(n + i, n + j, k);  // [h*, h*, h] must lie in h
        for (std::size_t l = 0; l < n; ++l)
          if (!b[n + l].is_zero()) v.perfect = false;
      }
  return v;
}

Report check_manin_triple(const ThreePreLie& script_a, const BilForm& omega, std::size_t half,
                          std::size_t max_witnesses) {
  if (half == 0) half = script_a.dim() / 2;
  if (script_a.dim() == 0 || script_a.dim() % 2 != 0 || 2 * half != script_a.dim())
    throw std::invalid_argument("check_manin_triple: no valid splitting of the dimension");
  const std::size_t n = half, d = script_a.dim();
  ReportBuilder rb("Manin triple", max_witnesses);

  if (omega.kind != FormKind::skew || !omega.nondegenerate()) {
    rb.fail_note("quadratic", "omega is not skew nondegenerate");
  } else {
    rb.begin("quadratic");
    auto bracket_c = [&](std::size_t i, std::size_t j, std::size_t k) {
      return script_a.product(i, j, k) + script_a.product(j, k, i) + script_a.product(k, i, j);
    };
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) {
            Scalar lhs = omega.eval(script_a.product(i, j, k), unit_vec(d, l));
            Scalar rhs = -omega.eval(unit_vec(d, k), bracket_c(i, j, l));
            if (lhs != rhs) rb.violation({i, j, k, l}, to_string(lhs), to_string(rhs));
          }
    rb.end();
  }

  rb.begin("isotropic");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!omega.m.at(i, j).is_zero())
        rb.violation({i, j}, to_string(omega.m.at(i, j)), "0");
      if (!omega.m.at(n + i, n + j).is_zero())
        rb.violation({n + i, n + j}, to_string(omega.m.at(n + i, n + j)), "0");
    }
  rb.end();

  auto in_primal = [&](const Vec& v) {
    for (std::size_t l = 0; l < n; ++l)
      if (!v[n + l].is_zero()) return false;
    return true;
  };
  auto in_dual = [&](const Vec& v) {
    for (std::size_t l = 0; l < n; ++l)
      if (!v[l].is_zero()) return false;
    return true;
  };

  rb.begin("factor-subalgebras");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec p = script_a.product(i, j, k);
        if (!in_primal(p)) rb.violation({i, j, k}, to_string(p), "element of A");
        Vec q = script_a.product(n + i, n + j, n + k);
        if (!in_dual(q)) rb.violation({n + i, n + j, n + k}, to_string(q), "element of A'");
      }
  rb.end();

  rb.begin("mixed-closure");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a) {
        Vec v1 = script_a.product(i, j, n + a);  // {x,y,alpha} in A'
        if (!in_dual(v1)) rb.violation({i, j, n + a}, to_string(v1), "element of A'");
        Vec v2 = script_a.product(n + a, i, j);  // {alpha,x,y} in A'
        if (!in_dual(v2)) rb.violation({n + a, i, j}, to_string(v2), "element of A'");
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        Vec v3 = script_a.product(n + a, n + b, i);  // {alpha,beta,x} in A
        if (!in_primal(v3)) rb.violation({n + a, n + b, i}, to_string(v3), "element of A");
        Vec v4 = script_a.product(i, n + a, n + b);  // {x,alpha,beta} in A
        if (!in_primal(v4)) rb.violation({i, n + a, n + b}, to_string(v4), "element of A");
      }
  rb.end();
  return rb.take();
}

ManinAssembly manin_mixed_products(const ThreePreLie& a, const ThreePreLie& a_star) {
  if (a.dim() != a_star.dim())
    throw std::invalid_argument("manin_mixed_products: factor dimension mismatch");
  if (a.field() != a_star.field())
    throw std::invalid_argument("manin_mixed_products: scalar field mismatch");
  const std::size_t n = a.dim(), d = 2 * n;
  Tensor4 t(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          t.at(i, j, k, l) = a.constants().at(i, j, k, l);
          t.at(n + i, n + j, n + k, n + l) = a_star.constants().at(i, j, k, l);
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        // {x,y,alpha} = (L* - R*tau + R*)(x,y) alpha
        Matrix m1 = -a.left(i, j).transpose() + a.right(j, i).transpose() -
                    a.right(i, j).transpose();
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t l = 0; l < n; ++l) t.at(i, j, n + c, n + l) = m1.at(l, c);
        // {alpha,beta,x} = (L'* - R'*tau + R'*)(alpha,beta) x
        Matrix m3 = -a_star.left(i, j).transpose() + a_star.right(j, i).transpose() -
                    a_star.right(i, j).transpose();
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t l = 0; l < n; ++l) t.at(n + i, n + j, c, l) = m3.at(l, c);
      }
      // {alpha,x,y} = -R*(x,y) alpha = R(x,y)^T alpha, and its skew mirror
      Matrix r = a.right(i, j).transpose();
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t l = 0; l < n; ++l) {
          t.at(n + c, i, j, n + l) = r.at(l, c);
          t.at(i, n + c, j, n + l) = -r.at(l, c);
        }
      // {x,alpha,beta} = -R'*(alpha,beta) x = R'(alpha,beta)^T x, mirror too
      Matrix rs = a_star.right(i, j).transpose();
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t l = 0; l < n; ++l) {
          t.at(c, n + i, n + j, l) = rs.at(l, c);
          t.at(n + i, c, n + j, l) = -rs.at(l, c);
        }
    }
  std::vector<std::string> basis = a.basis();
  for (std::size_t i = 0; i < n; ++i) basis.push_back(a_star.basis()[i] + "'");
  ManinAssembly out;
  out.algebra = ThreePreLie::from_dense(std::move(t), a.field(), std::move(basis));
  out.prelie_axioms_pass = check_prelie_axioms(out.algebra).ok();

  // Expected sub-adjacent bracket of the assembled product: the double
  // bracket built from [.,.,.]_A, [.,.,.]_A' and the dual left
  // multiplications of both factors.
  ThreeLieAlgebra sa = sub_adjacent(out.algebra);
  ThreeLieAlgebra ca = sub_adjacent(a);
  ThreeLieAlgebra cs = sub_adjacent(a_star);
  Tensor4 expected(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          expected.at(i, j, k, l) = ca.constants().at(i, j, k, l);
          expected.at(n + i, n + j, n + k, n + l) = cs.constants().at(i, j, k, l);
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix lstar = -a.left(i, j).transpose();
      Matrix lsstar = -a_star.left(i, j).transpose();
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t l = 0; l < n; ++l) {
          // L*(x,y)gamma on patterns (x,y,gamma), (gamma,x,y), (y,gamma,x)
          expected.at(i, j, n + c, n + l) = lstar.at(l, c);
          expected.at(n + c, i, j, n + l) = lstar.at(l, c);
          expected.at(j, n + c, i, n + l) = lstar.at(l, c);
          // curly-L*(alpha,beta)z on patterns (alpha,beta,z), (z,alpha,beta), (beta,z,alpha)
          expected.at(n + i, n + j, c, l) = lsstar.at(l, c);
          expected.at(c, n + i, n + j, l) = lsstar.at(l, c);
          expected.at(n + j, c, n + i, l) = lsstar.at(l, c);
        }
    }
  out.subadjacent_matches = sa.constants() == expected;
  return out;
}

}  // namespace trilie
