#include "trilie/search.hpp"

#include <stdexcept>

namespace trilie {

namespace {

// Involutive signed permutations: fixed points carry +-1, swapped pairs
// carry one sign used in both directions. Deterministic order: at the
// smallest free index, fixed(+), fixed(-), then partners ascending, each
// with +, -.
void involutions(std::size_t n, std::vector<int>& perm, std::vector<int>& sign, std::size_t at,
                 std::vector<Matrix>& out) {
  while (at < n && perm[at] >= 0) ++at;
  if (at == n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.at(static_cast<std::size_t>(perm[i]), i) = Scalar(sign[i]);
    out.push_back(std::move(m));
    return;
  }
  for (int s : {1, -1}) {
    perm[at] = static_cast<int>(at);
    sign[at] = s;
    involutions(n, perm, sign, at + 1, out);
    perm[at] = -1;
  }
  for (std::size_t j = at + 1; j < n; ++j) {
    if (perm[j] >= 0) continue;
    for (int s : {1, -1}) {
      perm[at] = static_cast<int>(j);
      perm[j] = static_cast<int>(at);
      sign[at] = s;
      sign[j] = s;
      involutions(n, perm, sign, at + 1, out);
      perm[at] = -1;
      perm[j] = -1;
    }
  }
}

// Anti-involutive signed matchings: every index is paired, J e_i = s e_j and
// J e_j = -s e_i.
void matchings(std::size_t n, std::vector<int>& perm, std::vector<int>& sign, std::vector<Matrix>& out) {
  std::size_t at = 0;
  while (at < n && perm[at] >= 0) ++at;
  if (at == n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.at(static_cast<std::size_t>(perm[i]), i) = Scalar(sign[i]);
    out.push_back(std::move(m));
    return;
  }
  for (std::size_t j = at + 1; j < n; ++j) {
    if (perm[j] >= 0) continue;
    for (int s : {1, -1}) {
      perm[at] = static_cast<int>(j);
      perm[j] = static_cast<int>(at);
      sign[at] = s;   // J e_at = s e_j
      sign[j] = -s;   // J e_j = -s e_at
      matchings(n, perm, sign, out);
      perm[at] = -1;
      perm[j] = -1;
    }
  }
}

}  // namespace

std::vector<std::pair<Matrix, ProductClass>> enumerate_products(const ThreeLieAlgebra& g,
                                                                const CandidateFamily& family) {
  if (family.constraint != CandidateFamily::Constraint::square_is_identity)
    throw std::invalid_argument("enumerate_products: family must constrain E^2 = Id");
  const std::size_t n = g.dim();
  std::vector<Matrix> candidates;
  switch (family.kind) {
    case CandidateFamily::Kind::diagonal_signs: {
      if (n > kDiagonalFamilyMaxDim)
        throw std::invalid_argument("enumerate_products: dimension exceeds the diagonal family cap");
      // Lexicographic over sign vectors, bit set means -1.
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
          m.at(i, i) = (mask >> i) & 1 ? Scalar(-1) : Scalar(1);
        candidates.push_back(std::move(m));
      }
      break;
    }
    case CandidateFamily::Kind::signed_permutations: {
      if (n > kSignedPermutationFamilyMaxDim)
        throw std::invalid_argument(
            "enumerate_products: dimension exceeds the signed-permutation family cap");
      std::vector<int> perm(n, -1), sign(n, 0);
      involutions(n, perm, sign, 0, candidates);
      break;
    }
    case CandidateFamily::Kind::explicit_list:
      candidates = family.explicit_candidates;
      break;
  }
  std::vector<std::pair<Matrix, ProductClass>> out;
  Matrix id = Matrix::identity(n);
  for (Matrix& m : candidates) {
    if (m * m != id) {
      if (family.kind == CandidateFamily::Kind::explicit_list)
        throw std::invalid_argument("enumerate_products: explicit candidate violates E^2 = Id");
      continue;
    }
    if (m == id || m == -id) continue;
    ProductClass pc = classify_product(g, m);
    out.emplace_back(std::move(m), std::move(pc));
  }
  return out;
}

std::vector<std::pair<Matrix, ComplexClass>> enumerate_complex(const ThreeLieAlgebra& g,
                                                               const CandidateFamily& family) {
  if (family.constraint != CandidateFamily::Constraint::square_is_minus_identity)
    throw std::invalid_argument("enumerate_complex: family must constrain J^2 = -Id");
  const std::size_t n = g.dim();
  if (n % 2 != 0) throw std::invalid_argument("enumerate_complex: odd dimension");
  std::vector<Matrix> candidates;
  switch (family.kind) {
    case CandidateFamily::Kind::diagonal_signs:
      throw std::invalid_argument("enumerate_complex: no real diagonal satisfies J^2 = -Id");
    case CandidateFamily::Kind::signed_permutations: {
      if (n > kSignedPermutationFamilyMaxDim)
        throw std::invalid_argument(
            "enumerate_complex: dimension exceeds the signed-permutation family cap");
      std::vector<int> perm(n, -1), sign(n, 0);
      matchings(n, perm, sign, candidates);
      break;
    }
    case CandidateFamily::Kind::explicit_list:
      candidates = family.explicit_candidates;
      break;
  }
  std::vector<std::pair<Matrix, ComplexClass>> out;
  Matrix minus_id = -Matrix::identity(n);
  for (Matrix& m : candidates) {
    if (m * m != minus_id) {
      if (family.kind == CandidateFamily::Kind::explicit_list)
        throw std::invalid_argument("enumerate_complex: explicit candidate violates J^2 = -Id");
      continue;
    }
    ComplexClass cc = classify_complex(g, m);
    out.emplace_back(std::move(m), std::move(cc));
  }
  return out;
}

PairReport pair_search(const ThreeLieAlgebra& g, const std::vector<Matrix>& products,
                       const std::vector<Matrix>& complexes,
                       const std::vector<BilForm>& omegas) {
  PairReport report;
  for (std::size_t ji = 0; ji < complexes.size(); ++ji)
    for (std::size_t ei = 0; ei < products.size(); ++ei) {
      const Matrix& j = complexes[ji];
      const Matrix& e = products[ei];
      if (j * e != -(e * j)) continue;
      if (check_complex_product(g, j, e).complex_product) report.complex_product.emplace_back(ji, ei);
    }
  for (std::size_t oi = 0; oi < omegas.size(); ++oi) {
    for (std::size_t ei = 0; ei < products.size(); ++ei)
      if (check_para_kaehler(g, omegas[oi], products[ei]).para_kaehler)
        report.para_kaehler.emplace_back(oi, ei);
    for (std::size_t ji = 0; ji < complexes.size(); ++ji)
      if (check_pseudo_kaehler(g, omegas[oi], complexes[ji]).pseudo_kaehler)
        report.pseudo_kaehler.emplace_back(oi, ji);
  }
  return report;
}

}  // namespace trilie
