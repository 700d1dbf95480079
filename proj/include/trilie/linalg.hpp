#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trilie/matrix.hpp"

namespace trilie {

/// Exact solve by fraction-free (Bareiss) elimination on the augmented
/// matrix. Returns nullopt for inconsistent systems; consistent
/// underdetermined systems get their free variables pinned to zero.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);

/// Exact basis of the null space; empty when the map is injective.
std::vector<Vec> kernel_basis(const Matrix& a);

/// Exact determinant, Bareiss fraction-free elimination. Throws on
/// non-square input.
Scalar determinant(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Reduced row echelon form (exact Gauss-Jordan).
Matrix rref(const Matrix& a);

Matrix inverse(const Matrix& a);  ///< throws std::domain_error when singular

/// Sylvester criterion on an exactly symmetric rational matrix: true iff
/// every leading principal minor is strictly positive. Throws on
/// non-symmetric or non-rational entries.
bool is_positive_definite(const Matrix& s);

/// Signature (#positive, #negative pivots) of a symmetric rational matrix,
/// computed by exact congruence diagonalization.
std::pair<int, int> signature(const Matrix& s);

}  // namespace trilie
