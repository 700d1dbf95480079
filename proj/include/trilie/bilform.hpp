#pragma once

#include "trilie/matrix.hpp"

namespace trilie {

enum class FormKind { skew, symmetric };

/// Bilinear form with a declared (anti)symmetry, validated on construction.
struct BilForm {
  Matrix m;
  FormKind kind = FormKind::skew;

  BilForm() = default;
  BilForm(Matrix matrix, FormKind k);  ///< throws when the matrix does not match k

  std::size_t dim() const { return m.rows(); }
  Scalar eval(const Vec& x, const Vec& y) const;  ///< x^T m y
  bool nondegenerate() const;
};

/// The canonical pairing form on h + h* (basis: primal block then dual
/// block): omega(x+a, y+b) = <a,y> - <b,x>, i.e. the block matrix
/// [[0, -I], [I, 0]].
BilForm canonical_phase_form(std::size_t half);

}  // namespace trilie
