#include "trilie/bilform.hpp"

#include <stdexcept>

#include "trilie/linalg.hpp"

namespace trilie {

BilForm::BilForm(Matrix matrix, FormKind k) : m(std::move(matrix)), kind(k) {
  if (!m.is_square()) throw std::invalid_argument("bilinear form matrix must be square");
  if (kind == FormKind::skew && !m.is_skew())
    throw std::invalid_argument("form declared skew but matrix is not skew-symmetric");
  if (kind == FormKind::symmetric && !m.is_symmetric())
    throw std::invalid_argument("form declared symmetric but matrix is not symmetric");
}

Scalar BilForm::eval(const Vec& x, const Vec& y) const {
  Vec my = m.apply(y);
  Scalar out(0);
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * my[i];
  return out;
}

bool BilForm::nondegenerate() const { return !determinant(m).is_zero(); }

BilForm canonical_phase_form(std::size_t half) {
  Matrix m(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    m.at(i, half + i) = Scalar(-1);
    m.at(half + i, i) = Scalar(1);
  }
  return BilForm(std::move(m), FormKind::skew);
}

}  // namespace trilie
