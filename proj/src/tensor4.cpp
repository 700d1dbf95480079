#include "trilie/tensor4.hpp"

namespace trilie {

std::vector<Scalar> Tensor4::value(std::size_t i, std::size_t j, std::size_t k) const {
  std::vector<Scalar> v(dim_);
  const std::size_t base = ((i * dim_ + j) * dim_ + k) * dim_;
  for (std::size_t l = 0; l < dim_; ++l) v[l] = a_[base + l];
  return v;
}

bool Tensor4::all_real() const {
  for (const Scalar& s : a_)
    if (!s.is_real()) return false;
  return true;
}

}  // namespace trilie
