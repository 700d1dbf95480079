#pragma once

#include <cstddef>
#include <vector>

#include "trilie/scalar.hpp"

namespace trilie {

/// Coordinate vector relative to a basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec conj(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);

/// Dense matrix; entry (i,j) is the coefficient of basis vector i in the
/// image of basis vector j, so matrices act on column vectors from the left.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  /// Column-major assembly from a list of column vectors.
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec apply(const Vec& v) const;  ///< matrix * column vector

  Matrix transpose() const;
  Matrix conj() const;
  bool is_symmetric() const;
  bool is_skew() const;
  bool all_real() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

std::string to_string(const Vec& v);
/// Row-list rendering used in violation witnesses.
std::string matrix_brief(const Matrix& m);

}  // namespace trilie
