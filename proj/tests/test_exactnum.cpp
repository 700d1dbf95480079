#include <doctest.h>

#include "support/fixtures.hpp"
#include "trilie/linalg.hpp"

using namespace trilie;
using trilie::testing::Rng;

namespace {

Matrix mat(std::size_t r, std::size_t c, const std::vector<std::vector<long>>& rows) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic and parsing") {
  Scalar a = parse_scalar("3/4");
  Scalar b = parse_scalar("-1/2");
  CHECK(to_string(a + b) == "1/4");
  CHECK(to_string(a * b) == "-3/8");
  CHECK(to_string(a / b) == "-3/2");

  Scalar z = parse_scalar("1/2-3i/4");
  CHECK(z.re == Rational(1, 2));
  CHECK(z.im == Rational(-3, 4));
  CHECK(to_string(z) == "1/2-3i/4");
  CHECK(to_string(z.conj()) == "1/2+3i/4");
  CHECK(parse_scalar(to_string(z)) == z);

  Scalar i = parse_scalar("i");
  CHECK(i * i == Scalar(-1));
  CHECK(to_string(parse_scalar("-i")) == "-i");
  CHECK(to_string(Scalar(0)) == "0");
  CHECK(parse_scalar("5") == Scalar(5));

  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("2x"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("solve_linear identity and diagonal cases") {
  Matrix id = Matrix::identity(2);
  Vec b = {Scalar(3), Scalar(1, 2)};
  auto x = solve_linear(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Matrix d = mat(2, 2, {{2, 0}, {0, 4}});
  auto y = solve_linear(d, {Scalar(1), Scalar(1)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == Scalar(1, 2));
  CHECK((*y)[1] == Scalar(1, 4));
}

TEST_CASE("solve_linear inconsistent system returns none") {
  Matrix a = mat(2, 2, {{1, 1}, {2, 2}});
  CHECK_FALSE(solve_linear(a, {Scalar(1), Scalar(3)}).has_value());
  // Consistent version pins the free variable to zero.
  auto x = solve_linear(a, {Scalar(1), Scalar(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(1));
  CHECK((*x)[1] == Scalar(0));
}

TEST_CASE("solve_linear respects A x = b on random systems") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 4;
    Matrix a = trilie::testing::random_matrix(rng, n, n);
    Vec b = trilie::testing::random_vec(rng, n);
    auto x = solve_linear(a, b);
    if (x) CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  CHECK(kernel_basis(Matrix::zero(3, 3)).size() == 3);

  // diag(1,1,-1,-1) - Id has the +1 eigenspace span{e1,e2} as kernel.
  Matrix e = trilie::testing::diag({1, 1, -1, -1});
  auto basis = kernel_basis(e - Matrix::identity(4));
  REQUIRE(basis.size() == 2);
  Subspace k = Subspace::span(4, basis);
  CHECK(k == Subspace::span(4, {unit_vec(4, 0), unit_vec(4, 1)}));

  // Kernel vectors satisfy A v = 0; kernel dim + rank = cols.
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a = trilie::testing::random_matrix(rng, 3, 4);
    auto kb = kernel_basis(a);
    for (const Vec& v : kb) CHECK(is_zero(a.apply(v)));
    CHECK(kb.size() + rank(a) == a.cols());
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(Matrix::identity(4)) == Scalar(1));
  CHECK(determinant(mat(2, 2, {{1, 1}, {1, 1}})) == Scalar(0));
  CHECK(determinant(trilie::testing::a4_omega(1).m) == Scalar(1));
  CHECK_THROWS_AS(determinant(Matrix::zero(2, 3)), std::invalid_argument);

  // Multiplicativity on random 3x3 rational matrices.
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix a = trilie::testing::random_matrix(rng, 3, 3);
    Matrix b = trilie::testing::random_matrix(rng, 3, 3);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("inverse") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = trilie::testing::random_invertible(rng, 4);
    CHECK(a * inverse(a) == Matrix::identity(4));
  }
  CHECK_THROWS_AS(inverse(mat(2, 2, {{1, 1}, {1, 1}})), std::domain_error);
}

TEST_CASE("is_positive_definite") {
  CHECK(is_positive_definite(Matrix::identity(3)));
  CHECK_FALSE(is_positive_definite(trilie::testing::diag({1, -1})));
  CHECK(is_positive_definite(mat(2, 2, {{2, 1}, {1, 2}})));  // minors 2, 3
  CHECK_THROWS_AS(is_positive_definite(mat(2, 2, {{1, 2}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("signature") {
  CHECK(signature(Matrix::identity(3)) == std::pair<int, int>(3, 0));
  CHECK(signature(trilie::testing::diag({1, -1, -1})) == std::pair<int, int>(1, 2));
  // Hyperbolic plane: x y pairing has signature (1, 1).
  CHECK(signature(mat(2, 2, {{0, 1}, {1, 0}})) == std::pair<int, int>(1, 1));
}
