#include <doctest.h>

#include "support/fixtures.hpp"
#include "trilie/reps.hpp"

using namespace trilie;
using namespace trilie::testing;

TEST_CASE("adjoint representations satisfy both defining identities") {
  CHECK(check_representation(adjoint_rep(a4())).ok());
  CHECK(check_representation(adjoint_rep(threedim())).ok());
  CHECK(check_representation(Representation::zero(a4(), 3)).ok());
}

TEST_CASE("dual representation") {
  Representation ad = adjoint_rep(a4());
  Representation dual = dual_representation(ad);
  CHECK(check_representation(dual).ok());

  // Double dual recovers the original maps.
  Representation dd = dual_representation(dual);
  for (std::size_t t = 0; t < ad.canonical_maps().size(); ++t)
    CHECK(dd.canonical_maps()[t] == ad.canonical_maps()[t]);

  Representation z = dual_representation(Representation::zero(threedim(), 2));
  for (const Matrix& m : z.canonical_maps()) CHECK(m == Matrix::zero(2, 2));
}

TEST_CASE("semidirect products") {
  ThreeLieAlgebra ab = semidirect_product(ThreeLieAlgebra::abelian(2),
                                          Representation::zero(ThreeLieAlgebra::abelian(2), 3));
  CHECK(ab.dim() == 5);
  CHECK(check_fundamental_identity(ab).ok());

  ThreeLieAlgebra big = semidirect_product(a4(), adjoint_rep(a4()));
  CHECK(big.dim() == 8);
  CHECK(check_fundamental_identity(big).ok());
}

TEST_CASE("corrupted rho fails both the representation check and FI") {
  ThreeLieAlgebra g = threedim();
  std::vector<Matrix> maps(pair_count(3), Matrix::zero(3, 3));
  maps[pair_index(0, 1, 3)] = Matrix::identity(3);
  Representation bad(g, 3, std::move(maps));
  CHECK_FALSE(check_representation(bad).ok());
  CHECK_FALSE(check_fundamental_identity(semidirect_product(g, bad)).ok());
}

TEST_CASE("semidirect FI holds iff the defining identities hold") {
  Rng rng(41);
  int valid_seen = 0, invalid_seen = 0;
  for (int trial = 0; trial < 220; ++trial) {
    ThreeLieAlgebra g = trial % 2 ? threedim() : change_basis(threedim(), random_invertible(rng, 3));
    std::size_t vdim = 2 + trial % 2;

    Representation r = [&] {
      switch (trial % 4) {
        case 0: {
          // Valid: adjoint (vdim = dim) or its dual.
          Representation ad = adjoint_rep(g);
          return trial % 8 ? ad : dual_representation(ad);
        }
        case 1: {
          // Random skew maps, usually invalid.
          std::vector<Matrix> maps;
          for (std::size_t t = 0; t < pair_count(g.dim()); ++t)
            maps.push_back(random_matrix(rng, vdim, vdim));
          return Representation(g, vdim, std::move(maps));
        }
        case 2:
          return Representation::zero(g, vdim);
        default: {
          // Adjoint with one perturbed map.
          Representation ad = adjoint_rep(g);
          std::vector<Matrix> maps = ad.canonical_maps();
          maps[trial % maps.size()] = maps[trial % maps.size()] + random_matrix(rng, 3, 3);
          return Representation(g, 3, std::move(maps));
        }
      }
    }();

    const bool rep_ok = check_representation(r).ok();
    const bool fi_ok = check_fundamental_identity(semidirect_product(g, r)).ok();
    CHECK(rep_ok == fi_ok);
    (rep_ok ? valid_seen : invalid_seen)++;
  }
  // The sample must exercise both directions of the equivalence.
  CHECK(valid_seen > 20);
  CHECK(invalid_seen > 20);
}

TEST_CASE("dual of a representation is always a representation") {
  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    ThreeLieAlgebra g = trial % 3 == 0 ? change_basis(a4(), random_invertible(rng, 4))
                                       : change_basis(threedim(), random_invertible(rng, 3));
    Representation ad = adjoint_rep(g);
    CHECK(check_representation(dual_representation(ad)).ok());
  }
}
