#include "arq/exactla.hpp"
#include "doctest.h"

using namespace arq;

TEST_CASE("rref of the identity over F5") {
  Rref r = rref(FMatrix::identity(2, 5));
  CHECK(r.reduced.is_identity());
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.rank == 2);
}

TEST_CASE("rref of a rank one matrix over F5") {
  Rref r = rref(FMatrix::from_rows({{1, 2}, {2, 4}}, 5));
  CHECK(r.reduced == FMatrix::from_rows({{1, 2}, {0, 0}}, 5));
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.rank == 1);
}

TEST_CASE("rref of a swap over F7") {
  Rref r = rref(FMatrix::from_rows({{0, 1}, {1, 0}}, 7));
  CHECK(r.reduced.is_identity());
  CHECK(r.rank == 2);
}

TEST_CASE("solve_linear") {
  FMatrix b = FMatrix::from_rows({{3, 1}, {4, 0}}, 7);
  auto x = solve_linear(FMatrix::identity(2, 7), b);
  REQUIRE(x);
  CHECK(*x == b);

  auto free_var = solve_linear(FMatrix::from_rows({{1, 1}}, 3), FMatrix::from_rows({{0}}, 3));
  REQUIRE(free_var);
  CHECK(*free_var == FMatrix::from_rows({{0}, {0}}, 3));

  CHECK_FALSE(solve_linear(FMatrix::from_rows({{1, 0}, {0, 0}}), FMatrix::from_rows({{0}, {1}})));
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(FMatrix::identity(3)).cols() == 0);
  FMatrix z(2, 3);
  CHECK(kernel_basis(z).cols() == 3);
  CHECK(rank_of(kernel_basis(z)) == 3);
  FMatrix k = kernel_basis(FMatrix::from_rows({{1, 2}}, 5));
  REQUIRE(k.cols() == 1);
  // normalized so the free coordinate is 1
  CHECK(k == FMatrix::from_rows({{3}, {1}}, 5));
}

TEST_CASE("empty shapes are legal") {
  FMatrix a(0, 4);
  CHECK(rref(a).rank == 0);
  CHECK(kernel_basis(a).cols() == 4);
  FMatrix b(3, 0);
  CHECK(kernel_basis(b).cols() == 0);
  CHECK((FMatrix(2, 0) * FMatrix(0, 3)).is_zero());
}

TEST_CASE("field elements refuse mixed moduli") {
  FElem a(3, 5), b(3, 7);
  CHECK_THROWS_AS(a + b, Error);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(FElem(-1, 5).value() == 4);
}

TEST_CASE("mismatched matrix moduli throw") {
  CHECK_THROWS(FMatrix::identity(2, 5) + FMatrix::identity(2, 7));
}

TEST_CASE("inverse and charpoly") {
  FMatrix m = FMatrix::from_rows({{2, 1}, {1, 1}}, 11);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((m * *inv).is_identity());
  CHECK_FALSE(inverse(FMatrix::from_rows({{1, 2}, {2, 4}}, 11)));
  // x^2 - 3x + 1
  CHECK(charpoly(m) == std::vector<u32>{1, 8, 1});
  CHECK(is_nilpotent(FMatrix::from_rows({{0, 1}, {0, 0}}, 11)));
}
