#include <doctest.h>

#include <random>

#include "divclass/error.hpp"
#include "divclass/int_matrix.hpp"
#include "oracles.hpp"

using namespace divclass;

TEST_CASE("matrix product and transpose") {
  const IntMatrix a{{1, 2}, {3, 4}, {5, 6}};
  const IntMatrix b{{1, 0, -1}, {2, 1, 0}};
  CHECK(a * b == IntMatrix{{5, 2, -1}, {11, 4, -3}, {17, 6, -5}});
  CHECK(a.transposed() == IntMatrix{{1, 3, 5}, {2, 4, 6}});
  CHECK(a * to_int_vector({1, -1}) == to_int_vector({-1, -1, -1}));
  CHECK_THROWS_AS(a * a, InputError);
}

TEST_CASE("zero-dimensional matrices are legal") {
  const IntMatrix empty_cols(3, 0);
  CHECK(empty_cols.rows() == 3);
  CHECK(empty_cols.is_zero());
  CHECK(empty_cols * IntVector{} == IntVector(3));
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(empty_cols.with_column(to_int_vector({1, 2, 3})) == IntMatrix{{1}, {2}, {3}});
}

TEST_CASE("entries do not overflow machine words") {
  IntMatrix m{{1}};
  m(0, 0) = Integer("123456789012345678901234567890");
  const IntMatrix sq = m * m;
  CHECK(sq(0, 0) == Integer("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::uniform_int_distribution<long> entry(-9, 9);
    const std::size_t n = dim(rng);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    CHECK(determinant(m) == oracle::laplace_determinant(m));
  }
}

TEST_CASE("gcd_of") {
  CHECK(gcd_of(to_int_vector({0, -6, 4})) == 2);
  CHECK(gcd_of(to_int_vector({0, 0})) == 0);
  CHECK(gcd_of(IntVector{}) == 0);
}
