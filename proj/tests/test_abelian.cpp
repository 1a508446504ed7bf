#include <doctest.h>

#include <random>
#include <set>

#include "divclass/abelian.hpp"
#include "divclass/error.hpp"
#include "divclass/smith.hpp"
#include "oracles.hpp"

using namespace divclass;

namespace {

AbelianPresentation cyclic(long order) { return AbelianPresentation(IntMatrix{{order}}); }

ClassElement element(std::initializer_list<long> coords) { return {to_int_vector(coords)}; }

}  // namespace

TEST_CASE("structure") {
  const auto z6 = structure(cyclic(6));
  CHECK(z6.free_rank == 0);
  CHECK(z6.torsion_factors == to_int_vector({6}));

  // Z^2 / (2, 3) is Z.
  const auto coprime = structure(AbelianPresentation(IntMatrix{{2}, {3}}));
  CHECK(coprime.free_rank == 1);
  CHECK(coprime.is_free());

  const auto shared = structure(AbelianPresentation(IntMatrix{{2}, {2}}));
  CHECK(shared.free_rank == 1);
  CHECK(shared.torsion_factors == to_int_vector({2}));

  CHECK(structure(AbelianPresentation(3)).free_rank == 3);
}

TEST_CASE("fitting_number") {
  CHECK(fitting_number(cyclic(6), 0) == 6);
  CHECK(fitting_number(cyclic(6), 1) == 1);
  CHECK(fitting_number(AbelianPresentation(2), 1) == 0);
  CHECK(fitting_number(AbelianPresentation(2), 2) == 1);
  CHECK_THROWS_AS(fitting_number(cyclic(6), 2), InputError);
}

TEST_CASE("quotient_by") {
  const auto trivial = quotient_by(AbelianPresentation(1), element({1}));
  CHECK(structure(trivial) == GroupStructure{0, {}});

  // <4> in Z/6 is {0, 2, 4}; the quotient has order 6 / 3 = 2.
  std::set<long> subgroup;
  for (long k = 0; k < 6; ++k) subgroup.insert((4 * k) % 6);
  REQUIRE(subgroup.size() == 3);
  const auto z2 = structure(quotient_by(cyclic(6), element({4})));
  CHECK(z2.free_rank == 0);
  CHECK(z2.torsion_factors == to_int_vector({6 / static_cast<long>(subgroup.size())}));

  // Z^2 / (2, 3) modulo (4, 9): finite of order |det [[2, 4], [3, 9]]| = 6.
  const auto essen = structure(
      quotient_by(AbelianPresentation(IntMatrix{{2}, {3}}), element({4, 9})));
  CHECK(essen.free_rank == 0);
  CHECK(essen.torsion_factors == to_int_vector({6}));

  CHECK_THROWS_AS(quotient_by(cyclic(6), element({1, 2})), InputError);
}

TEST_CASE("is_zero_class") {
  CHECK(is_zero_class(cyclic(6), element({0})));
  CHECK_FALSE(is_zero_class(cyclic(6), element({4})));
  CHECK(is_zero_class(cyclic(6), element({-12})));
  CHECK(is_zero_class(AbelianPresentation(IntMatrix{{2}, {2}}), element({2, 2})));
  CHECK_THROWS_AS(is_zero_class(cyclic(6), element({})), InputError);
}

TEST_CASE("torsion_number") {
  CHECK(torsion_number(cyclic(6), element({4})) == 2);
  CHECK(torsion_number(AbelianPresentation(1), element({3})) == 3);
  CHECK(torsion_number(cyclic(6), element({0})) == 0);
  CHECK(torsion_number(AbelianPresentation(IntMatrix{{2}, {3}}), element({4, 9})) == 6);
  // Torsion canonical class: Z + Z/2 with omega the torsion generator.
  CHECK(torsion_number(AbelianPresentation(IntMatrix{{0}, {2}}), element({0, 1})) == 1);
  CHECK_THROWS_AS(torsion_number(cyclic(6), element({1, 1})), InputError);
}

TEST_CASE("torsion_number on free groups is the gcd of the coordinates") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<long> entry(-12, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng);
    ClassElement omega{IntVector(r)};
    for (auto& c : omega.coords) c = entry(rng);
    CHECK(torsion_number(AbelianPresentation(r), omega) == gcd_of(omega.coords));
  }
}

TEST_CASE("torsion number vanishes exactly on the zero class") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<std::size_t> rel(0, 6);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<int> coin(0, 2);
  int zero_cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t g = dim(rng);
    IntMatrix relations(g, rel(rng));
    for (std::size_t i = 0; i < relations.rows(); ++i)
      for (std::size_t j = 0; j < relations.cols(); ++j) relations(i, j) = entry(rng);
    const AbelianPresentation p(relations);
    ClassElement omega{IntVector(g)};
    if (coin(rng) == 0 && relations.cols() > 0) {
      // Force a zero class: an integer combination of the relations.
      IntVector x(relations.cols());
      for (auto& v : x) v = entry(rng);
      omega.coords = relations * x;
    } else {
      for (auto& c : omega.coords) c = entry(rng);
    }
    const Integer d = torsion_number(p, omega);
    const bool zero = is_zero_class(p, omega);
    CHECK((d == 0) == zero);
    if (zero) ++zero_cases;
  }
  CHECK(zero_cases > 0);
}

TEST_CASE("structure ignores relations already in the span") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix relations(dim(rng), dim(rng));
    for (std::size_t i = 0; i < relations.rows(); ++i)
      for (std::size_t j = 0; j < relations.cols(); ++j) relations(i, j) = entry(rng);
    IntVector x(relations.cols());
    for (auto& v : x) v = entry(rng);
    const AbelianPresentation p(relations);
    const AbelianPresentation extended(relations.with_column(relations * x));
    CHECK(structure(p) == structure(extended));
  }
}

TEST_CASE("the rank is the first index with a nonzero Fitting number") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix relations(dim(rng), dim(rng));
    for (std::size_t i = 0; i < relations.rows(); ++i)
      for (std::size_t j = 0; j < relations.cols(); ++j) relations(i, j) = entry(rng);
    const AbelianPresentation p(relations);
    const std::size_t r = structure(p).free_rank;
    for (std::size_t i = 0; i < r; ++i) CHECK(fitting_number(p, i) == 0);
    CHECK(fitting_number(p, r) != 0);
    // Fitt_i is contained in Fitt_{i+1}: the generators divide downward.
    for (std::size_t i = r; i < p.generators(); ++i)
      CHECK(fitting_number(p, i) % fitting_number(p, i + 1) == 0);
  }
}
