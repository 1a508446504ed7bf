#include <doctest.h>

#include "divclass/error.hpp"
#include "divclass/sweep.hpp"

using namespace divclass;

TEST_CASE("sweep passes on seeded random posets") {
  const auto summary = run_sweep({200, 7, 42});
  CHECK(summary.all_passed());
  for (const auto& t : summary.tallies) {
    CHECK(t.failed == 0);
    if (t.name != "chain_divisibility") CHECK(t.passed == 200);
  }
  CHECK(summary.chain_pairs_found > 0);
  CHECK(summary.tallies.back().passed == summary.chain_pairs_found);
}

TEST_CASE("sweep handles the empty poset") {
  const auto summary = run_sweep({1, 0, 0});
  CHECK(summary.all_passed());
}

TEST_CASE("sweep is reproducible") {
  const auto a = run_sweep({50, 5, 7});
  const auto b = run_sweep({50, 5, 7});
  CHECK(a.chain_pairs_found == b.chain_pairs_found);
  for (std::size_t i = 0; i < a.tallies.size(); ++i) CHECK(a.tallies[i].passed == b.tallies[i].passed);

  std::mt19937_64 r1(99), r2(99);
  for (int i = 0; i < 20; ++i) {
    const auto p1 = random_poset_input(r1, 8);
    const auto p2 = random_poset_input(r2, 8);
    CHECK(p1.elements == p2.elements);
    CHECK(p1.relations == p2.relations);
  }
}

TEST_CASE("sweep rejects bad configuration") {
  CHECK_THROWS_AS(run_sweep({0, 5, 1}), InputError);
  CHECK_THROWS_AS(run_sweep({10, kMaxSweepElements + 1, 1}), InputError);
}
