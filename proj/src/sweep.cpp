#include "divclass/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>

#include "divclass/abelian.hpp"
#include "divclass/error.hpp"
#include "divclass/joinmeet.hpp"
#include "divclass/poset.hpp"
#include "divclass/smith.hpp"

namespace divclass {
namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

Integer tree_torsion(const BoundedPoset& b, const SpanningTree& t) {
  return gcd_of(class_expressions(b, t).canonical_coords);
}

}  // namespace

PosetInput random_poset_input(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = below(rng, max_n + 1);
  const double density = 0.1 + 0.5 * unit_interval(rng);

  PosetInput in;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit_interval(rng) < density) in.relations.emplace_back(names[i], names[j]);

  in.elements = names;
  for (std::size_t i = n; i > 1; --i) std::swap(in.elements[i - 1], in.elements[below(rng, i)]);
  return in;
}

SweepSummary run_sweep(const SweepConfig& config) {
  if (config.count == 0) throw InputError("sweep: count must be at least 1");
  if (config.max_n > kMaxSweepElements)
    throw InputError("sweep: max-n must be at most " + std::to_string(kMaxSweepElements));

  SweepSummary summary;
  summary.config = config;
  summary.tallies = {{"gorenstein_iff_pure"},  {"tree_equals_fitting"}, {"rank_formula"},
                     {"unit_cycle_coefficients"}, {"column_relations"}, {"tree_independence"},
                     {"chain_divisibility"}};

  std::mt19937_64 rng(config.seed);
  for (std::size_t index = 0; index < config.count; ++index) {
    const PosetInput input = random_poset_input(rng, config.max_n);

    auto record = [&](std::size_t which, const std::function<bool(std::string&)>& check) {
      std::string detail;
      bool ok = false;
      try {
        ok = check(detail);
      } catch (const std::exception& e) {
        detail = e.what();
      }
      auto& tally = summary.tallies[which];
      if (ok) {
        ++tally.passed;
      } else {
        ++tally.failed;
        summary.failures.push_back({index, tally.name, detail, input});
      }
    };

    const Poset p = build_poset(input.elements, input.relations);
    const BoundedPoset b = bound(p);
    const IntMatrix a = relation_matrix(support_forms(b));
    const SpanningTree tree = choose_tree(b);
    const ClassExpression expr = class_expressions(b, tree);
    const Integer d = gcd_of(expr.canonical_coords);
    const bool pure = is_pure(p);

    record(0, [&](std::string& why) {
      why = "d = " + d.get_str() + ", pure = " + (pure ? "true" : "false");
      return (d == 0) == pure;
    });
    record(1, [&](std::string& why) {
      ClassElement omega{IntVector(b.edges.size(), 1)};
      const Integer fitting = torsion_number(AbelianPresentation(a), omega);
      why = "tree d = " + d.get_str() + ", Fitting d = " + fitting.get_str();
      return fitting == d;
    });
    record(2, [&](std::string& why) {
      const auto snf = smith_normal_form(a);
      const bool units = std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                                     [](const Integer& x) { return x == 1; });
      const std::size_t cokernel = a.rows() - snf.rank;
      why = "cokernel rank " + std::to_string(cokernel) + ", expected " +
            std::to_string(b.edges.size() - (p.size() + 1));
      return units && cokernel == b.edges.size() - (p.size() + 1);
    });
    record(3, [&](std::string&) {
      for (const auto& row : expr.coefficients)
        for (int c : row)
          if (c < -1 || c > 1) return false;
      return true;
    });
    record(4, [&](std::string&) { return verify_column_relations(b, tree, expr); });
    record(5, [&](std::string& why) {
      const Integer other = tree_torsion(b, choose_tree(b, TreeRule::largest_target));
      why = "smallest-target d = " + d.get_str() + ", largest-target d = " + other.get_str();
      return other == d;
    });
    if (auto pair = disjoint_maximal_chain_pair(p)) {
      ++summary.chain_pairs_found;
      record(6, [&](std::string& why) {
        const long gap = std::labs(static_cast<long>(pair->first_length()) -
                                   static_cast<long>(pair->second_length()));
        why = "d = " + d.get_str() + ", |a - b| = " + std::to_string(gap);
        if (d == 0) return gap == 0;
        return Integer(gap) % d == 0;
      });
    }
  }
  return summary;
}

}  // namespace divclass
