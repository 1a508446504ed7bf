#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the Smith reduction, so agreement is an independent check.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "divclass/int_matrix.hpp"
#include "divclass/poset.hpp"

namespace oracle {

using divclass::IntMatrix;
using divclass::Integer;
using divclass::IntVector;

inline Integer laplace_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    Integer term = a(0, j) * laplace_determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

/// gcd of all k x k minors by explicit enumeration.
inline Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  Integer g = 0;
  for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
    const IntMatrix sub_rows = a.select_rows(rows);
    for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
      Integer det = laplace_determinant(sub_rows.select_cols(cols));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    });
  });
  return g;
}

/// Rank by fraction-free Gaussian elimination.
inline std::size_t rank(IntMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Integer f = a(i, c);
      const Integer piv = a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) * piv - f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// True iff some x with entries in [-bound, bound] solves a * x = b.
inline bool bounded_solution_exists(const IntMatrix& a, const IntVector& b, long bound) {
  IntVector x(a.cols(), -bound);
  if (a.cols() == 0) return std::all_of(b.begin(), b.end(), [](const Integer& v) { return v == 0; });
  for (;;) {
    if (a * x == b) return true;
    std::size_t i = 0;
    while (i < x.size() && x[i] == bound) x[i++] = -bound;
    if (i == x.size()) return false;
    x[i] += 1;
  }
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long max_abs) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-max_abs, max_abs);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

/// Cardinalities of all maximal chains, found as bottom-to-top paths in the
/// Hasse diagram.
inline std::vector<std::size_t> maximal_chain_cardinalities(const divclass::Poset& p) {
  std::vector<std::size_t> out;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v, std::size_t depth) {
    if (p.upper_covers(v).empty()) {
      out.push_back(depth);
      return;
    }
    for (std::size_t w : p.upper_covers(v)) walk(w, depth + 1);
  };
  for (std::size_t v = 0; v < p.size(); ++v)
    if (p.lower_covers(v).empty()) walk(v, 1);
  return out;
}

inline bool pure_by_enumeration(const divclass::Poset& p) {
  const auto sizes = maximal_chain_cardinalities(p);
  return std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end();
}

}  // namespace oracle
