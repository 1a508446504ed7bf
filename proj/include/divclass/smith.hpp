#pragma once

#include <cstddef>
#include <optional>

#include "divclass/int_matrix.hpp"

namespace divclass {

/// Smith normal form of an integer matrix together with the unimodular
/// transforms that produce it: `left * source * right == diagonal`.
///
/// The diagonal reads d_1, ..., d_rank, 0, ..., 0 with every d_i > 0 and
/// d_i dividing d_{i+1}.
struct SmithDecomposition {
  IntMatrix left;      // U, rows x rows
  IntMatrix diagonal;  // D, rows x cols
  IntMatrix right;     // V, cols x cols
  IntVector invariant_factors;
  std::size_t rank = 0;
};

/// Total and deterministic. Pivots on the entry of least absolute value in
/// the remaining block, ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Nonnegative generator of the ideal of k x k minors of `a`. k = 0 gives 1.
/// Throws InputError when k > min(rows, cols).
Integer minor_gcd(const IntMatrix& a, std::size_t k);

std::size_t rank(const IntMatrix& a);

/// Some integer solution of a * x = b, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

}  // namespace divclass
