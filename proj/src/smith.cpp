#include "divclass/smith.hpp"

#include <algorithm>

#include "divclass/error.hpp"

namespace divclass {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Least |entry| in the block [t.., t..]; row-major scan keeps ties at the
// lowest (row, col).
std::optional<Position> smallest_nonzero(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Integer& e = d(i, j);
      if (e == 0) continue;
      Integer a = abs(e);
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

// Clears row t and column t beyond the pivot by truncated division. Returns
// true when every off-pivot entry in that row and column became zero.
bool reduce_cross(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t t) {
  bool clean = true;
  Integer q;
  for (std::size_t i = t + 1; i < d.rows(); ++i) {
    if (d(i, t) == 0) continue;
    mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
    Integer neg = -q;
    d.add_row_multiple(i, t, neg);
    u.add_row_multiple(i, t, neg);
    if (d(i, t) != 0) clean = false;
  }
  for (std::size_t j = t + 1; j < d.cols(); ++j) {
    if (d(t, j) == 0) continue;
    mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
    Integer neg = -q;
    d.add_col_multiple(j, t, neg);
    v.add_col_multiple(j, t, neg);
    if (d(t, j) != 0) clean = false;
  }
  return clean;
}

// Row index of some entry in the trailing block not divisible by the pivot.
std::optional<std::size_t> indivisible_row(const IntMatrix& d, std::size_t t) {
  for (std::size_t i = t + 1; i < d.rows(); ++i)
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) return i;
  return std::nullopt;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t limit = std::min(a.rows(), a.cols());

  std::size_t t = 0;
  for (; t < limit; ++t) {
    if (!smallest_nonzero(d, t)) break;
    for (;;) {
      auto pivot = smallest_nonzero(d, t);
      d.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);
      if (!reduce_cross(d, u, v, t)) continue;
      if (auto i = indivisible_row(d, t)) {
        d.add_row_multiple(t, *i, 1);
        u.add_row_multiple(t, *i, 1);
        continue;
      }
      break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out;
  out.rank = t;
  out.invariant_factors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(d(i, i));
  out.left = std::move(u);
  out.diagonal = std::move(d);
  out.right = std::move(v);
  return out;
}

Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  if (k > std::min(a.rows(), a.cols()))
    throw InputError("minor_gcd: minor size exceeds matrix dimensions");
  if (k == 0) return 1;
  const auto snf = smith_normal_form(a);
  if (k > snf.rank) return 0;
  Integer product = 1;
  for (std::size_t i = 0; i < k; ++i) product *= snf.invariant_factors[i];
  return product;
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw InputError("solve_integer: right-hand side length mismatch");
  // U A V = D, so A x = b  <=>  D y = U b  with  x = V y.
  const auto snf = smith_normal_form(a);
  const IntVector ub = snf.left * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < snf.rank) {
      const Integer& di = snf.invariant_factors[i];
      if (!mpz_divisible_p(ub[i].get_mpz_t(), di.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), di.get_mpz_t());
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right * y;
}

}  // namespace divclass
