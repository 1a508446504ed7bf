#include "divclass/semigroup.hpp"

#include <string>

#include "divclass/abelian.hpp"
#include "divclass/error.hpp"
#include "divclass/smith.hpp"

namespace divclass {
namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void validate(const ConeDescription& c) {
  if (c.interior_point && c.interior_point->size() != c.dim)
    throw InputError("interior point has wrong dimension");
  for (std::size_t i = 0; i < c.forms.size(); ++i) {
    const auto& f = c.forms[i];
    const std::string where = "form " + std::to_string(i);
    if (f.size() != c.dim) throw InputError(where + " has wrong dimension");
    const Integer g = gcd_of(f);
    if (g == 0) throw InputError(where + " is zero");
    if (g != 1) throw InputError(where + " is not primitive");
    if (c.interior_point && dot(f, *c.interior_point) <= 0)
      throw InputError(where + " is not positive on the interior point");
  }
}

IntVector normalize_form(const IntVector& v, const std::optional<IntVector>& interior) {
  const Integer g = gcd_of(v);
  if (g == 0) throw InputError("normalize_form: zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  if (interior) {
    if (interior->size() != v.size())
      throw InputError("normalize_form: interior point has wrong dimension");
    const Integer value = dot(out, *interior);
    if (value == 0) throw InputError("normalize_form: form vanishes on the interior point");
    if (value < 0)
      for (auto& x : out) x = -x;
  }
  return out;
}

ClassGroupReport cone_report(const ConeDescription& c) {
  validate(c);
  const std::size_t r = c.forms.size();
  const AbelianPresentation presentation(IntMatrix::from_rows(c.forms, c.dim));

  ClassGroupReport report;
  report.num_height_one_primes = r;
  report.group = structure(presentation);
  report.canonical.coords.assign(r, 1);
  report.torsion_number = torsion_number(presentation, report.canonical);
  report.gorenstein = is_zero_class(presentation, report.canonical);
  if (report.gorenstein != (report.torsion_number == 0))
    throw InvariantError("cone_report: Gorenstein test disagrees with torsion number");

  if (report.group.is_free()) {
    // U maps Z^r onto Z^rank(A) + Z^free with the relations landing in the
    // first block; the trailing coordinates of U * omega are its coordinates.
    const auto snf = smith_normal_form(presentation.relations());
    const IntVector image = snf.left * report.canonical.coords;
    report.canonical_in_basis = IntVector(image.begin() + static_cast<long>(snf.rank), image.end());
    report.basis = "smith";
  }
  return report;
}

ConeDescription veronese_cone(std::size_t n, std::size_t r) {
  if (n < 1 || r < 1) throw InputError("veronese_cone: need n >= 1 and r >= 1");
  ConeDescription c;
  c.dim = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector f(n);
    f[i] = 1;
    c.forms.push_back(std::move(f));
  }
  IntVector last(n, -1);
  last[n - 1] = static_cast<unsigned long>(r);
  // Degenerate n = 1: the cone is a ray and the form normalizes to (1).
  c.forms.push_back(normalize_form(last));

  IntVector interior(n, 1);
  interior[n - 1] = static_cast<unsigned long>(n);
  c.interior_point = std::move(interior);
  return c;
}

ConeDescription segre_veronese_cone(std::size_t m, std::size_t p, std::size_t n, std::size_t q) {
  if (m < 2 || n < 2) throw InputError("segre_veronese_cone: need m >= 2 and n >= 2");
  if (p < 1 || q < 1) throw InputError("segre_veronese_cone: need p >= 1 and q >= 1");
  const std::size_t dim = (m - 1) + (n - 1) + 1;
  const std::size_t t = dim - 1;
  ConeDescription c;
  c.dim = dim;
  for (std::size_t i = 0; i < t; ++i) {
    IntVector f(dim);
    f[i] = 1;
    c.forms.push_back(std::move(f));
  }
  IntVector x_side(dim), y_side(dim);
  for (std::size_t i = 0; i < m - 1; ++i) x_side[i] = -1;
  for (std::size_t j = 0; j < n - 1; ++j) y_side[m - 1 + j] = -1;
  x_side[t] = static_cast<unsigned long>(p);
  y_side[t] = static_cast<unsigned long>(q);
  c.forms.push_back(normalize_form(x_side));
  c.forms.push_back(normalize_form(y_side));

  IntVector interior(dim, 1);
  interior[t] = static_cast<unsigned long>(std::max(m, n));
  c.interior_point = std::move(interior);
  return c;
}

DeterminantalInvariants determinantal_invariants(std::size_t m, std::size_t n) {
  if (m < 1) throw InputError("determinantal_invariants: need m >= 1");
  if (m > n) throw InputError("determinantal_invariants: need m <= n");
  return {1, Integer(static_cast<unsigned long>(n - m))};
}

}  // namespace divclass
