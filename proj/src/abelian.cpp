#include "divclass/abelian.hpp"

#include <algorithm>

#include "divclass/error.hpp"
#include "divclass/smith.hpp"

namespace divclass {
namespace {

void require_length(const AbelianPresentation& p, const ClassElement& e, const char* what) {
  if (e.coords.size() != p.generators())
    throw InputError(std::string(what) + ": element length does not match generator count");
}

}  // namespace

AbelianPresentation::AbelianPresentation(std::size_t generators)
    : relations_(generators, 0) {}

AbelianPresentation::AbelianPresentation(IntMatrix relations)
    : relations_(std::move(relations)) {}

GroupStructure structure(const AbelianPresentation& p) {
  const auto snf = smith_normal_form(p.relations());
  GroupStructure g;
  g.free_rank = p.generators() - snf.rank;
  for (const auto& d : snf.invariant_factors)
    if (d > 1) g.torsion_factors.push_back(d);
  return g;
}

Integer fitting_number(const AbelianPresentation& p, std::size_t i) {
  const std::size_t g = p.generators();
  if (i > g) throw InputError("fitting_number: index exceeds generator count");
  const std::size_t k = g - i;
  // No k x k minors exist when there are fewer than k relations.
  if (k > p.relations().cols()) return k == 0 ? Integer(1) : Integer(0);
  return minor_gcd(p.relations(), k);
}

AbelianPresentation quotient_by(const AbelianPresentation& p, const ClassElement& e) {
  require_length(p, e, "quotient_by");
  return AbelianPresentation(p.relations().with_column(e.coords));
}

bool is_zero_class(const AbelianPresentation& p, const ClassElement& e) {
  require_length(p, e, "is_zero_class");
  return solve_integer(p.relations(), e.coords).has_value();
}

Integer torsion_number(const AbelianPresentation& p, const ClassElement& omega) {
  require_length(p, omega, "torsion_number");
  const auto reduced = quotient_by(p, omega);
  const std::size_t r = structure(reduced).free_rank;
  const Integer full = fitting_number(p, r);
  const Integer quotient = fitting_number(reduced, r);
  Integer d = full == quotient ? Integer(0) : quotient;

  if ((d == 0) != is_zero_class(p, omega))
    throw InvariantError("torsion_number: Fitting comparison disagrees with zero-class test");
  return d;
}

}  // namespace divclass
