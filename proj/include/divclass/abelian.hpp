#pragma once

#include <cstddef>

#include "divclass/int_matrix.hpp"

namespace divclass {

/// A finitely generated abelian group Z^g / (column span of `relations`).
class AbelianPresentation {
 public:
  /// Free group on `generators` generators (no relations).
  explicit AbelianPresentation(std::size_t generators);
  /// `relations` has one row per generator and one column per relation.
  explicit AbelianPresentation(IntMatrix relations);

  std::size_t generators() const { return relations_.rows(); }
  const IntMatrix& relations() const { return relations_; }

 private:
  IntMatrix relations_;
};

struct GroupStructure {
  std::size_t free_rank = 0;
  IntVector torsion_factors;  // each > 1, each divides the next

  bool is_free() const { return torsion_factors.empty(); }
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Element of a presented group, as coefficients over its generators.
struct ClassElement {
  IntVector coords;
};

GroupStructure structure(const AbelianPresentation& p);

/// Nonnegative generator of the i-th Fitting ideal, i.e. of the ideal of
/// (g - i)-minors of the relation matrix.
Integer fitting_number(const AbelianPresentation& p, std::size_t i);

/// Presentation of the quotient of `p` by the cyclic subgroup generated by `e`.
AbelianPresentation quotient_by(const AbelianPresentation& p, const ClassElement& e);

bool is_zero_class(const AbelianPresentation& p, const ClassElement& e);

/// Torsion number of `omega` in the presented group.
///
/// With r the rank of G / Z*omega: 0 when Fitt_r(G) and Fitt_r(G / Z*omega)
/// agree, otherwise the generator of Fitt_r(G / Z*omega). Throws
/// InvariantError if the answer is inconsistent with `is_zero_class`.
Integer torsion_number(const AbelianPresentation& p, const ClassElement& omega);

}  // namespace divclass
