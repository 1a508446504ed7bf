#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "divclass/abelian.hpp"

namespace divclass {

/// Class group data of a normal affine semigroup ring.
///
/// `canonical` is the canonical class over the height-one primes (the
/// all-ones vector). `canonical_in_basis` is present when the group is free
/// and gives the canonical class in the basis named by `basis`.
struct ClassGroupReport {
  std::size_t num_height_one_primes = 0;
  GroupStructure group;
  ClassElement canonical;
  std::optional<IntVector> canonical_in_basis;
  std::string basis;
  Integer torsion_number;
  bool gorenstein = false;
  std::optional<bool> pure;  // poset mode only
};

}  // namespace divclass
