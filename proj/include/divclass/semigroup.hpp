#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "divclass/int_matrix.hpp"
#include "divclass/report.hpp"

namespace divclass {

/// Positive rational cone given by its support forms, one per facet.
///
/// Every form is nonzero and primitive; when an interior point is supplied
/// every form is positive on it. The form list is trusted to be exactly the
/// facets of the cone.
struct ConeDescription {
  std::size_t dim = 0;
  std::vector<IntVector> forms;
  std::optional<IntVector> interior_point;
};

/// Throws InputError if `c` violates the ConeDescription invariants.
void validate(const ConeDescription& c);

/// Divides by the gcd of the entries and, given an interior point, orients
/// the form to be positive there. Throws InputError for the zero vector or a
/// form vanishing on the interior point.
IntVector normalize_form(const IntVector& v, const std::optional<IntVector>& interior = {});

/// Class group, canonical class and torsion number from the relation matrix
/// whose rows are the support forms.
ClassGroupReport cone_report(const ConeDescription& c);

/// Cone of the r-th Veronese subring of a polynomial ring in n variables:
/// x_i >= 0 for i < n and -(x_1 + ... + x_{n-1}) + r t >= 0.
ConeDescription veronese_cone(std::size_t n, std::size_t r);

/// Cone of the Segre product of the p-th Veronese of K[x_1..x_m] with the
/// q-th Veronese of K[y_1..y_n], on coordinates (x_1..x_{m-1}, y_1..y_{n-1}, t).
/// Requires m, n >= 2 and p, q >= 1.
ConeDescription segre_veronese_cone(std::size_t m, std::size_t p, std::size_t n, std::size_t q);

struct DeterminantalInvariants {
  std::size_t rank = 1;
  Integer torsion_number;
};

/// K[X]/I_{t+1}(X) for an m x n matrix of indeterminates, m <= n: the class
/// group is Z[P] and the canonical class is (n - m)[P].
DeterminantalInvariants determinantal_invariants(std::size_t m, std::size_t n);

}  // namespace divclass
