#pragma once

#include <cstddef>
#include <vector>

#include "divclass/int_matrix.hpp"
#include "divclass/poset.hpp"
#include "divclass/report.hpp"

namespace divclass {

/// Linear form on coordinates (z_0, ..., z_n) attached to one edge of P-hat.
struct SupportForm {
  IntVector coeffs;
  HasseEdge source_edge;
};

/// One form per edge, in edge order:
///   (v_i, top) -> z_i,  (v_i, v_j) -> z_i - z_j,  (bottom, v_j) -> z_0 - z_j,
/// and for the empty poset (bottom, top) -> z_0.
std::vector<SupportForm> support_forms(const BoundedPoset& b);

/// Rows are the forms, columns the coordinates z_0..z_n.
IntMatrix relation_matrix(const std::vector<SupportForm>& forms);

/// Spanning tree of the Hasse diagram of P-hat made of one upward edge per
/// non-top vertex.
struct SpanningTree {
  /// tree_edges[v] is the edge index chosen for vertex v (0 = bottom, then
  /// the elements); these are the rows e_0..e_n.
  std::vector<std::size_t> tree_edges;
  /// Remaining edge indices in edge order; their classes form the basis.
  std::vector<std::size_t> nontree_edges;
};

enum class TreeRule {
  smallest_target,  // default
  largest_target,
};

/// Picks for each non-top vertex the upward cover edge toward the smallest
/// (or largest) target, the top counting as largest. Throws InvariantError if
/// the result is not a triangular spanning tree.
SpanningTree choose_tree(const BoundedPoset& b, TreeRule rule = TreeRule::smallest_target);

/// Tree from an explicit choice of upward edge per non-top vertex. Throws
/// InputError if some chosen edge does not leave its vertex upward.
SpanningTree tree_from_upward_edges(const BoundedPoset& b, std::vector<std::size_t> choice);

/// Expressions of the tree-edge classes over the non-tree basis.
struct ClassExpression {
  /// coefficients[i][j]: coefficient of nontree edge j in [P_{e_i}], where
  /// e_i = tree_edges[i]. Always -1, 0 or 1.
  std::vector<std::vector<int>> coefficients;
  /// Canonical class sum over all edges, written in the non-tree basis.
  IntVector canonical_coords;
};

/// Fundamental-cycle rule: for nontree e_j = (x, y) walk the cycle x -> y,
/// then back to x through the tree; a tree edge (s, t) gets +1 when walked
/// s -> t and -1 when walked t -> s.
ClassExpression class_expressions(const BoundedPoset& b, const SpanningTree& t);

/// Substitutes the expressions into every column relation of the relation
/// matrix and checks that each vanishes identically.
bool verify_column_relations(const BoundedPoset& b, const SpanningTree& t,
                             const ClassExpression& expr);

/// Full class group report of the join-meet ring of P, cross-checked between
/// the spanning-tree computation and the Smith/Fitting computation.
ClassGroupReport joinmeet_report(const Poset& p);

}  // namespace divclass
