#include "divclass/joinmeet.hpp"

#include <algorithm>

#include "divclass/abelian.hpp"
#include "divclass/error.hpp"
#include "divclass/smith.hpp"

namespace divclass {
namespace {

// Tree rows ordered by vertex must form an upper unitriangular block.
bool is_unitriangular(const BoundedPoset& b, const SpanningTree& t) {
  const IntMatrix a = relation_matrix(support_forms(b));
  const IntMatrix block = a.select_rows(t.tree_edges);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (block(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

SpanningTree complete_tree(const BoundedPoset& b, std::vector<std::size_t> choice) {
  SpanningTree t;
  std::vector<char> used(b.edges.size(), 0);
  for (std::size_t e : choice) used[e] = 1;
  for (std::size_t e = 0; e < b.edges.size(); ++e)
    if (!used[e]) t.nontree_edges.push_back(e);
  t.tree_edges = std::move(choice);
  return t;
}

}  // namespace

std::vector<SupportForm> support_forms(const BoundedPoset& b) {
  const std::size_t n = b.element_count();
  std::vector<SupportForm> forms;
  forms.reserve(b.edges.size());
  for (const auto& e : b.edges) {
    IntVector c(n + 1);
    if (e.lower == b.bottom() && e.upper == b.top()) {
      c[0] = 1;
    } else if (e.upper == b.top()) {
      c[e.lower] = 1;
    } else if (e.lower == b.bottom()) {
      c[0] = 1;
      c[e.upper] = -1;
    } else {
      c[e.lower] = 1;
      c[e.upper] = -1;
    }
    forms.push_back({std::move(c), e});
  }
  return forms;
}

IntMatrix relation_matrix(const std::vector<SupportForm>& forms) {
  const std::size_t cols = forms.empty() ? 0 : forms.front().coeffs.size();
  IntMatrix a(forms.size(), cols);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].coeffs.size() != cols) throw InputError("relation_matrix: ragged forms");
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = forms[i].coeffs[j];
  }
  return a;
}

SpanningTree choose_tree(const BoundedPoset& b, TreeRule rule) {
  const std::size_t n = b.element_count();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> choice(n + 1, none);
  for (std::size_t e = 0; e < b.edges.size(); ++e) {
    const auto& edge = b.edges[e];
    std::size_t& slot = choice[edge.lower];
    if (slot == none) {
      slot = e;
      continue;
    }
    const std::size_t current = b.edges[slot].upper;
    if (rule == TreeRule::smallest_target ? edge.upper < current : edge.upper > current)
      slot = e;
  }
  if (std::find(choice.begin(), choice.end(), none) != choice.end())
    throw InvariantError("choose_tree: some vertex has no upward cover edge");

  SpanningTree t = complete_tree(b, std::move(choice));
  if (!is_unitriangular(b, t))
    throw InvariantError("choose_tree: tree rows are not upper unitriangular");
  return t;
}

SpanningTree tree_from_upward_edges(const BoundedPoset& b, std::vector<std::size_t> choice) {
  const std::size_t n = b.element_count();
  if (choice.size() != n + 1)
    throw InputError("tree_from_upward_edges: need one edge per non-top vertex");
  for (std::size_t v = 0; v <= n; ++v)
    if (choice[v] >= b.edges.size() || b.edges[choice[v]].lower != v)
      throw InputError("tree_from_upward_edges: edge does not leave its vertex upward");

  SpanningTree t = complete_tree(b, std::move(choice));
  if (!is_unitriangular(b, t))
    throw InvariantError("tree_from_upward_edges: tree rows are not upper unitriangular");
  return t;
}

ClassExpression class_expressions(const BoundedPoset& b, const SpanningTree& t) {
  const std::size_t n = b.element_count();
  const std::size_t top = b.top();
  std::vector<std::size_t> parent(n + 1);
  for (std::size_t v = 0; v <= n; ++v) parent[v] = b.edges[t.tree_edges[v]].upper;

  ClassExpression out;
  out.coefficients.assign(n + 1, std::vector<int>(t.nontree_edges.size(), 0));
  out.canonical_coords.assign(t.nontree_edges.size(), 0);

  std::vector<char> above_y(b.vertex_count());
  for (std::size_t j = 0; j < t.nontree_edges.size(); ++j) {
    const auto [x, y] = b.edges[t.nontree_edges[j]];
    std::fill(above_y.begin(), above_y.end(), 0);
    for (std::size_t v = y;; v = parent[v]) {
      above_y[v] = 1;
      if (v == top) break;
    }
    // Tree path y -> x: up from y to the meeting vertex, then down to x.
    std::size_t meet = x;
    while (!above_y[meet]) {
      out.coefficients[meet][j] = -1;
      meet = parent[meet];
    }
    for (std::size_t v = y; v != meet; v = parent[v]) out.coefficients[v][j] = 1;

    long q = 1;
    for (std::size_t i = 0; i <= n; ++i) q += out.coefficients[i][j];
    out.canonical_coords[j] = q;
  }
  return out;
}

bool verify_column_relations(const BoundedPoset& b, const SpanningTree& t,
                             const ClassExpression& expr) {
  const std::size_t basis = t.nontree_edges.size();
  std::vector<std::vector<long>> value(b.edges.size(), std::vector<long>(basis, 0));
  for (std::size_t v = 0; v < t.tree_edges.size(); ++v)
    for (std::size_t j = 0; j < basis; ++j) value[t.tree_edges[v]][j] = expr.coefficients[v][j];
  for (std::size_t j = 0; j < basis; ++j) value[t.nontree_edges[j]][j] = 1;

  const IntMatrix a = relation_matrix(support_forms(b));
  for (std::size_t col = 0; col < a.cols(); ++col)
    for (std::size_t j = 0; j < basis; ++j) {
      long sum = 0;
      for (std::size_t e = 0; e < a.rows(); ++e) sum += a(e, col).get_si() * value[e][j];
      if (sum != 0) return false;
    }
  return true;
}

ClassGroupReport joinmeet_report(const Poset& p) {
  const BoundedPoset b = bound(p);
  const std::size_t n = p.size();
  const IntMatrix a = relation_matrix(support_forms(b));

  const auto snf = smith_normal_form(a);
  const bool unimodular_factors = std::all_of(snf.invariant_factors.begin(),
                                              snf.invariant_factors.end(),
                                              [](const Integer& d) { return d == 1; });
  if (snf.rank != n + 1 || !unimodular_factors)
    throw InvariantError("joinmeet_report: class group is not free of the expected rank");

  const AbelianPresentation presentation(a);
  const SpanningTree tree = choose_tree(b);
  const ClassExpression expr = class_expressions(b, tree);
  if (!verify_column_relations(b, tree, expr))
    throw InvariantError("joinmeet_report: cycle expressions violate a column relation");

  ClassGroupReport report;
  report.num_height_one_primes = b.edges.size();
  report.group = structure(presentation);
  if (report.group.free_rank != b.edges.size() - (n + 1))
    throw InvariantError("joinmeet_report: rank differs from |E| - (n + 1)");
  report.canonical.coords.assign(b.edges.size(), 1);
  report.canonical_in_basis = expr.canonical_coords;
  report.basis = "spanning-tree";

  const Integer tree_d = gcd_of(expr.canonical_coords);
  const Integer matrix_d = torsion_number(presentation, report.canonical);
  if (tree_d != matrix_d)
    throw InvariantError("joinmeet_report: tree and Fitting torsion numbers disagree");
  report.torsion_number = tree_d;
  report.gorenstein = tree_d == 0;
  report.pure = is_pure(p);
  return report;
}

}  // namespace divclass
