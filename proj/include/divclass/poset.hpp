#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace divclass {

/// Cover pair (lower, upper) by index.
using Cover = std::pair<std::size_t, std::size_t>;

/// Finite poset stored by its Hasse diagram.
///
/// Elements are indexed 0..n-1 along a linear extension: every cover
/// (i, j) has i < j. `labels[i]` is the user-facing name of element i.
/// Construct through `build_poset`.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Sorted lexicographically.
  const std::vector<Cover>& covers() const { return covers_; }

  /// Upper covers of element i, ascending.
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }

  bool is_minimal(std::size_t i) const { return down_[i].empty(); }
  bool is_maximal(std::size_t i) const { return up_[i].empty(); }
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

 private:
  friend Poset build_poset(const std::vector<std::string>&,
                           const std::vector<std::pair<std::string, std::string>>&);

  std::vector<std::string> labels_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
};

/// Canonicalizes an arbitrary order relation: transitive closure, cycle
/// rejection, transitive reduction, and relabeling by the stable topological
/// order of the input names. Relations may be any comparable pairs
/// (a, b) meaning a < b.
///
/// Throws InputError on duplicate or unknown names and on cycles.
Poset build_poset(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& relations);

/// An edge of the Hasse diagram of the bounded extension, by vertex id.
struct HasseEdge {
  std::size_t lower;
  std::size_t upper;
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// P with a new bottom and top adjoined.
///
/// Vertex ids: 0 is the bottom, 1..n are the elements (element i of the base
/// poset is vertex i + 1), n + 1 is the top.
struct BoundedPoset {
  Poset base;
  std::vector<HasseEdge> edges;

  std::size_t element_count() const { return base.size(); }
  std::size_t vertex_count() const { return base.size() + 2; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return base.size() + 1; }
};

/// Edge order: covers of P (lexicographic), then (bottom, minimal) ascending,
/// then (maximal, top) ascending. The empty poset yields the single edge
/// (bottom, top).
BoundedPoset bound(const Poset& p);

/// True iff P-hat admits a rank function, i.e. all maximal chains of P have
/// the same cardinality.
bool is_pure(const Poset& p);

inline constexpr std::size_t kDefaultChainLimit = 1'000'000;

/// All maximal chains of P in depth-first order (minimal elements ascending,
/// then upper covers ascending). Throws LimitExceeded past `limit` chains.
std::vector<std::vector<std::size_t>> maximal_chains(const Poset& p,
                                                     std::size_t limit = kDefaultChainLimit);

struct ChainPair {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  /// Length of a chain x_0 < ... < x_a is a (its number of cover steps).
  std::size_t first_length() const { return first.size() - 1; }
  std::size_t second_length() const { return second.size() - 1; }
};

/// First pair (in enumeration order) of element-disjoint maximal chains.
std::optional<ChainPair> disjoint_maximal_chain_pair(const Poset& p,
                                                     std::size_t limit = kDefaultChainLimit);

}  // namespace divclass
