#include "divclass/poset.hpp"

#include <algorithm>
#include <unordered_map>

#include "divclass/error.hpp"

namespace divclass {

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (is_minimal(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (is_maximal(i)) out.push_back(i);
  return out;
}

Poset build_poset(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& relations) {
  const std::size_t n = names.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(names[i], i).second)
      throw InputError("duplicate element name '" + names[i] + "'");

  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw InputError("relation references unknown element '" + name + "'");
    return it->second;
  };

  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : relations) succ[lookup(a)].push_back(lookup(b));

  // less[i][j]: i < j in the transitive closure (input indexing).
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack(succ[s].begin(), succ[s].end());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (less[s][v]) continue;
      less[s][v] = 1;
      for (std::size_t w : succ[v]) stack.push_back(w);
    }
    if (less[s][s]) throw InputError("relations contain a cycle through '" + names[s] + "'");
  }

  // Stable topological order: repeatedly take the earliest-declared element
  // whose predecessors are all placed.
  std::vector<std::size_t> order;
  std::vector<char> placed(n, 0);
  order.reserve(n);
  while (order.size() < n) {
    for (std::size_t c = 0; c < n; ++c) {
      if (placed[c]) continue;
      bool ready = true;
      for (std::size_t p = 0; p < n && ready; ++p)
        if (less[p][c] && !placed[p]) ready = false;
      if (ready) {
        placed[c] = 1;
        order.push_back(c);
        break;
      }
    }
  }
  std::vector<std::size_t> new_index(n);
  for (std::size_t k = 0; k < n; ++k) new_index[order[k]] = k;

  Poset p;
  p.labels_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) p.labels_.push_back(names[order[k]]);
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool implied = false;
      for (std::size_t m = 0; m < n && !implied; ++m)
        implied = less[a][m] && less[m][b];
      if (!implied) p.covers_.emplace_back(new_index[a], new_index[b]);
    }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (const auto& [i, j] : p.covers_) {
    p.up_[i].push_back(j);
    p.down_[j].push_back(i);
  }
  for (auto& v : p.down_) std::sort(v.begin(), v.end());
  return p;
}

BoundedPoset bound(const Poset& p) {
  BoundedPoset b{p, {}};
  const std::size_t n = p.size();
  if (n == 0) {
    b.edges.push_back({0, 1});
    return b;
  }
  for (const auto& [i, j] : p.covers()) b.edges.push_back({i + 1, j + 1});
  for (std::size_t i : p.minimal_elements()) b.edges.push_back({0, i + 1});
  for (std::size_t i : p.maximal_elements()) b.edges.push_back({i + 1, n + 1});
  return b;
}

bool is_pure(const Poset& p) {
  // Propagate ranks upward in label order; every lower cover of a vertex
  // must agree. The top is covered exactly by the maximal elements.
  const std::size_t n = p.size();
  std::vector<std::size_t> rank(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& below = p.lower_covers(v);
    if (below.empty()) {
      rank[v] = 1;
      continue;
    }
    rank[v] = rank[below.front()] + 1;
    for (std::size_t w : below)
      if (rank[w] + 1 != rank[v]) return false;
  }
  const auto maxima = p.maximal_elements();
  return std::all_of(maxima.begin(), maxima.end(),
                     [&](std::size_t m) { return rank[m] == rank[maxima.front()]; });
}

std::vector<std::vector<std::size_t>> maximal_chains(const Poset& p, std::size_t limit) {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> path;

  auto extend = [&](auto&& self, std::size_t v) -> void {
    path.push_back(v);
    if (p.is_maximal(v)) {
      if (chains.size() == limit)
        throw LimitExceeded("maximal chain enumeration exceeded " + std::to_string(limit) +
                            " chains");
      chains.push_back(path);
    } else {
      for (std::size_t w : p.upper_covers(v)) self(self, w);
    }
    path.pop_back();
  };
  for (std::size_t m : p.minimal_elements()) extend(extend, m);
  return chains;
}

std::optional<ChainPair> disjoint_maximal_chain_pair(const Poset& p, std::size_t limit) {
  const auto chains = maximal_chains(p, limit);
  const std::size_t n = p.size();
  std::vector<std::vector<char>> member(chains.size(), std::vector<char>(n, 0));
  for (std::size_t c = 0; c < chains.size(); ++c)
    for (std::size_t v : chains[c]) member[c][v] = 1;

  for (std::size_t a = 0; a < chains.size(); ++a)
    for (std::size_t b = a + 1; b < chains.size(); ++b) {
      bool disjoint = std::none_of(chains[b].begin(), chains[b].end(),
                                   [&](std::size_t v) { return member[a][v] != 0; });
      if (disjoint) return ChainPair{chains[a], chains[b]};
    }
  return std::nullopt;
}

}  // namespace divclass
