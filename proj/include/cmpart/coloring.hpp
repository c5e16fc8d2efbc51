#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmpart/complex.hpp"

namespace cmpart {

/// Vertex → color in {1, ..., k}.
using Coloring = std::map<VertexLabel, int>;

namespace detail {

inline std::vector<std::vector<std::size_t>> underlying_graph(const SimplicialComplex& c) {
  std::vector<IndexSet> nbrs(c.num_vertices());
  for (const auto& f : c.index_facets()) {
    auto vs = f.indices();
    for (auto a : vs)
      for (auto b : vs)
        if (a != b) nbrs[a].insert(b);
  }
  std::vector<std::vector<std::size_t>> adj;
  adj.reserve(nbrs.size());
  for (const auto& n : nbrs) adj.push_back(n.indices());
  return adj;
}

// Exact DSATUR backtracking. Colors are introduced in increasing order, so
// no two branches differ by a renaming of colors.
class DsaturSearch {
 public:
  DsaturSearch(const std::vector<std::vector<std::size_t>>& adj, int k)
      : adj_(adj), k_(k), color_(adj.size(), 0),
        seen_(adj.size(), std::vector<int>(static_cast<std::size_t>(k) + 1, 0)),
        saturation_(adj.size(), 0) {}

  bool run() { return extend(0, 0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool extend(std::size_t colored, int used) {
    if (colored == adj_.size()) return true;
    std::size_t best = pick();
    int limit = std::min(k_, used + 1);
    for (int col = 1; col <= limit; ++col) {
      if (seen_[best][static_cast<std::size_t>(col)]) continue;
      assign(best, col);
      if (extend(colored + 1, std::max(used, col))) return true;
      unassign(best, col);
    }
    return false;
  }

  std::size_t pick() const {
    std::size_t best = adj_.size();
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (color_[v]) continue;
      if (best == adj_.size() || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && adj_[v].size() > adj_[best].size()))
        best = v;
    }
    return best;
  }

  void assign(std::size_t v, int col) {
    color_[v] = col;
    for (auto u : adj_[v])
      if (seen_[u][static_cast<std::size_t>(col)]++ == 0) ++saturation_[u];
  }
  void unassign(std::size_t v, int col) {
    color_[v] = 0;
    for (auto u : adj_[v])
      if (--seen_[u][static_cast<std::size_t>(col)] == 0) --saturation_[u];
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  int k_;
  std::vector<int> color_;
  std::vector<std::vector<int>> seen_;
  std::vector<int> saturation_;
};

}  // namespace detail

/// Renumbers colors by first appearance in vertex order.
inline Coloring canonical_coloring(const Coloring& c) {
  std::map<int, int> rename;
  Coloring out;
  for (const auto& [v, col] : c) {
    auto [it, fresh] = rename.emplace(col, static_cast<int>(rename.size()) + 1);
    out.emplace(v, it->second);
  }
  return out;
}

/// A proper coloring with at most k colors, or nullopt if none exists.
inline std::optional<Coloring> proper_coloring(const SimplicialComplex& c, int k) {
  if (k < 1) throw InputError("coloring: need at least one color");
  auto adj = detail::underlying_graph(c);
  detail::DsaturSearch search(adj, k);
  if (!search.run()) return std::nullopt;
  Coloring out;
  for (std::size_t i = 0; i < c.num_vertices(); ++i) out.emplace(c.vertices()[i], search.colors()[i]);
  return canonical_coloring(out);
}

/// Checks totality, range, and every edge; returns a description of the
/// first problem or nullopt if the coloring is proper.
inline std::optional<std::string> coloring_violation(const SimplicialComplex& c,
                                                     const Coloring& col, int k) {
  for (const auto& v : c.vertices()) {
    auto it = col.find(v);
    if (it == col.end()) return "vertex " + v.to_string() + " has no color";
    if (it->second < 1 || it->second > k)
      return "vertex " + v.to_string() + " has color " + std::to_string(it->second) + " outside 1.." +
             std::to_string(k);
  }
  for (const auto& e : c.index_faces(1)) {
    Face edge = c.to_face(e);
    if (col.at(edge.vertices()[0]) == col.at(edge.vertices()[1]))
      return "edge " + edge.to_string() + " is monochromatic";
  }
  return std::nullopt;
}

struct BalanceResult {
  bool balanced = false;
  int colors = 0;  ///< dim + 1
  std::optional<Coloring> witness;
  std::optional<std::string> warning;
};

/// Balanced: the graph is (dim+1)-colorable. Non-pure input is still
/// decided against dim+1 colors, with a warning attached.
inline BalanceResult is_balanced(const SimplicialComplex& c) {
  BalanceResult r;
  r.colors = std::max(c.dimension() + 1, 1);
  if (!c.is_pure()) r.warning = "complex is not pure; balancedness taken against dim+1 colors";
  if (c.num_vertices() == 0) {
    r.balanced = true;
    r.witness = Coloring{};
    return r;
  }
  r.witness = proper_coloring(c, r.colors);
  r.balanced = r.witness.has_value();
  return r;
}

/// Vertices whose links are not balanced. Requires dim >= 2.
inline std::vector<VertexLabel> critical_vertices(const SimplicialComplex& c) {
  if (c.dimension() < 2) throw InputError("critical vertices need dimension at least 2");
  std::vector<VertexLabel> out;
  for (const auto& v : c.vertices())
    if (!is_balanced(link(c, Face{v})).balanced) out.push_back(v);
  return out;
}

}  // namespace cmpart
