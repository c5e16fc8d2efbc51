#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "cmpart/error.hpp"
#include "cmpart/vertex_label.hpp"

namespace cmpart {

/// Finite set of vertex labels held in canonical (sorted) order.
class Face {
 public:
  Face() = default;

  /// Throws InputError if a vertex occurs twice.
  Face(std::initializer_list<VertexLabel> vertices)
      : Face(std::vector<VertexLabel>(vertices)) {}

  explicit Face(std::vector<VertexLabel> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end())
      throw InputError("face lists vertex " + dup->to_string() + " more than once");
  }

  const std::vector<VertexLabel>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  bool contains(const VertexLabel& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool is_subset_of(const Face& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
  }

  Face with(const VertexLabel& v) const {
    std::vector<VertexLabel> out = vertices_;
    out.push_back(v);
    return Face(std::move(out));
  }
  Face without(const VertexLabel& v) const {
    std::vector<VertexLabel> out;
    out.reserve(vertices_.size());
    for (const auto& u : vertices_)
      if (u != v) out.push_back(u);
    Face f;
    f.vertices_ = std::move(out);
    return f;
  }

  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  /// Whitespace-separated labels; the empty face prints as `{}`.
  std::string to_string() const {
    if (vertices_.empty()) return "{}";
    std::string out;
    for (const auto& v : vertices_) {
      if (!out.empty()) out += ' ';
      out += v.to_string();
    }
    return out;
  }

  friend bool operator==(const Face&, const Face&) = default;
  /// Canonical order: by cardinality, then lexicographic.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
  }

 private:
  std::vector<VertexLabel> vertices_;
};

inline std::ostream& operator<<(std::ostream& os, const Face& f) {
  if (f.empty()) return os << "{}";
  return os << '{' << f.to_string() << '}';
}

inline std::ostream& operator<<(std::ostream& os, const VertexLabel& v) {
  return os << v.to_string();
}

}  // namespace cmpart
