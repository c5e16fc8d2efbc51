#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmpart/complex.hpp"

namespace cmpart {

/// Permutation of a finite set of vertex labels; unlisted labels are fixed.
class VertexMap {
 public:
  VertexMap() = default;

  /// Throws unless the pairs describe a bijection of their domain onto itself.
  explicit VertexMap(std::map<VertexLabel, VertexLabel> mapping) : map_(std::move(mapping)) {
    std::set<VertexLabel> image;
    for (const auto& [from, to] : map_)
      if (!image.insert(to).second)
        throw InputError("vertex map is not injective: " + to.to_string() + " hit twice");
    for (const auto& v : image)
      if (!map_.contains(v))
        throw InputError("vertex map sends a vertex onto unlisted label " + v.to_string());
    std::erase_if(map_, [](const auto& kv) { return kv.first == kv.second; });
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0,7},{2,4},{6,8}}.
  static VertexMap from_cycles(const std::vector<std::vector<VertexLabel>>& cycles) {
    std::map<VertexLabel, VertexLabel> m;
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!m.emplace(cycle[i], cycle[(i + 1) % cycle.size()]).second)
          throw InputError("cycles are not disjoint at " + cycle[i].to_string());
      }
    }
    return VertexMap(std::move(m));
  }

  VertexLabel operator()(const VertexLabel& v) const {
    auto it = map_.find(v);
    return it == map_.end() ? v : it->second;
  }

  Face operator()(const Face& f) const {
    std::vector<VertexLabel> out;
    out.reserve(f.size());
    for (const auto& v : f) out.push_back((*this)(v));
    return Face(std::move(out));
  }

  /// Labels moved by the map.
  std::vector<VertexLabel> support() const {
    std::vector<VertexLabel> out;
    for (const auto& [k, v] : map_) out.push_back(k);
    return out;
  }

  VertexMap inverse() const {
    std::map<VertexLabel, VertexLabel> m;
    for (const auto& [k, v] : map_) m.emplace(v, k);
    return VertexMap(std::move(m));
  }

  /// (this ∘ other)(v) = this(other(v)).
  VertexMap compose(const VertexMap& other) const {
    std::set<VertexLabel> domain;
    for (const auto& [k, v] : map_) domain.insert(k);
    for (const auto& [k, v] : other.map_) domain.insert(k);
    std::map<VertexLabel, VertexLabel> m;
    for (const auto& v : domain) m.emplace(v, (*this)(other(v)));
    return VertexMap(std::move(m));
  }

  /// Keeps only the cycles inside `vertices`; throws if a cycle leaves it.
  VertexMap restricted_to(const std::vector<VertexLabel>& vertices) const {
    std::set<VertexLabel> keep(vertices.begin(), vertices.end());
    std::map<VertexLabel, VertexLabel> m;
    for (const auto& [k, v] : map_) {
      if (keep.contains(k) != keep.contains(v))
        throw InputError("restriction does not preserve the vertex set at " + k.to_string());
      if (keep.contains(k)) m.emplace(k, v);
    }
    return VertexMap(std::move(m));
  }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::map<VertexLabel, VertexLabel> map_;
};

inline SimplicialComplex apply_map(const SimplicialComplex& c, const VertexMap& m) {
  if (c.is_void()) return c;
  std::vector<Face> out;
  for (const auto& f : c.facets()) out.push_back(m(f));
  return SimplicialComplex::from_facets(out);
}

/// True iff m permutes the facet set of c. Every moved vertex must be a vertex of c.
inline bool is_automorphism(const SimplicialComplex& c, const VertexMap& m) {
  for (const auto& v : m.support())
    if (!c.vertex_index(v))
      throw InputError("automorphism check: " + v.to_string() + " is not a vertex");
  std::vector<Face> image;
  for (const auto& f : c.facets()) image.push_back(m(f));
  std::sort(image.begin(), image.end());
  return image == c.facets();
}

/// Replaces every face F ⊇ {u,v} by (F \ u) ∪ {w} and (F \ v) ∪ {w}.
inline SimplicialComplex subdivide_edge(const SimplicialComplex& c, const Face& edge,
                                        const VertexLabel& w) {
  if (edge.size() != 2) throw InputError("subdivide: " + edge.to_string() + " is not an edge");
  if (!c.contains(edge)) throw InputError("subdivide: " + edge.to_string() + " is not an edge of the complex");
  if (c.vertex_index(w)) throw InputError("subdivide: vertex " + w.to_string() + " already exists");
  const VertexLabel& u = edge.vertices()[0];
  const VertexLabel& v = edge.vertices()[1];
  std::vector<Face> out;
  for (const auto& s : c.index_faces()) {
    Face f = c.to_face(s);
    if (edge.is_subset_of(f)) {
      out.push_back(f.without(u).with(w));
      out.push_back(f.without(v).with(w));
    } else {
      out.push_back(std::move(f));
    }
  }
  return SimplicialComplex::from_facets(out);
}

/// First label `s<k>` (k = 1, 2, ...) that is not a vertex of c.
inline VertexLabel fresh_vertex(const SimplicialComplex& c) {
  for (std::int64_t k = 1;; ++k) {
    VertexLabel cand(VertexLabel::Base(std::string("s") + std::to_string(k)), std::nullopt);
    if (!c.vertex_index(cand)) return cand;
  }
}

/// dim(q) - dim(a); the gluing theorem asks for at most 1.
inline int gluing_codimension(const SimplicialComplex& q, const SimplicialComplex& a) {
  return q.dimension() - a.dimension();
}

/// n copies of q identified along the induced subcomplex a. Vertices of a
/// keep their labels; every other vertex v appears as v.1, ..., v.n.
inline SimplicialComplex glue_copies(const SimplicialComplex& q, const SimplicialComplex& a, int n) {
  if (n < 1) throw InputError("glue: the number of copies must be positive");
  if (!is_induced_subcomplex(a, q)) throw InputError("glue: not an induced subcomplex");
  std::vector<bool> shared(q.num_vertices(), false);
  for (const auto& v : a.vertices()) shared[*q.vertex_index(v)] = true;
  for (std::size_t i = 0; i < q.num_vertices(); ++i)
    if (!shared[i] && q.vertices()[i].copy_tag())
      throw InputError("glue: vertex " + q.vertices()[i].to_string() + " already carries a copy tag");
  std::vector<Face> out;
  for (int k = 1; k <= n; ++k) {
    for (const auto& s : q.index_facets()) {
      std::vector<VertexLabel> f;
      s.for_each([&](std::size_t i) {
        const auto& v = q.vertices()[i];
        f.push_back(shared[i] ? v : v.with_copy_tag(static_cast<std::uint32_t>(k)));
      });
      out.emplace_back(std::move(f));
    }
  }
  return SimplicialComplex::from_facets(out);
}

/// Cone over c with a new apex.
inline SimplicialComplex cone(const SimplicialComplex& c, const VertexLabel& apex) {
  if (c.vertex_index(apex)) throw InputError("cone: apex " + apex.to_string() + " already exists");
  std::vector<Face> out;
  for (const auto& f : c.facets()) out.push_back(f.with(apex));
  if (out.empty()) out.push_back(Face{apex});
  return SimplicialComplex::from_facets(out);
}

/// Label of the barycentric vertex for a nonempty face, e.g. `{1,2,5}`.
inline VertexLabel barycenter_label(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += f.vertices()[i].to_string();
  }
  s += '}';
  return VertexLabel(VertexLabel::Base(std::move(s)), std::nullopt);
}

/// Order complex of the nonempty faces: one facet per maximal chain, i.e.
/// per ordering of the vertices of each facet.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
  std::vector<Face> out;
  for (const auto& facet : c.facets()) {
    if (facet.empty()) continue;
    std::vector<VertexLabel> order = facet.vertices();
    do {
      std::vector<VertexLabel> chain;
      std::vector<VertexLabel> prefix;
      for (const auto& v : order) {
        prefix.push_back(v);
        chain.push_back(barycenter_label(Face(prefix)));
      }
      out.emplace_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  if (out.empty()) return c;
  return SimplicialComplex::from_facets(out);
}

}  // namespace cmpart
