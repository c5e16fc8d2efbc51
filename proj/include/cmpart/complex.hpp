#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cmpart/error.hpp"
#include "cmpart/face.hpp"
#include "cmpart/index_set.hpp"
#include "cmpart/vectors.hpp"

namespace cmpart {

/// Keeps only the inclusion-maximal members of `sets`, deduplicated and in
/// canonical order.
inline std::vector<IndexSet> maximal_sets(std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<IndexSet> out;
  // Larger sets come later in canonical order, so scan from the back.
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    bool absorbed = std::any_of(out.begin(), out.end(),
                                [&](const IndexSet& m) { return it->is_subset_of(m); });
    if (!absorbed) out.push_back(*it);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Finite abstract simplicial complex, stored by its facets.
///
/// Vertices are the labels occurring in facets, indexed densely in label
/// order; faces are IndexSets over that index. A default-constructed complex
/// is the void complex (no faces at all), which is distinct from {∅}.
/// Immutable; the face enumeration is computed once on demand and shared
/// between copies.
class SimplicialComplex {
 public:
  SimplicialComplex() : cache_(std::make_shared<Lazy>()) {}

  /// Combinatorial closure of a nonempty list of faces.
  static SimplicialComplex from_facets(const std::vector<Face>& faces) {
    if (faces.empty()) throw InputError("a complex needs at least one face");
    std::vector<VertexLabel> universe;
    for (const auto& f : faces) universe.insert(universe.end(), f.begin(), f.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    std::vector<IndexSet> sets;
    sets.reserve(faces.size());
    for (const auto& f : faces) {
      IndexSet s;
      for (const auto& v : f)
        s.insert(static_cast<std::size_t>(
            std::lower_bound(universe.begin(), universe.end(), v) - universe.begin()));
      sets.push_back(std::move(s));
    }
    return from_index_facets(universe, std::move(sets));
  }

  /// Closure of `sets`, whose indices refer to `universe` (sorted, unique).
  /// Vertices not used by any set are dropped. An empty `sets` gives the
  /// void complex.
  static SimplicialComplex from_index_facets(const std::vector<VertexLabel>& universe,
                                             std::vector<IndexSet> sets) {
    SimplicialComplex c;
    if (sets.empty()) return c;
    IndexSet used;
    for (const auto& s : sets) used = used | s;
    std::vector<std::size_t> remap(universe.size(), 0);
    std::size_t next = 0;
    used.for_each([&](std::size_t i) {
      remap[i] = next++;
      c.vertices_.push_back(universe.at(i));
    });
    for (auto& s : sets) {
      IndexSet r;
      s.for_each([&](std::size_t i) { r.insert(remap[i]); });
      s = std::move(r);
    }
    c.facets_ = maximal_sets(std::move(sets));
    return c;
  }

  /// The complex {∅}.
  static SimplicialComplex empty_face_only() {
    SimplicialComplex c;
    c.facets_.emplace_back();
    return c;
  }

  /// Full simplex on `vertices`.
  static SimplicialComplex simplex(const Face& vertices) { return from_facets({vertices}); }

  bool is_void() const noexcept { return facets_.empty(); }
  const std::vector<VertexLabel>& vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  const std::vector<IndexSet>& index_facets() const noexcept { return facets_; }
  std::size_t num_facets() const noexcept { return facets_.size(); }

  std::vector<Face> facets() const {
    std::vector<Face> out;
    out.reserve(facets_.size());
    for (const auto& f : facets_) out.push_back(to_face(f));
    return out;
  }

  /// Largest face dimension; -1 for {∅} and for the void complex.
  int dimension() const noexcept {
    std::size_t m = 0;
    for (const auto& f : facets_) m = std::max(m, f.size());
    return static_cast<int>(m) - 1;
  }

  bool is_pure() const noexcept {
    if (facets_.empty()) return true;
    std::size_t k = facets_.front().size();
    return std::all_of(facets_.begin(), facets_.end(),
                       [k](const IndexSet& f) { return f.size() == k; });
  }

  std::optional<std::size_t> vertex_index(const VertexLabel& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// Index form of `f`, or nullopt if some vertex is not in the complex.
  std::optional<IndexSet> to_index(const Face& f) const {
    IndexSet s;
    for (const auto& v : f) {
      auto i = vertex_index(v);
      if (!i) return std::nullopt;
      s.insert(*i);
    }
    return s;
  }

  Face to_face(const IndexSet& s) const {
    std::vector<VertexLabel> out;
    out.reserve(s.size());
    s.for_each([&](std::size_t i) { out.push_back(vertices_.at(i)); });
    return Face(std::move(out));
  }

  bool contains_index(const IndexSet& s) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const IndexSet& f) { return s.is_subset_of(f); });
  }
  bool contains(const Face& f) const {
    auto s = to_index(f);
    return s && contains_index(*s);
  }

  /// Every face, ∅ included, in canonical order.
  const std::vector<IndexSet>& index_faces() const { return cache().all; }

  /// Faces of dimension k in canonical order; empty span if there are none.
  std::span<const IndexSet> index_faces(int k) const {
    const auto& c = cache();
    auto slot = static_cast<std::size_t>(k + 1);
    if (k < -1 || slot + 1 >= c.offsets.size()) return {};
    return std::span<const IndexSet>(c.all).subspan(c.offsets[slot],
                                                    c.offsets[slot + 1] - c.offsets[slot]);
  }

  /// Position of `s` within index_faces(), or nullopt if it is not a face.
  std::optional<std::size_t> face_position(const IndexSet& s) const {
    const auto& c = cache();
    auto it = c.position.find(s);
    if (it == c.position.end()) return std::nullopt;
    return it->second;
  }

  /// Position of `s` among the faces of its own dimension.
  std::optional<std::size_t> position_in_dimension(const IndexSet& s) const {
    auto p = face_position(s);
    if (!p) return std::nullopt;
    return *p - cache().offsets[s.size()];
  }

  std::size_t num_faces() const { return cache().all.size(); }

  std::vector<Face> faces() const {
    std::vector<Face> out;
    out.reserve(num_faces());
    for (const auto& s : index_faces()) out.push_back(to_face(s));
    return out;
  }

  /// Faces of dimension k; throws unless -1 <= k <= dim.
  std::vector<Face> faces(int k) const {
    if (k < -1 || k > dimension())
      throw InputError("dimension " + std::to_string(k) + " outside [-1, " +
                       std::to_string(dimension()) + "]");
    std::vector<Face> out;
    for (const auto& s : index_faces(k)) out.push_back(to_face(s));
    return out;
  }

  FVector f_vector() const {
    if (is_void()) return FVector{};
    const auto& c = cache();
    std::vector<std::int64_t> f;
    for (std::size_t i = 0; i + 1 < c.offsets.size(); ++i)
      f.push_back(static_cast<std::int64_t>(c.offsets[i + 1] - c.offsets[i]));
    return FVector(std::move(f));
  }

  /// Same vertex labels and same facets.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  struct FaceCache {
    std::vector<IndexSet> all;
    std::vector<std::size_t> offsets;  // faces of dim k are all[offsets[k+1], offsets[k+2])
    std::unordered_map<IndexSet, std::size_t> position;
  };
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<FaceCache> data;
  };

  const FaceCache& cache() const {
    std::call_once(cache_->once, [this] { cache_->data = build_cache(); });
    return *cache_->data;
  }

  std::unique_ptr<FaceCache> build_cache() const {
    auto c = std::make_unique<FaceCache>();
    std::unordered_set<IndexSet> seen;
    for (const auto& f : facets_) {
      if (f.size() > 30) throw InputError("facet too large to enumerate its faces");
      for_each_subset(f, [&](const IndexSet& s) { seen.insert(s); });
    }
    c->all.assign(seen.begin(), seen.end());
    std::sort(c->all.begin(), c->all.end());
    std::size_t top = facets_.empty() ? 0 : static_cast<std::size_t>(dimension() + 2);
    c->offsets.assign(top + 1, 0);
    for (const auto& s : c->all) ++c->offsets[s.size() + 1];
    for (std::size_t i = 1; i < c->offsets.size(); ++i) c->offsets[i] += c->offsets[i - 1];
    c->position.reserve(c->all.size());
    for (std::size_t i = 0; i < c->all.size(); ++i) c->position.emplace(c->all[i], i);
    return c;
  }

  std::vector<VertexLabel> vertices_;
  std::vector<IndexSet> facets_;
  std::shared_ptr<Lazy> cache_;
};

inline SimplicialComplex from_facets(const std::vector<Face>& faces) {
  return SimplicialComplex::from_facets(faces);
}

inline std::vector<Face> faces(const SimplicialComplex& c) { return c.faces(); }
inline std::vector<Face> faces(const SimplicialComplex& c, int k) { return c.faces(k); }
inline FVector f_vector(const SimplicialComplex& c) { return c.f_vector(); }
inline bool is_pure(const SimplicialComplex& c) { return c.is_pure(); }
inline int dimension(const SimplicialComplex& c) { return c.dimension(); }

/// lk(f) = {G : G ∩ f = ∅, G ∪ f ∈ c}. The link of ∅ is c; the link of a
/// facet is {∅}.
inline SimplicialComplex link(const SimplicialComplex& c, const Face& f) {
  auto s = c.to_index(f);
  if (!s || !c.contains_index(*s)) throw InputError("link: " + f.to_string() + " is not a face");
  std::vector<IndexSet> rest;
  for (const auto& facet : c.index_facets())
    if (s->is_subset_of(facet)) rest.push_back(facet - *s);
  return SimplicialComplex::from_index_facets(c.vertices(), std::move(rest));
}

/// Index-level link, for callers that already hold a face of c.
inline SimplicialComplex link_of_index(const SimplicialComplex& c, const IndexSet& s) {
  std::vector<IndexSet> rest;
  for (const auto& facet : c.index_facets())
    if (s.is_subset_of(facet)) rest.push_back(facet - s);
  if (rest.empty()) throw InputError("link: not a face");
  return SimplicialComplex::from_index_facets(c.vertices(), std::move(rest));
}

/// Subcomplex of all faces contained in `w`.
inline SimplicialComplex induced(const SimplicialComplex& c, const std::vector<VertexLabel>& w) {
  IndexSet mask;
  for (const auto& v : w) {
    auto i = c.vertex_index(v);
    if (!i) throw InputError("induced: unknown vertex " + v.to_string());
    mask.insert(*i);
  }
  if (c.is_void()) return c;
  std::vector<IndexSet> parts;
  for (const auto& facet : c.index_facets()) parts.push_back(facet & mask);
  return SimplicialComplex::from_index_facets(c.vertices(), std::move(parts));
}

/// True if every face of `sub` is a face of `c`.
inline bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& c) {
  for (const auto& f : sub.index_facets())
    if (!c.contains(sub.to_face(f))) return false;
  return true;
}

/// True if `sub` is a subcomplex of `c` and equals c induced on its vertices.
inline bool is_induced_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& c) {
  if (!is_subcomplex(sub, c)) return false;
  return induced(c, sub.vertices()) == sub;
}

}  // namespace cmpart
