#pragma once

#include <unordered_set>
#include <vector>

#include "cmpart/complex.hpp"

namespace cmpart {

/// Relative complex (Δ, Γ) held in its minimal representation: `total()` is
/// the closure of the face set Δ \ Γ and `removed()` is total minus that face
/// set. Both share one vertex index. `removed()` is void when Γ was void.
class RelativeComplex {
 public:
  /// Throws if `removed` is not a subcomplex of `total` or nothing remains.
  RelativeComplex(const SimplicialComplex& total, const SimplicialComplex& removed) {
    if (!is_subcomplex(removed, total))
      throw InputError("relative: removed part is not a subcomplex of the total complex");
    std::vector<IndexSet> kept;
    for (const auto& f : total.index_faces()) {
      Face face = total.to_face(f);
      auto r = removed.to_index(face);
      if (!r || !removed.contains_index(*r)) kept.push_back(f);
    }
    if (kept.empty()) throw InputError("relative: the relative complex has no faces");
    total_ = SimplicialComplex::from_index_facets(total.vertices(), kept);
    // Closure faces that are not kept form the removed part of the minimal pair.
    std::vector<IndexSet> gone;
    for (const auto& f : total_.index_faces()) {
      Face face = total_.to_face(f);
      auto r = removed.to_index(face);
      if (r && removed.contains_index(*r)) gone.push_back(f);
    }
    removed_faces_.insert(gone.begin(), gone.end());
    removed_ = SimplicialComplex::from_index_facets(total_.vertices(), std::move(gone));
    for (const auto& f : total_.index_faces())
      if (!in_removed(f)) faces_.push_back(f);
  }

  /// (c, void): every face of c, ∅ included.
  explicit RelativeComplex(const SimplicialComplex& c) : RelativeComplex(c, SimplicialComplex{}) {}

  const SimplicialComplex& total() const noexcept { return total_; }
  const SimplicialComplex& removed() const noexcept { return removed_; }

  /// Index sets over total().vertices(), in canonical order.
  const std::vector<IndexSet>& index_faces() const noexcept { return faces_; }
  std::size_t num_faces() const noexcept { return faces_.size(); }
  std::vector<Face> faces() const {
    std::vector<Face> out;
    for (const auto& f : faces_) out.push_back(total_.to_face(f));
    return out;
  }

  /// The maximal faces, i.e. the facets of total().
  const std::vector<IndexSet>& index_facets() const noexcept { return total_.index_facets(); }

  bool contains_index(const IndexSet& s) const {
    return total_.contains_index(s) && !in_removed(s);
  }
  bool in_removed(const IndexSet& s) const { return removed_faces_.contains(s); }

  int dimension() const noexcept { return total_.dimension(); }
  bool is_pure() const noexcept { return total_.is_pure(); }

  /// Counts faces of Δ \ Γ only, so f_{-1} = 0 whenever ∅ ∈ Γ.
  FVector f_vector() const {
    std::vector<std::int64_t> f(static_cast<std::size_t>(dimension() + 2), 0);
    for (const auto& s : faces_) ++f[s.size()];
    return FVector(std::move(f));
  }

 private:
  SimplicialComplex total_;
  SimplicialComplex removed_;
  std::unordered_set<IndexSet> removed_faces_;
  std::vector<IndexSet> faces_;
};

inline RelativeComplex relative(const SimplicialComplex& total, const SimplicialComplex& removed) {
  return RelativeComplex(total, removed);
}

inline FVector f_vector(const RelativeComplex& x) { return x.f_vector(); }

}  // namespace cmpart
