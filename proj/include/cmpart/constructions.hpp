#pragma once

#include <string>
#include <vector>

#include "cmpart/io.hpp"
#include "cmpart/transform.hpp"

namespace cmpart {

namespace named {

/// The 14 facets of Q.
inline std::vector<Face> q_facets() {
  return {{1, 2, 4, 9}, {1, 2, 6, 9}, {1, 5, 6, 9}, {1, 5, 8, 9}, {1, 4, 8, 9},
          {1, 4, 5, 8}, {1, 4, 5, 7}, {4, 5, 7, 8}, {1, 2, 5, 6}, {0, 1, 2, 5},
          {0, 2, 5, 6}, {0, 1, 2, 3}, {1, 2, 3, 4}, {1, 3, 4, 7}};
}

inline std::vector<VertexLabel> a_vertices() { return {0, 2, 3, 4, 6, 7, 8}; }
inline std::vector<VertexLabel> a_star_vertices() { return {0, 2, 3, 4, 6, 7, 8, 10, 12, 13}; }

/// Edge subdivisions turning Q into Q*, in order: edge, new vertex.
inline std::vector<std::pair<Face, VertexLabel>> balancing_subdivisions() {
  return {{Face{2, 4}, 10}, {Face{5, 9}, 11}, {Face{0, 6}, 12}, {Face{7, 8}, 13}};
}

inline VertexMap tau() { return VertexMap::from_cycles({{0, 7}, {2, 4}, {6, 8}}); }
inline VertexMap tau_prime() { return VertexMap::from_cycles({{0, 7}, {2, 4}, {6, 8}, {12, 13}}); }

struct Complexes {
  SimplicialComplex q;
  SimplicialComplex a;
  SimplicialComplex q_star;
  SimplicialComplex a_star;
};

/// Builds Q, A, Q*, A*. `corrupt` drops the facet {1,3,4,7} from Q; it exists
/// only so that report consumers can check that a broken construction is caught.
inline Complexes build(bool corrupt = false) {
  Complexes out;
  auto facets = q_facets();
  if (corrupt) facets.pop_back();
  out.q = from_facets(facets);
  out.a = induced(out.q, a_vertices());
  out.q_star = out.q;
  for (const auto& [edge, w] : balancing_subdivisions()) out.q_star = subdivide_edge(out.q_star, edge, w);
  out.a_star = induced(out.q_star, a_star_vertices());
  return out;
}

inline SimplicialComplex glued(const Complexes& c, int n) { return glue_copies(c.q_star, c.a_star, n); }

}  // namespace named

/// Named constructions: Q, A, Q-star, A-star, X, C<n> (n >= 1).
inline ComplexFile build_named(const std::string& name, bool corrupt = false) {
  auto c = named::build(corrupt);
  ComplexFile out;
  if (name == "Q") out.total = c.q;
  else if (name == "A") out.total = c.a;
  else if (name == "Q-star") out.total = c.q_star;
  else if (name == "A-star") out.total = c.a_star;
  else if (name == "X") {
    RelativeComplex x(c.q_star, c.a_star);
    out.total = x.total();
    out.removed = x.removed();
  } else if (name.size() > 1 && name[0] == 'C') {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used + 1 != name.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 1) throw InputError("unknown construction " + name + " (C<n> needs n >= 1)");
    out.total = named::glued(c, n);
  } else {
    throw InputError("unknown construction " + name + " (expected Q, A, Q-star, A-star, X or C<n>)");
  }
  return out;
}

inline std::string build_text(const std::string& name) {
  auto f = build_named(name);
  std::ostringstream os;
  if (f.removed) write_relative(os, f.total, *f.removed);
  else write_complex(os, f.total);
  return os.str();
}

}  // namespace cmpart
