#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cmpart/partition.hpp"
#include "cmpart/relative.hpp"

// Facet-list text format:
//   - one facet per line, whitespace-separated vertex labels
//   - lines starting with `#` are comments; blank lines are skipped
//   - `{}` on a line of its own is the empty face
//   - a line `---` separates Δ (above) from Γ (below) in a relative complex

namespace cmpart {

struct ComplexFile {
  SimplicialComplex total;
  std::optional<SimplicialComplex> removed;  ///< present iff the file had `---`

  bool is_relative() const noexcept { return removed.has_value(); }
  RelativeComplex as_relative() const {
    return removed ? RelativeComplex(total, *removed) : RelativeComplex(total);
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Face parse_face(const std::string& text, std::size_t line) {
  std::string t = trim(text);
  if (t == "{}" || t.empty()) return Face{};
  std::istringstream in(t);
  std::vector<VertexLabel> vs;
  std::string tok;
  try {
    while (in >> tok) vs.push_back(VertexLabel::parse(tok));
    return Face(std::move(vs));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace detail

inline ComplexFile read_complex(std::istream& in) {
  std::vector<Face> parts[2];
  bool relative = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string t = detail::trim(raw);
    if (t.empty() || t.front() == '#') continue;
    if (t == "---") {
      if (relative) throw ParseError(line, "second `---` separator");
      relative = true;
      continue;
    }
    parts[relative ? 1 : 0].push_back(detail::parse_face(t, line));
  }
  if (parts[0].empty()) throw ParseError(line, "no facets before end of input");
  ComplexFile f;
  f.total = SimplicialComplex::from_facets(parts[0]);
  if (relative)
    f.removed = parts[1].empty() ? SimplicialComplex{} : SimplicialComplex::from_facets(parts[1]);
  if (f.removed && !is_subcomplex(*f.removed, f.total))
    throw InputError("removed part is not a subcomplex of the total complex");
  return f;
}

inline ComplexFile read_complex_string(const std::string& text) {
  std::istringstream in(text);
  return read_complex(in);
}

inline ComplexFile read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_complex(in);
}

inline void write_complex(std::ostream& os, const SimplicialComplex& c) {
  for (const auto& f : c.facets()) os << f.to_string() << '\n';
}

inline void write_relative(std::ostream& os, const SimplicialComplex& total, const SimplicialComplex& removed) {
  write_complex(os, total);
  os << "---\n";
  write_complex(os, removed);
}

inline void write_relative(std::ostream& os, const RelativeComplex& x) {
  write_relative(os, x.total(), x.removed());
}

inline std::string to_text(const SimplicialComplex& c) {
  std::ostringstream os;
  write_complex(os, c);
  return os.str();
}

/// Certificate lines `R | F`, empty R written as `{}`.
inline void write_certificate(std::ostream& os, const IntervalPartition& p) {
  for (const auto& iv : p.intervals) os << iv.bottom.to_string() << " | " << iv.top.to_string() << '\n';
}

inline IntervalPartition read_certificate(std::istream& in) {
  IntervalPartition p;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string t = detail::trim(raw);
    if (t.empty() || t.front() == '#') continue;
    auto bar = t.find('|');
    if (bar == std::string::npos) throw ParseError(line, "expected `R | F`");
    p.intervals.push_back({detail::parse_face(t.substr(0, bar), line), detail::parse_face(t.substr(bar + 1), line)});
  }
  return p;
}

}  // namespace cmpart
