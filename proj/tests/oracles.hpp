#pragma once
// Independent reference computations for the tests. Nothing here uses the
// library's bitsets, caches or search code; everything works on plain sets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cmpart/face.hpp"
#include "cmpart/vertex_label.hpp"

namespace oracle {

using Set = std::set<cmpart::VertexLabel>;
using Family = std::set<Set>;

// Face from text labels, e.g. lf({"a", "b"}).
inline cmpart::Face lf(std::initializer_list<const char*> labels) {
  std::vector<cmpart::VertexLabel> v;
  for (const char* l : labels) v.push_back(cmpart::VertexLabel::parse(l));
  return cmpart::Face(std::move(v));
}

inline Set to_set(const cmpart::Face& f) { return Set(f.begin(), f.end()); }

inline Family closure(const std::vector<cmpart::Face>& facets) {
  Family out;
  for (const auto& f : facets) {
    std::vector<cmpart::VertexLabel> v(f.begin(), f.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.size()); ++mask) {
      Set s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask >> i & 1) s.insert(v[i]);
      out.insert(s);
    }
  }
  return out;
}

inline std::vector<std::int64_t> f_vector(const Family& faces) {
  std::size_t top = 0;
  for (const auto& s : faces) top = std::max(top, s.size());
  std::vector<std::int64_t> f(top + 1, 0);
  for (const auto& s : faces) ++f[s.size()];
  return f;
}

// h from f by literally expanding sum_i f_{i-1} (t-1)^{d-i} as a polynomial
// in t and reading off the coefficients of t^{d-i}.
inline std::vector<std::int64_t> h_by_expansion(const std::vector<std::int64_t>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<std::int64_t> poly(d + 1, 0);  // poly[j] = coefficient of t^j
  for (int i = 0; i <= d; ++i) {
    std::vector<std::int64_t> p{1};
    for (int k = 0; k < d - i; ++k) {  // multiply by (t - 1)
      std::vector<std::int64_t> q(p.size() + 1, 0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        q[j + 1] += p[j];
        q[j] -= p[j];
      }
      p = q;
    }
    for (std::size_t j = 0; j < p.size(); ++j) poly[j] += f[i] * p[j];
  }
  std::vector<std::int64_t> h(d + 1);
  for (int i = 0; i <= d; ++i) h[i] = poly[d - i];
  return h;
}

// Rank over GF(p) by textbook elimination on a fresh int matrix.
inline std::size_t dense_rank(std::vector<std::vector<long>> m, long p) {
  auto inv = [p](long a) {
    for (long x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    return 0L;
  };
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && ((m[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long s = inv(((m[rank][c] % p) + p) % p);
    for (auto& x : m[rank]) x = ((x * s) % p + p) % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      long k = ((m[r][c] % p) + p) % p;
      if (!k) continue;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - k * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers β̃_{-1..top} over GF(p), from plain set families.
inline std::vector<std::int64_t> betti(const Family& faces, long p) {
  std::map<std::size_t, std::vector<Set>> by_size;
  for (const auto& s : faces) by_size[s.size()].push_back(s);
  if (faces.empty()) return {};
  std::size_t top = by_size.rbegin()->first;
  std::vector<std::size_t> rk(top + 2, 0);  // rk[k] = rank of boundary from size k to size k-1
  for (std::size_t k = 1; k <= top; ++k) {
    const auto& lo = by_size[k - 1];
    const auto& hi = by_size[k];
    std::vector<std::vector<long>> m(lo.size(), std::vector<long>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      std::size_t i = 0;
      for (const auto& v : hi[j]) {
        Set g = hi[j];
        g.erase(v);
        auto row = std::find(lo.begin(), lo.end(), g) - lo.begin();
        m[row][j] = (i % 2 == 0) ? 1 : p - 1;
        ++i;
      }
    }
    rk[k] = dense_rank(m, p);
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k <= top; ++k) {
    auto n = static_cast<std::int64_t>(by_size[k].size());
    out.push_back(n - static_cast<std::int64_t>(rk[k]) - static_cast<std::int64_t>(k + 1 <= top ? rk[k + 1] : 0));
  }
  return out;
}

inline Family link(const Family& faces, const Set& f) {
  Family out;
  for (const auto& g : faces) {
    bool disjoint = std::none_of(g.begin(), g.end(), [&](const auto& v) { return f.count(v); });
    if (!disjoint) continue;
    Set u = g;
    u.insert(f.begin(), f.end());
    if (faces.count(u)) out.insert(g);
  }
  return out;
}

// Every way to choose one bottom per facet so the intervals tile `faces`
// exactly. Returns the number of partitions found (stops at `limit`).
inline std::size_t count_partitions(const Family& faces, const std::vector<Set>& facets, std::size_t limit = 1) {
  std::size_t found = 0;
  Family covered;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (found >= limit) return;
    if (i == facets.size()) {
      if (covered.size() == faces.size()) ++found;
      return;
    }
    std::vector<cmpart::VertexLabel> v(facets[i].begin(), facets[i].end());
    for (std::uint64_t bmask = 0; bmask < (std::uint64_t{1} << v.size()); ++bmask) {
      std::vector<Set> members;
      bool ok = true;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << v.size()) && ok; ++m) {
        if ((m & bmask) != bmask) continue;
        Set s;
        for (std::size_t j = 0; j < v.size(); ++j)
          if (m >> j & 1) s.insert(v[j]);
        if (!faces.count(s) || covered.count(s)) ok = false;
        members.push_back(s);
      }
      if (!ok) continue;
      for (const auto& s : members) covered.insert(s);
      go(i + 1);
      for (const auto& s : members) covered.erase(s);
    }
  };
  go(0);
  return found;
}

// Random pure complex: `facets` random k-subsets of {0..n-1}, kept maximal.
inline std::vector<cmpart::Face> random_pure(std::mt19937& rng, int n, int k, int facets) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::set<std::vector<int>> chosen;
  for (int t = 0; t < facets; ++t) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> f(pool.begin(), pool.begin() + k);
    std::sort(f.begin(), f.end());
    chosen.insert(f);
  }
  std::vector<cmpart::Face> out;
  for (const auto& f : chosen) {
    std::vector<cmpart::VertexLabel> v(f.begin(), f.end());
    out.emplace_back(std::move(v));
  }
  return out;
}

// Random complex with facets of mixed sizes.
inline std::vector<cmpart::Face> random_mixed(std::mt19937& rng, int n, int max_size, int facets) {
  std::uniform_int_distribution<int> size(1, max_size);
  std::vector<cmpart::Face> out;
  for (int t = 0; t < facets; ++t) {
    auto one = random_pure(rng, n, size(rng), 1);
    out.push_back(one.front());
  }
  return out;
}

}  // namespace oracle
