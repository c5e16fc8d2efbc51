#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cmpart/complex.hpp"
#include "cmpart/parallel.hpp"

namespace cmpart {

/// Coefficient field GF(p).
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t p) : p_(p) {
    if (p < 2) throw InputError("field characteristic must be a prime");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
      if (p % d == 0) throw InputError(std::to_string(p) + " is not prime");
  }
  std::uint32_t characteristic() const noexcept { return p_; }

 private:
  std::uint32_t p_ = 2;
};

/// Dense matrix over GF(p), row-major.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v % p_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
  }

  ModMatrix operator*(const ModMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw InputError("matrix shapes do not match");
    ModMatrix out(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = (*this)(i, k);
        if (!a) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out.data_[i * o.cols_ + j] =
              static_cast<std::uint32_t>((out.data_[i * o.cols_ + j] + a * o(k, j)) % p_);
      }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank_gf2(const ModMatrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c)) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r][w] & bit)
        for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

inline std::size_t rank_gfp(ModMatrix m) {
  const std::uint64_t p = m.characteristic();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < m.cols(); ++k) {
        auto a = m(pivot, k), b = m(rank, k);
        m.set(pivot, k, b);
        m.set(rank, k, a);
      }
    std::uint64_t inv = pow_mod(m(rank, c), p - 2, p);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      std::uint64_t factor = m(r, c) * inv % p;
      if (!factor) continue;
      for (std::size_t k = c; k < m.cols(); ++k)
        m.set(r, k, static_cast<std::uint32_t>((m(r, k) + (p - factor) * m(rank, k)) % p));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over GF(p); bit-packed elimination when p = 2.
inline std::size_t rank(const ModMatrix& m) {
  return m.characteristic() == 2 ? detail::rank_gf2(m) : detail::rank_gfp(m);
}

/// Reduced boundary map ∂_k : C_k → C_{k-1}. Rows are the (k-1)-faces and
/// columns the k-faces, both in canonical order; removing the i-th vertex
/// (0-based, in sorted order) contributes (-1)^i. ∂_0 sends each vertex to ∅.
inline ModMatrix boundary_matrix(const SimplicialComplex& c, int k, FieldSpec field = {}) {
  if (k < 0 || k > c.dimension())
    throw InputError("boundary: dimension " + std::to_string(k) + " outside [0, " +
                     std::to_string(c.dimension()) + "]");
  const std::uint32_t p = field.characteristic();
  auto lower = c.index_faces(k - 1);
  auto upper = c.index_faces(k);
  ModMatrix m(lower.size(), upper.size(), p);
  for (std::size_t j = 0; j < upper.size(); ++j) {
    std::size_t i = 0;
    upper[j].for_each([&](std::size_t v) {
      IndexSet facet = upper[j];
      facet.erase(v);
      auto row = c.position_in_dimension(facet);
      m.set(*row, j, (i % 2 == 0) ? 1U : p - 1);
      ++i;
    });
  }
  return m;
}

/// β̃_{-1}, β̃_0, ..., β̃_{dim}; `at(i)` reads β̃_i.
class BettiNumbers {
 public:
  BettiNumbers() = default;
  explicit BettiNumbers(std::vector<std::int64_t> values) : values_(std::move(values)) {}

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::int64_t at(int i) const {
    auto k = static_cast<std::size_t>(i + 1);
    return (i >= -1 && k < values_.size()) ? values_[k] : 0;
  }
  /// Highest index stored.
  int top() const noexcept { return static_cast<int>(values_.size()) - 2; }
  std::int64_t alternating_sum() const {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < values_.size(); ++k) s += (k % 2 == 0 ? -1 : 1) * values_[k];
    return s;
  }
  bool all_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](auto x) { return x == 0; });
  }
  std::string to_string() const { return detail::join(values_); }

  friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Reduced Betti numbers over GF(p): β̃_i = nullity ∂_i − rank ∂_{i+1}.
inline BettiNumbers betti(const SimplicialComplex& c, FieldSpec field = {}) {
  if (c.is_void()) return BettiNumbers{};
  const int dim = c.dimension();
  // Simplices short-circuit: {∅} has β̃_{-1} = 1, larger simplices are acyclic.
  if (c.num_facets() == 1) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(dim) + 2, 0);
    if (dim == -1) v[0] = 1;
    return BettiNumbers(std::move(v));
  }
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(dim) + 3, 0);  // ranks[k+1] = rank ∂_k
  for (int k = 0; k <= dim; ++k)
    ranks[static_cast<std::size_t>(k) + 1] =
        static_cast<std::int64_t>(rank(boundary_matrix(c, k, field)));
  const FVector f = c.f_vector();
  std::vector<std::int64_t> out;
  for (int i = -1; i <= dim; ++i) {
    auto k = static_cast<std::size_t>(i + 1);
    out.push_back(f.count(i) - ranks[k] - ranks[k + 1]);
  }
  return BettiNumbers(std::move(out));
}

struct BettiRecord {
  Face face;
  int link_dimension = -1;
  BettiNumbers betti;
};

using BettiTable = std::vector<BettiRecord>;

/// Betti numbers of the link of each given face.
inline BettiTable betti_table(const SimplicialComplex& c, const std::vector<Face>& faces,
                              FieldSpec field = {}) {
  BettiTable out;
  for (const auto& f : faces) {
    auto lk = link(c, f);
    out.push_back({f, lk.dimension(), betti(lk, field)});
  }
  return out;
}

struct CohenMacaulayResult {
  bool cohen_macaulay = true;
  std::optional<BettiRecord> refutation;  ///< first failing face, if any
  std::size_t faces_checked = 0;
};

/// Reisner's test: for every face F (∅ included), β̃_i(lk F) = 0 for all
/// i ≠ dim(c) − #F. Faces are scanned from the top dimension down; the
/// reported refutation is the first failure in that order.
inline CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& c, FieldSpec field = {},
                                             unsigned workers = worker_count()) {
  CohenMacaulayResult result;
  if (c.is_void()) return result;
  std::vector<IndexSet> order;
  for (int k = c.dimension(); k >= -1; --k)
    for (const auto& f : c.index_faces(k)) order.push_back(f);
  result.faces_checked = order.size();
  const int d = c.dimension() + 1;

  std::mutex mu;
  std::optional<std::size_t> first_bad;
  std::optional<BettiRecord> record;
  parallel_for(order.size(), workers, [&](std::size_t idx) {
    {
      std::lock_guard lock(mu);
      if (first_bad && *first_bad < idx) return;
    }
    const IndexSet& s = order[idx];
    auto lk = link_of_index(c, s);
    BettiNumbers b = betti(lk, field);
    const int allowed = d - 1 - static_cast<int>(s.size());
    bool ok = true;
    for (int i = -1; i <= b.top(); ++i)
      if (i != allowed && b.at(i) != 0) ok = false;
    if (!ok) {
      std::lock_guard lock(mu);
      if (!first_bad || idx < *first_bad) {
        first_bad = idx;
        record = BettiRecord{c.to_face(s), lk.dimension(), b};
      }
    }
  });
  if (record) {
    result.cohen_macaulay = false;
    result.refutation = std::move(record);
  }
  return result;
}

}  // namespace cmpart
