#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cmpart/error.hpp"

namespace cmpart {

namespace detail {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace detail

/// Face numbers (f_{-1}, f_0, ..., f_{d-1}); `entries()[i]` is f_{i-1}.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    for (auto e : entries_)
      if (e < 0) throw InputError("f-vector entries must be non-negative");
  }

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// d, the number of entries after f_{-1}.
  int d() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  /// Number of faces of dimension k, for -1 <= k; zero past the end.
  std::int64_t count(int k) const {
    auto i = static_cast<std::size_t>(k + 1);
    return i < entries_.size() ? entries_[i] : 0;
  }
  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto e : entries_) s += e;
    return s;
  }
  /// Reduced Euler characteristic -f_{-1} + f_0 - f_1 + ...
  std::int64_t reduced_euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      chi += (i % 2 == 0 ? -1 : 1) * entries_[i];
    return chi;
  }

  std::string to_string() const { return detail::join(entries_); }

  friend bool operator==(const FVector&, const FVector&) = default;

  /// Entrywise difference, padding the shorter vector with zeros.
  friend FVector operator-(const FVector& a, const FVector& b) {
    std::vector<std::int64_t> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = (i < a.size() ? a.entries_[i] : 0) - (i < b.size() ? b.entries_[i] : 0);
    return FVector(std::move(out));
  }

 private:
  std::vector<std::int64_t> entries_;
};

/// (h_0, ..., h_d). Entries may be negative for arbitrary complexes.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  int d() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return entries_.at(i); }
  std::int64_t sum() const {
    std::int64_t s = 0;
    for (auto e : entries_) s += e;
    return s;
  }

  std::string to_string() const { return detail::join(entries_); }

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}, the coefficient match of
/// sum_i f_{i-1} (t-1)^{d-i} = sum_i h_i t^{d-i}.
inline HVector h_vector(const FVector& f) {
  const int d = f.d();
  if (d < 0) return HVector{};
  std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    std::int64_t acc = 0;
    for (int i = 0; i <= k; ++i) {
      std::int64_t term = detail::binomial(d - i, k - i) * f.entries()[static_cast<std::size_t>(i)];
      acc += ((k - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = acc;
  }
  return HVector(std::move(h));
}

/// Inverse of h_vector: f_{j-1} = sum_{i<=j} C(d-i, j-i) h_i.
inline FVector f_from_h(const HVector& h) {
  const int d = h.d();
  if (d < 0) return FVector{};
  std::vector<std::int64_t> f(static_cast<std::size_t>(d) + 1, 0);
  for (int j = 0; j <= d; ++j) {
    std::int64_t acc = 0;
    for (int i = 0; i <= j; ++i) acc += detail::binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(j)] = acc;
  }
  return FVector(std::move(f));
}

inline std::ostream& operator<<(std::ostream& os, const FVector& f) {
  return os << '(' << f.to_string() << ')';
}
inline std::ostream& operator<<(std::ostream& os, const HVector& h) {
  return os << '(' << h.to_string() << ')';
}

}  // namespace cmpart
