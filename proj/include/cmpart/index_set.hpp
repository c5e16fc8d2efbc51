#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace cmpart {

/// Set of dense vertex indices stored as a bit vector.
///
/// Words are trimmed so that no trailing word is zero; equal sets therefore
/// have identical storage regardless of the universe they were built over.
/// There is no fixed upper bound on indices.
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) insert(i);
  }
  explicit IndexSet(std::span<const std::size_t> indices) {
    for (auto i : indices) insert(i);
  }

  void insert(std::size_t i) {
    std::size_t w = i / kWordBits;
    if (w >= words_.size()) words_.resize(w + 1);
    words_[w] |= Word{1} << (i % kWordBits);
  }

  void erase(std::size_t i) {
    std::size_t w = i / kWordBits;
    if (w >= words_.size()) return;
    words_[w] &= ~(Word{1} << (i % kWordBits));
    trim();
  }

  bool contains(std::size_t i) const noexcept {
    std::size_t w = i / kWordBits;
    return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U);
  }

  bool empty() const noexcept { return words_.size() == 0; }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) n += static_cast<std::size_t>(std::popcount(words_[i]));
    return n;
  }

  bool is_subset_of(const IndexSet& other) const noexcept {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const IndexSet& other) const noexcept {
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  IndexSet operator&(const IndexSet& o) const {
    IndexSet r;
    r.words_.resize(std::min(words_.size(), o.words_.size()));
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    r.trim();
    return r;
  }

  IndexSet operator|(const IndexSet& o) const {
    IndexSet r = words_.size() >= o.words_.size() ? *this : o;
    const IndexSet& s = words_.size() >= o.words_.size() ? o : *this;
    for (std::size_t i = 0; i < s.words_.size(); ++i) r.words_[i] |= s.words_[i];
    return r;
  }

  /// Set difference.
  IndexSet operator-(const IndexSet& o) const {
    IndexSet r = *this;
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) r.words_[i] &= ~o.words_[i];
    r.trim();
    return r;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Smallest member; the set must be nonempty.
  std::size_t front() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return 0;
  }

  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) noexcept {
    if (a.words_.size() != b.words_.size()) return false;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (a.words_[i] != b.words_[i]) return false;
    return true;
  }

  /// Canonical face order: by cardinality, then lexicographically on the
  /// sorted index sequence.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      Word wa = i < a.words_.size() ? a.words_[i] : 0;
      Word wb = i < b.words_.size() ? b.words_[i] : 0;
      if (Word diff = wa ^ wb) {
        Word low = diff & (~diff + 1);
        return (wa & low) ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      h ^= words_[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  // Word storage that stays inline up to kInline words (384 indices).
  class Words {
   public:
    static constexpr std::size_t kInline = 6;

    std::size_t size() const noexcept { return size_; }
    Word* data() noexcept { return on_heap_ ? heap_.data() : inline_.data(); }
    const Word* data() const noexcept { return on_heap_ ? heap_.data() : inline_.data(); }
    Word& operator[](std::size_t i) noexcept { return data()[i]; }
    const Word& operator[](std::size_t i) const noexcept { return data()[i]; }
    Word& back() noexcept { return data()[size_ - 1]; }

    void resize(std::size_t n) {
      if (n > kInline && !on_heap_) {
        heap_.assign(inline_.begin(), inline_.begin() + static_cast<std::ptrdiff_t>(size_));
        on_heap_ = true;
      }
      if (on_heap_) {
        if (heap_.size() < n) heap_.resize(n, 0);
        for (std::size_t i = size_; i < n; ++i) heap_[i] = 0;
      } else {
        for (std::size_t i = size_; i < n; ++i) inline_[i] = 0;
      }
      size_ = n;
    }
    void pop_back() noexcept { --size_; }

   private:
    std::array<Word, kInline> inline_{};
    std::vector<Word> heap_;
    std::size_t size_ = 0;
    bool on_heap_ = false;
  };

  void trim() {
    while (words_.size() > 0 && words_.back() == 0) words_.pop_back();
  }

  Words words_;
};

/// Calls `fn` on every subset of `set` (including the empty set and `set`).
/// Intended for faces of simplicial complexes, which are small.
template <typename Fn>
void for_each_subset(const IndexSet& set, Fn&& fn) {
  std::vector<std::size_t> members = set.indices();
  const std::size_t k = members.size();
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    IndexSet sub;
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1U) sub.insert(members[b]);
    fn(sub);
  }
}

}  // namespace cmpart

template <>
struct std::hash<cmpart::IndexSet> {
  std::size_t operator()(const cmpart::IndexSet& s) const noexcept { return s.hash(); }
};
