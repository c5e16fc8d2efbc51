#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "cmpart/error.hpp"

namespace cmpart {

/// A vertex name: an integer or string base plus an optional copy tag.
///
/// Copy tags distinguish the copies produced by gluing; they serialize as a
/// `.k` suffix, so vertex 1 in copy 3 reads and writes as `1.3`.
class VertexLabel {
 public:
  using Base = std::variant<std::int64_t, std::string>;

  VertexLabel() : base_(std::int64_t{0}) {}
  VertexLabel(std::int64_t base) : base_(base) {}  // NOLINT: implicit on purpose
  VertexLabel(int base) : base_(std::int64_t{base}) {}  // NOLINT
  VertexLabel(std::int64_t base, std::optional<std::uint32_t> tag)
      : base_(base), copy_tag_(tag) {}
  VertexLabel(Base base, std::optional<std::uint32_t> tag)
      : base_(std::move(base)), copy_tag_(tag) {}

  /// Parses a file token. Integer-looking bases become integers; a trailing
  /// `.<digits>` becomes the copy tag.
  static VertexLabel parse(std::string_view token) {
    if (token.empty()) throw InputError("empty vertex label");
    std::optional<std::uint32_t> tag;
    std::string_view base = token;
    if (auto dot = token.rfind('.'); dot != std::string_view::npos && dot > 0 &&
                                     dot + 1 < token.size()) {
      std::string_view suffix = token.substr(dot + 1);
      if (is_digits(suffix)) {
        std::uint32_t value = 0;
        auto [ptr, ec] =
            std::from_chars(suffix.data(), suffix.data() + suffix.size(), value);
        if (ec == std::errc{} && ptr == suffix.data() + suffix.size()) {
          tag = value;
          base = token.substr(0, dot);
        }
      }
    }
    return VertexLabel(parse_base(base), tag);
  }

  const Base& base() const noexcept { return base_; }
  std::optional<std::uint32_t> copy_tag() const noexcept { return copy_tag_; }
  bool is_integer() const noexcept { return std::holds_alternative<std::int64_t>(base_); }

  VertexLabel with_copy_tag(std::optional<std::uint32_t> tag) const {
    return VertexLabel(base_, tag);
  }
  VertexLabel untagged() const { return VertexLabel(base_, std::nullopt); }

  std::string to_string() const {
    std::string out = std::visit(
        [](const auto& b) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(b)>, std::string>)
            return b;
          else
            return std::to_string(b);
        },
        base_);
    if (copy_tag_) out += "." + std::to_string(*copy_tag_);
    return out;
  }

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
  friend std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.copy_tag_ <=> b.copy_tag_;
  }

 private:
  static bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  }

  static Base parse_base(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    // Leading zeros stay strings so that labels round-trip byte for byte.
    bool canonical = is_digits(digits) && (digits.size() == 1 || digits.front() != '0');
    if (canonical) {
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec == std::errc{} && ptr == s.data() + s.size()) return value;
    }
    return std::string(s);
  }

  Base base_;
  std::optional<std::uint32_t> copy_tag_;
};

}  // namespace cmpart

template <>
struct std::hash<cmpart::VertexLabel> {
  std::size_t operator()(const cmpart::VertexLabel& v) const noexcept {
    std::size_t h = std::hash<cmpart::VertexLabel::Base>{}(v.base());
    std::size_t t = v.copy_tag() ? std::hash<std::uint32_t>{}(*v.copy_tag()) + 1 : 0;
    return h ^ (t + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
