#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "cmpart/error.hpp"

namespace cmpart {

/// Search limit: search nodes, wall-clock seconds, or both. Default is unlimited.
struct Budget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;

  static Budget unlimited() { return {}; }
  static Budget nodes(std::uint64_t n) { return {n, std::nullopt}; }
  static Budget seconds(double s) { return {std::nullopt, s}; }

  /// "120s" → seconds, "5000000" or "5000000n" → nodes.
  static Budget parse(const std::string& text) {
    if (text.empty()) throw InputError("empty budget");
    try {
      std::size_t used = 0;
      if (text.back() == 's') {
        double s = std::stod(text.substr(0, text.size() - 1), &used);
        if (used + 1 != text.size() || s <= 0) throw InputError("bad budget");
        return seconds(s);
      }
      std::string digits = text.back() == 'n' ? text.substr(0, text.size() - 1) : text;
      auto n = std::stoull(digits, &used);
      if (used != digits.size()) throw InputError("bad budget");
      return nodes(n);
    } catch (const std::logic_error&) {
      throw InputError("budget must look like 60s or 1000000 (nodes): " + text);
    }
  }
};

/// Shared budget accounting for one (possibly parallel) search.
class BudgetMeter {
 public:
  explicit BudgetMeter(Budget b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; returns false once the budget is spent.
  bool tick() {
    std::uint64_t n = ++nodes_;
    if (budget_.max_nodes && n > *budget_.max_nodes) return exhausted();
    if (budget_.max_seconds && (n & 0x3ff) == 0 && elapsed_seconds() > *budget_.max_seconds)
      return exhausted();
    return !exhausted_.load(std::memory_order_relaxed);
  }

  bool exceeded() const { return exhausted_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }
  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool exhausted() {
    exhausted_ = true;
    return false;
  }

  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace cmpart
