#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "cmpart/budget.hpp"
#include "cmpart/index_set.hpp"

namespace cmpart {

/// Exact cover over a fixed column set (all columns primary).
///
/// The residual problem after choosing some rows is determined by the set of
/// uncovered columns, so the search works on that set directly. At each node
/// it splits the residual into independent components (columns linked by a
/// live row) and solves them one at a time, and it memoizes residual sets
/// already shown to have no cover. Branching is on the column with the
/// fewest live rows, first in column order on ties.
class ExactCover {
 public:
  enum class Outcome { kFound, kExhausted, kBudget, kStopped };

  ExactCover(std::size_t num_columns, const std::vector<std::vector<std::size_t>>& rows)
      : num_columns_(num_columns), column_rows_(num_columns) {
    rows_.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      IndexSet s;
      for (auto c : rows[r]) {
        s.insert(c);
        column_rows_.at(c).push_back(r);
      }
      rows_.push_back(std::move(s));
    }
    for (std::size_t c = 0; c < num_columns; ++c) open_.insert(c);
  }

  /// Commits row r before searching; false if it clashes with earlier picks.
  bool select(std::size_t r) {
    if (!rows_.at(r).is_subset_of(open_)) return false;
    open_ = open_ - rows_[r];
    chosen_.push_back(r);
    return true;
  }

  /// The branching column of the current residual, or nullopt if it is empty.
  std::optional<std::size_t> choose_column() const {
    if (open_.empty()) return std::nullopt;
    return best_column(open_, live_rows(open_));
  }

  /// Live rows containing column c.
  std::vector<std::size_t> rows_in_column(std::size_t c) const {
    std::vector<std::size_t> out;
    for (auto r : column_rows_.at(c))
      if (rows_[r].is_subset_of(open_)) out.push_back(r);
    return out;
  }

  Outcome solve(BudgetMeter& meter, const std::atomic<bool>* stop = nullptr) {
    meter_ = &meter;
    stop_ = stop;
    return search(open_);
  }

  /// Rows of the cover found (including select()ed rows).
  const std::vector<std::size_t>& solution() const noexcept { return chosen_; }

  /// Cap on memoized dead residuals; beyond it the search continues unmemoized.
  void set_memo_limit(std::size_t n) { memo_limit_ = n; }

 private:
  std::vector<char> live_rows(const IndexSet& open) const {
    std::vector<char> live(rows_.size(), 0);
    open.for_each([&](std::size_t c) {
      for (auto r : column_rows_[c])
        if (!live[r] && rows_[r].is_subset_of(open)) live[r] = 1;
    });
    return live;
  }

  std::size_t best_column(const IndexSet& open, const std::vector<char>& live) const {
    std::size_t best = 0, best_count = SIZE_MAX;
    open.for_each([&](std::size_t c) {
      if (best_count == 0) return;
      std::size_t n = 0;
      for (auto r : column_rows_[c]) n += static_cast<std::size_t>(live[r]);
      if (n < best_count) {
        best_count = n;
        best = c;
      }
    });
    return best;
  }

  std::vector<IndexSet> components(const IndexSet& open, const std::vector<char>& live) const {
    std::vector<std::size_t> parent(num_columns_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!live[r]) continue;
      std::size_t first = rows_[r].front();
      rows_[r].for_each([&](std::size_t c) { parent[find(c)] = find(first); });
    }
    std::vector<IndexSet> parts;
    std::vector<std::size_t> slot(num_columns_, SIZE_MAX);
    open.for_each([&](std::size_t c) {
      std::size_t root = find(c);
      if (slot[root] == SIZE_MAX) {
        slot[root] = parts.size();
        parts.emplace_back();
      }
      parts[slot[root]].insert(c);
    });
    return parts;
  }

  void remember_dead(const IndexSet& open) {
    if (dead_.size() < memo_limit_) dead_.insert(open);
  }

  Outcome search(const IndexSet& open) {
    if (open.empty()) return Outcome::kFound;
    if (stop_ && stop_->load(std::memory_order_relaxed)) return Outcome::kStopped;
    if (!meter_->tick()) return Outcome::kBudget;
    if (dead_.contains(open)) return Outcome::kExhausted;

    auto live = live_rows(open);
    std::size_t c = best_column(open, live);
    bool column_dead = true;
    for (auto r : column_rows_[c])
      if (live[r]) column_dead = false;
    if (column_dead) {
      remember_dead(open);
      return Outcome::kExhausted;
    }

    auto parts = components(open, live);
    if (parts.size() > 1) {
      std::sort(parts.begin(), parts.end(),
                [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
      const std::size_t mark = chosen_.size();
      for (const auto& part : parts) {
        Outcome o = search(part);
        if (o == Outcome::kFound) continue;
        chosen_.resize(mark);
        if (o == Outcome::kExhausted) remember_dead(open);
        return o;
      }
      return Outcome::kFound;
    }

    for (auto r : column_rows_[c]) {
      if (!live[r]) continue;
      chosen_.push_back(r);
      Outcome o = search(open - rows_[r]);
      if (o == Outcome::kFound) return o;
      chosen_.pop_back();
      if (o != Outcome::kExhausted) return o;
    }
    remember_dead(open);
    return Outcome::kExhausted;
  }

  std::size_t num_columns_;
  std::vector<IndexSet> rows_;
  std::vector<std::vector<std::size_t>> column_rows_;
  IndexSet open_;
  std::vector<std::size_t> chosen_;
  std::unordered_set<IndexSet> dead_;
  std::size_t memo_limit_ = std::size_t{1} << 22;
  BudgetMeter* meter_ = nullptr;
  const std::atomic<bool>* stop_ = nullptr;
};

}  // namespace cmpart
