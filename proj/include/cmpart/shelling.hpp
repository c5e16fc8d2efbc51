#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cmpart/budget.hpp"
#include "cmpart/complex.hpp"
#include "cmpart/partition.hpp"

namespace cmpart {

using ShellingOrder = std::vector<Face>;

namespace detail {

// R = {v ∈ F : F \ v lies in an earlier facet}. F has a unique minimal new
// face exactly when R itself is new, and that face is R.
inline std::optional<IndexSet> restriction_face(const IndexSet& f, std::span<const IndexSet> earlier) {
  IndexSet r;
  const std::size_t need = f.size() - (f.empty() ? 0 : 1);
  for (const auto& g : earlier) {
    IndexSet common = f & g;
    if (!f.empty() && common.size() == need) r = r | (f - common);
  }
  for (const auto& g : earlier)
    if (r.is_subset_of(g)) return std::nullopt;
  return r;
}

}  // namespace detail

struct ShellingCheck {
  bool valid = false;
  std::vector<Face> restrictions;  ///< R_i for each step, when valid
  std::optional<std::size_t> failed_step;  ///< 0-based, when invalid
};

/// Checks that each facet adds a unique minimal new face. Throws unless
/// `order` is a permutation of the facets of c.
inline ShellingCheck verify_shelling(const SimplicialComplex& c, const ShellingOrder& order) {
  std::vector<IndexSet> seq;
  for (const auto& f : order) {
    auto s = c.to_index(f);
    if (!s || !std::binary_search(c.index_facets().begin(), c.index_facets().end(), *s))
      throw InputError("shelling order: " + f.to_string() + " is not a facet");
    seq.push_back(*s);
  }
  auto sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != c.index_facets()) throw InputError("shelling order is not a permutation of the facets");
  ShellingCheck out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto r = detail::restriction_face(seq[i], std::span<const IndexSet>(seq).first(i));
    if (!r) {
      out.failed_step = i;
      out.restrictions.clear();
      return out;
    }
    out.restrictions.push_back(c.to_face(*r));
  }
  out.valid = true;
  return out;
}

/// Intervals [R_i, F_i] of a valid shelling.
inline VerifiedPartition partition_from_shelling(const SimplicialComplex& c, const ShellingOrder& order) {
  auto check = verify_shelling(c, order);
  if (!check.valid) throw InputError("partition_from_shelling: not a shelling");
  IntervalPartition p;
  for (std::size_t i = 0; i < order.size(); ++i) p.intervals.push_back({check.restrictions[i], order[i]});
  auto verified = verify_partition(c, p);
  if (!verified) throw std::logic_error("shelling gave an invalid partition: " + *verified.violation);
  return *verified.verified;
}

enum class ShellingStatus { kShellable, kNotShellable, kInconclusive };

inline const char* to_string(ShellingStatus s) {
  switch (s) {
    case ShellingStatus::kShellable: return "shellable";
    case ShellingStatus::kNotShellable: return "not shellable";
    case ShellingStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

struct ShellingVerdict {
  ShellingStatus status = ShellingStatus::kInconclusive;
  std::optional<ShellingOrder> order;
  std::uint64_t nodes = 0;
};

namespace detail {

class ShellingSearch {
 public:
  ShellingSearch(const std::vector<IndexSet>& facets, BudgetMeter& meter)
      : facets_(facets), used_(facets.size(), false), meter_(meter) {}

  // Whether a prefix can be completed depends only on the set of facets used
  // so far, so dead sets are memoized.
  ExactCover::Outcome run() {
    if (prefix_.size() == facets_.size()) return ExactCover::Outcome::kFound;
    if (!meter_.tick()) return ExactCover::Outcome::kBudget;
    if (dead_.contains(used_key_)) return ExactCover::Outcome::kExhausted;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (used_[i] || !admissible(i)) continue;
      push(i);
      auto o = run();
      if (o != ExactCover::Outcome::kExhausted) return o;
      pop(i);
    }
    dead_.insert(used_key_);
    return ExactCover::Outcome::kExhausted;
  }

  const std::vector<std::size_t>& order() const { return prefix_; }

 private:
  bool admissible(std::size_t i) const {
    const IndexSet& f = facets_[i];
    if (prefix_.empty()) return true;
    // Cheap necessary condition: some earlier facet meets f in codimension one.
    bool neighbour = std::any_of(prefix_.begin(), prefix_.end(), [&](std::size_t j) {
      return (f & facets_[j]).size() + 1 == f.size();
    });
    if (!neighbour) return false;
    std::vector<IndexSet> earlier;
    earlier.reserve(prefix_.size());
    for (auto j : prefix_) earlier.push_back(facets_[j]);
    return restriction_face(f, earlier).has_value();
  }

  void push(std::size_t i) {
    used_[i] = true;
    used_key_.insert(i);
    prefix_.push_back(i);
  }
  void pop(std::size_t i) {
    used_[i] = false;
    used_key_.erase(i);
    prefix_.pop_back();
  }

  const std::vector<IndexSet>& facets_;
  std::vector<bool> used_;
  IndexSet used_key_;
  std::vector<std::size_t> prefix_;
  std::unordered_set<IndexSet> dead_;
  BudgetMeter& meter_;
};

}  // namespace detail

/// Complete backtracking search for a shelling order of a pure complex.
inline ShellingVerdict shelling_search(const SimplicialComplex& c, Budget budget = {}) {
  if (!c.is_pure()) throw InputError("shelling search needs a pure complex");
  BudgetMeter meter(budget);
  detail::ShellingSearch search(c.index_facets(), meter);
  ShellingVerdict v;
  auto o = search.run();
  v.nodes = meter.nodes();
  if (o == ExactCover::Outcome::kFound) {
    v.status = ShellingStatus::kShellable;
    ShellingOrder order;
    for (auto i : search.order()) order.push_back(c.to_face(c.index_facets()[i]));
    if (!verify_shelling(c, order).valid) throw std::logic_error("shelling search returned an invalid order");
    v.order = std::move(order);
  } else if (o == ExactCover::Outcome::kExhausted) {
    v.status = ShellingStatus::kNotShellable;
  }
  return v;
}

}  // namespace cmpart
