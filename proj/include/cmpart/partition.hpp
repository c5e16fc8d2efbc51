#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cmpart/budget.hpp"
#include "cmpart/exact_cover.hpp"
#include "cmpart/parallel.hpp"
#include "cmpart/relative.hpp"

namespace cmpart {

/// Boolean interval [bottom, top] = {G : bottom ⊆ G ⊆ top}.
struct Interval {
  Face bottom;
  Face top;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

/// Σ 2^(|F|−|R|) over the intervals: the number of faces they cover when
/// they are disjoint.
inline std::int64_t interval_face_count(const IntervalPartition& p) {
  std::int64_t n = 0;
  for (const auto& iv : p.intervals)
    n += std::int64_t{1} << (iv.top.size() - std::min(iv.bottom.size(), iv.top.size()));
  return n;
}

struct PartitionCheck;

/// An IntervalPartition that has passed verify_partition against its target.
class VerifiedPartition {
 public:
  const IntervalPartition& partition() const noexcept { return partition_; }
  const std::vector<Interval>& intervals() const noexcept { return partition_.intervals; }

 private:
  explicit VerifiedPartition(IntervalPartition p) : partition_(std::move(p)) {}
  friend PartitionCheck verify_partition(const RelativeComplex&, const IntervalPartition&);

  IntervalPartition partition_;
};

struct PartitionCheck {
  std::optional<VerifiedPartition> verified;
  std::optional<std::string> violation;  ///< first problem found
  explicit operator bool() const noexcept { return verified.has_value(); }
};

/// Checks that the intervals are well formed, that their tops are exactly the
/// facets (each once), that they are pairwise disjoint, and that they cover
/// the face set of x.
inline PartitionCheck verify_partition(const RelativeComplex& x, const IntervalPartition& p) {
  const SimplicialComplex& total = x.total();
  auto fail = [](std::string why) {
    PartitionCheck r;
    r.violation = std::move(why);
    return r;
  };
  std::map<IndexSet, int> tops;
  for (const auto& f : x.index_facets()) tops.emplace(f, 0);
  std::unordered_map<IndexSet, std::size_t> owner;
  for (std::size_t i = 0; i < p.intervals.size(); ++i) {
    const auto& iv = p.intervals[i];
    const std::string name = "interval [" + iv.bottom.to_string() + " | " + iv.top.to_string() + "]";
    auto top = total.to_index(iv.top);
    if (!top || !tops.contains(*top)) return fail(name + ": top is not a facet");
    if (++tops[*top] > 1) return fail(name + ": facet used as a top twice");
    if (!iv.bottom.is_subset_of(iv.top)) return fail(name + ": bottom is not contained in top");
    IndexSet bottom = *total.to_index(iv.bottom);
    IndexSet free_part = *top - bottom;
    bool removed_hit = false;
    std::optional<std::string> overlap;
    for_each_subset(free_part, [&](const IndexSet& extra) {
      IndexSet g = bottom | extra;
      if (x.in_removed(g)) removed_hit = true;
      auto [it, fresh] = owner.emplace(g, i);
      if (!fresh && !overlap) overlap = total.to_face(g).to_string();
    });
    if (removed_hit) return fail(name + ": face in removed part");
    if (overlap) return fail(name + ": overlaps an earlier interval at {" + *overlap + "}");
  }
  for (const auto& [f, n] : tops)
    if (n == 0) return fail("facet {" + total.to_face(f).to_string() + "} is not the top of any interval");
  for (const auto& g : x.index_faces())
    if (!owner.contains(g)) return fail("face {" + total.to_face(g).to_string() + "} is not covered");
  PartitionCheck r;
  r.verified = VerifiedPartition(p);
  return r;
}

inline PartitionCheck verify_partition(const SimplicialComplex& c, const IntervalPartition& p) {
  return verify_partition(RelativeComplex(c), p);
}

/// h_i = number of intervals whose bottom has i vertices, for i = 0..d.
inline HVector h_from_partition(const VerifiedPartition& p, int d) {
  if (d < 0) throw InputError("h_from_partition: d must be non-negative");
  std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& iv : p.intervals()) {
    if (iv.bottom.size() > static_cast<std::size_t>(d))
      throw InputError("h_from_partition: bottom larger than d");
    ++h[iv.bottom.size()];
  }
  return HVector(std::move(h));
}

/// Verifies first; an invalid partition is an input error.
inline HVector h_from_partition(const RelativeComplex& x, const IntervalPartition& p, int d) {
  auto check = verify_partition(x, p);
  if (!check) throw InputError("h_from_partition: unverified partition: " + *check.violation);
  return h_from_partition(*check.verified, d);
}

/// Exact-cover model of partitionability. Columns are the faces of x (in
/// canonical order) followed by one column per facet; each row is an
/// interval [R, F] with F a facet and R ⊆ F a face of x.
struct PartitionModel {
  std::vector<IndexSet> faces;
  std::vector<IndexSet> facets;
  std::vector<Interval> row_intervals;
  std::vector<std::vector<std::size_t>> rows;

  std::size_t num_columns() const { return faces.size() + facets.size(); }
};

inline PartitionModel build_partition_model(const RelativeComplex& x) {
  PartitionModel m;
  m.faces = x.index_faces();
  m.facets = x.index_facets();
  std::unordered_map<IndexSet, std::size_t> column;
  for (std::size_t i = 0; i < m.faces.size(); ++i) column.emplace(m.faces[i], i);
  const auto& total = x.total();
  for (std::size_t fi = 0; fi < m.facets.size(); ++fi) {
    const IndexSet& top = m.facets[fi];
    std::vector<IndexSet> bottoms;
    for_each_subset(top, [&](const IndexSet& r) {
      // Γ is closed downward, so [R, F] avoids Γ exactly when R does.
      if (!x.in_removed(r)) bottoms.push_back(r);
    });
    std::sort(bottoms.begin(), bottoms.end());
    for (const auto& r : bottoms) {
      std::vector<std::size_t> cols;
      for_each_subset(top - r, [&](const IndexSet& extra) { cols.push_back(column.at(r | extra)); });
      std::sort(cols.begin(), cols.end());
      cols.push_back(m.faces.size() + fi);
      m.rows.push_back(std::move(cols));
      m.row_intervals.push_back({total.to_face(r), total.to_face(top)});
    }
  }
  return m;
}

/// Plain-text dump of the exact-cover instance:
///
///     columns <n>
///     c <id> face <labels...>      (or `facet`)
///     rows <m>
///     r <id> <column ids...>
inline void write_exact_cover(std::ostream& os, const RelativeComplex& x) {
  PartitionModel m = build_partition_model(x);
  const auto& total = x.total();
  os << "# exact cover: select rows so that every column is hit exactly once\n";
  os << "columns " << m.num_columns() << '\n';
  for (std::size_t i = 0; i < m.faces.size(); ++i)
    os << "c " << i << " face " << total.to_face(m.faces[i]).to_string() << '\n';
  for (std::size_t i = 0; i < m.facets.size(); ++i)
    os << "c " << m.faces.size() + i << " facet " << total.to_face(m.facets[i]).to_string() << '\n';
  os << "rows " << m.rows.size() << '\n';
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    os << "r " << r;
    for (auto c : m.rows[r]) os << ' ' << c;
    os << "  # " << m.row_intervals[r].bottom.to_string() << " | " << m.row_intervals[r].top.to_string()
       << '\n';
  }
}

enum class PartitionStatus { kPartitionable, kNotPartitionable, kInconclusive };

inline const char* to_string(PartitionStatus s) {
  switch (s) {
    case PartitionStatus::kPartitionable: return "partitionable";
    case PartitionStatus::kNotPartitionable: return "not partitionable";
    case PartitionStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

struct PartitionVerdict {
  PartitionStatus status = PartitionStatus::kInconclusive;
  std::optional<VerifiedPartition> certificate;
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::size_t blocks = 0;  ///< > 0 when the search ran block by block
};

struct PartitionOptions {
  Budget budget;
  unsigned workers = worker_count();
  /// Shared vertices for block decomposition. When unset and `auto_separator`
  /// holds, the untagged vertices are used if some vertex carries a copy tag
  /// (the shape produced by glue_copies).
  std::optional<std::vector<VertexLabel>> separator;
  bool auto_separator = true;
};

/// Split of the exact-cover columns induced by a set W of shared vertices.
/// Blocks are the connected components of the graph after deleting W; a
/// face (or facet) with a vertex outside W belongs to the block of that
/// vertex, and faces inside W are separator columns. Every row then touches
/// one block at most, so blocks interact only through separator columns.
struct BlockDecomposition {
  std::vector<int> column_block;                ///< -1 for separator columns
  std::vector<std::size_t> separator_columns;   ///< model columns, ascending
  std::vector<int> separator_slot;              ///< model column → slot or -1
  std::size_t num_blocks = 0;
};

inline std::optional<BlockDecomposition> decompose(const RelativeComplex& x, const PartitionModel& m,
                                                   const std::vector<VertexLabel>& shared) {
  const auto& total = x.total();
  const std::size_t n = total.num_vertices();
  std::vector<bool> in_w(n, false);
  for (const auto& v : shared)
    if (auto i = total.vertex_index(v)) in_w[*i] = true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& f : total.index_facets()) {
    std::optional<std::size_t> first;
    f.for_each([&](std::size_t v) {
      if (in_w[v]) return;
      if (!first) first = v;
      else parent[find(v)] = find(*first);
    });
  }
  std::vector<int> block_of(n, -1);
  std::size_t blocks = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_w[v]) continue;
    std::size_t r = find(v);
    if (block_of[r] < 0) block_of[r] = static_cast<int>(blocks++);
    block_of[v] = block_of[r];
  }
  if (blocks < 2) return std::nullopt;
  BlockDecomposition d;
  d.num_blocks = blocks;
  auto block_of_set = [&](const IndexSet& s) {
    int b = -1;
    s.for_each([&](std::size_t v) {
      if (b < 0 && !in_w[v]) b = block_of[v];
    });
    return b;
  };
  d.column_block.resize(m.num_columns());
  d.separator_slot.assign(m.num_columns(), -1);
  for (std::size_t i = 0; i < m.faces.size(); ++i) d.column_block[i] = block_of_set(m.faces[i]);
  for (std::size_t i = 0; i < m.facets.size(); ++i)
    d.column_block[m.faces.size() + i] = block_of_set(m.facets[i]);
  for (std::size_t c = 0; c < m.num_columns(); ++c)
    if (d.column_block[c] < 0) {
      d.separator_slot[c] = static_cast<int>(d.separator_columns.size());
      d.separator_columns.push_back(c);
    }
  return d;
}

namespace detail {

// For one block: every set T of separator columns such that some choice of
// rows covers all block columns exactly once and T exactly once. Memoized
// on the set of block columns still open.
class TraceEnumerator {
 public:
  TraceEnumerator(const PartitionModel& m, const BlockDecomposition& d, int block, BudgetMeter& meter,
                  const std::atomic<bool>& stop)
      : meter_(meter), stop_(stop), column_rows_(m.num_columns()) {
    for (std::size_t c = 0; c < m.num_columns(); ++c)
      if (d.column_block[c] == block) open_.insert(c);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (d.column_block[m.rows[r].back()] != block) continue;
      IndexSet own, sep;
      for (auto c : m.rows[r]) {
        if (d.separator_slot[c] >= 0) {
          sep.insert(static_cast<std::size_t>(d.separator_slot[c]));
        } else {
          own.insert(c);
          column_rows_[c].push_back(own_.size());
        }
      }
      own_.push_back(std::move(own));
      sep_.push_back(std::move(sep));
    }
  }

  /// nullopt if the budget ran out.
  std::optional<std::vector<IndexSet>> run() {
    const auto* out = traces(open_);
    if (!out) return std::nullopt;
    return *out;
  }

 private:
  const std::vector<IndexSet>* traces(const IndexSet& open) {
    if (auto it = memo_.find(open); it != memo_.end()) return &it->second;
    if (stop_.load(std::memory_order_relaxed) || !meter_.tick()) return nullptr;
    std::vector<IndexSet> acc;
    if (open.empty()) {
      acc.emplace_back();
    } else {
      std::size_t best = 0, best_count = SIZE_MAX;
      open.for_each([&](std::size_t c) {
        if (best_count == 0) return;
        std::size_t count = 0;
        for (auto i : column_rows_[c]) count += own_[i].is_subset_of(open) ? 1 : 0;
        if (count < best_count) {
          best_count = count;
          best = c;
        }
      });
      for (auto i : column_rows_[best]) {
        if (!own_[i].is_subset_of(open)) continue;
        const auto* rest = traces(open - own_[i]);
        if (!rest) return nullptr;
        for (const auto& t : *rest)
          if (!t.intersects(sep_[i])) acc.push_back(t | sep_[i]);
      }
      std::sort(acc.begin(), acc.end());
      acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    }
    return &memo_.emplace(open, std::move(acc)).first->second;
  }

  BudgetMeter& meter_;
  const std::atomic<bool>& stop_;
  std::vector<std::vector<std::size_t>> column_rows_;
  IndexSet open_;
  std::vector<IndexSet> own_, sep_;
  std::unordered_map<IndexSet, std::vector<IndexSet>> memo_;
};

// Picks one trace per block so that the traces are pairwise disjoint and,
// together with separator-only rows, cover every separator column once.
// Blocks are taken in order of increasing trace count; dead (block, covered)
// states are memoized.
class TraceCombiner {
 public:
  TraceCombiner(const PartitionModel& m, const BlockDecomposition& d,
                const std::vector<std::optional<std::vector<IndexSet>>>& traces,
                std::vector<std::size_t> separator_rows, BudgetMeter& meter)
      : model_(m), decomposition_(d), separator_rows_(std::move(separator_rows)), meter_(meter) {
    for (std::size_t b = 0; b < traces.size(); ++b) order_.push_back(b);
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t a, std::size_t b) { return traces[a]->size() < traces[b]->size(); });
    for (auto b : order_) traces_.push_back(&*traces[b]);
    for (std::size_t i = 0; i < d.separator_columns.size(); ++i) all_.insert(i);
    if (separator_rows_.empty() && !traces_.empty())
      last_.insert(traces_.back()->begin(), traces_.back()->end());
    picked_.resize(traces_.size());
  }

  ExactCover::Outcome run() { return extend(0, IndexSet{}); }

  const IndexSet& chosen_trace(std::size_t block) const {
    auto pos = static_cast<std::size_t>(std::find(order_.begin(), order_.end(), block) - order_.begin());
    return picked_[pos];
  }
  /// Model rows used for separator columns left over by the traces.
  const std::vector<std::size_t>& separator_cover() const { return rest_cover_; }

 private:
  ExactCover::Outcome extend(std::size_t level, const IndexSet& covered) {
    if (!meter_.tick()) return ExactCover::Outcome::kBudget;
    if (level == traces_.size()) return finish(covered);
    if (dead_[level].contains(covered)) return ExactCover::Outcome::kExhausted;
    if (level + 1 == traces_.size() && separator_rows_.empty()) {
      IndexSet need = all_ - covered;
      if (last_.contains(need)) {
        picked_[level] = need;
        return ExactCover::Outcome::kFound;
      }
    } else {
      for (const auto& t : *traces_[level]) {
        if (t.intersects(covered)) continue;
        auto o = extend(level + 1, covered | t);
        if (o == ExactCover::Outcome::kFound) {
          picked_[level] = t;
          return o;
        }
        if (o != ExactCover::Outcome::kExhausted) return o;
      }
    }
    dead_[level].insert(covered);
    return ExactCover::Outcome::kExhausted;
  }

  ExactCover::Outcome finish(const IndexSet& covered) {
    IndexSet need = all_ - covered;
    if (need.empty()) return ExactCover::Outcome::kFound;
    std::vector<std::size_t> slot_of(decomposition_.separator_columns.size(), SIZE_MAX);
    std::vector<std::size_t> cols;
    need.for_each([&](std::size_t s) {
      slot_of[s] = cols.size();
      cols.push_back(s);
    });
    std::vector<std::vector<std::size_t>> rows;
    std::vector<std::size_t> origin;
    for (auto r : separator_rows_) {
      std::vector<std::size_t> local;
      bool inside = true;
      for (auto c : model_.rows[r]) {
        auto s = static_cast<std::size_t>(decomposition_.separator_slot[c]);
        if (slot_of[s] == SIZE_MAX) {
          inside = false;
          break;
        }
        local.push_back(slot_of[s]);
      }
      if (!inside) continue;
      rows.push_back(std::move(local));
      origin.push_back(r);
    }
    ExactCover ec(cols.size(), rows);
    auto o = ec.solve(meter_);
    if (o == ExactCover::Outcome::kFound) {
      rest_cover_.clear();
      for (auto r : ec.solution()) rest_cover_.push_back(origin[r]);
    }
    return o;
  }

  const PartitionModel& model_;
  const BlockDecomposition& decomposition_;
  std::vector<std::size_t> separator_rows_;
  BudgetMeter& meter_;
  std::vector<std::size_t> order_;
  std::vector<const std::vector<IndexSet>*> traces_;
  std::unordered_set<IndexSet> last_;
  IndexSet all_;
  std::vector<IndexSet> picked_;
  std::vector<std::size_t> rest_cover_;
  std::unordered_map<std::size_t, std::unordered_set<IndexSet>> dead_;
};

// Solves the exact cover restricted to `columns`, using only rows inside it.
inline std::optional<std::vector<std::size_t>> cover_exactly(const PartitionModel& m, const IndexSet& columns) {
  std::vector<std::size_t> local(m.num_columns(), SIZE_MAX);
  std::size_t k = 0;
  columns.for_each([&](std::size_t c) { local[c] = k++; });
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::size_t> origin;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::vector<std::size_t> cols;
    bool inside = true;
    for (auto c : m.rows[r]) {
      if (local[c] == SIZE_MAX) {
        inside = false;
        break;
      }
      cols.push_back(local[c]);
    }
    if (!inside) continue;
    rows.push_back(std::move(cols));
    origin.push_back(r);
  }
  ExactCover ec(k, rows);
  BudgetMeter meter(Budget::unlimited());
  if (ec.solve(meter) != ExactCover::Outcome::kFound) return std::nullopt;
  std::vector<std::size_t> out;
  for (auto r : ec.solution()) out.push_back(origin[r]);
  return out;
}

inline std::vector<VertexLabel> untagged_if_glued(const RelativeComplex& x) {
  const auto& vs = x.total().vertices();
  bool tagged = std::any_of(vs.begin(), vs.end(), [](const VertexLabel& v) { return v.copy_tag().has_value(); });
  std::vector<VertexLabel> out;
  if (!tagged) return out;
  for (const auto& v : vs)
    if (!v.copy_tag()) out.push_back(v);
  return out;
}

}  // namespace detail

/// Exact decision of partitionability by exact cover: one column per face of
/// x and per facet, one row per interval [R, F] inside the face set.
///
/// With a block decomposition (see PartitionOptions::separator) each block's
/// feasible separator traces are enumerated independently, in parallel when
/// workers > 1, and a second exact cover picks one trace per block. Without
/// one, a single search runs; with several workers the rows of its first
/// branching column are split among them. In all modes a certificate ends
/// the search, and a refutation requires every branch to be exhausted.
inline PartitionVerdict decide_partitionable(const RelativeComplex& x, const PartitionOptions& opts) {
  if (!x.is_pure()) throw InputError("partitionability is only defined for pure complexes");
  PartitionModel model = build_partition_model(x);
  BudgetMeter meter(opts.budget);
  PartitionVerdict verdict;
  std::atomic<bool> stop{false};

  auto certificate_from = [&](const std::vector<std::size_t>& chosen) {
    IntervalPartition p;
    for (auto r : chosen) p.intervals.push_back(model.row_intervals[r]);
    std::sort(p.intervals.begin(), p.intervals.end(),
              [](const Interval& a, const Interval& b) { return a.top < b.top; });
    auto check = verify_partition(x, p);
    if (!check) throw std::logic_error("exact cover produced an invalid partition: " + *check.violation);
    return *check.verified;
  };
  auto finish = [&] {
    verdict.nodes = meter.nodes();
    verdict.seconds = meter.elapsed_seconds();
    return verdict;
  };

  std::vector<VertexLabel> shared =
      opts.separator ? *opts.separator
                     : (opts.auto_separator ? detail::untagged_if_glued(x) : std::vector<VertexLabel>{});
  std::optional<BlockDecomposition> blocks;
  if (!shared.empty()) blocks = decompose(x, model, shared);

  if (blocks) {
    verdict.blocks = blocks->num_blocks;
    std::vector<std::optional<std::vector<IndexSet>>> traces(blocks->num_blocks);
    parallel_for(blocks->num_blocks, opts.workers, [&](std::size_t b) {
      detail::TraceEnumerator en(model, *blocks, static_cast<int>(b), meter, stop);
      traces[b] = en.run();
      if (traces[b] && traces[b]->empty()) stop = true;  // this block alone is already infeasible
    });
    bool some_block_empty = false;
    for (const auto& t : traces) {
      if (t && t->empty()) some_block_empty = true;
    }
    if (some_block_empty) {
      verdict.status = PartitionStatus::kNotPartitionable;
      return finish();
    }
    for (const auto& t : traces)
      if (!t) return finish();

    std::vector<std::size_t> separator_rows;  // intervals lying wholly in the separator
    for (std::size_t r = 0; r < model.rows.size(); ++r)
      if (blocks->column_block[model.rows[r].back()] < 0) separator_rows.push_back(r);
    detail::TraceCombiner combiner(model, *blocks, traces, separator_rows, meter);
    auto outcome = combiner.run();
    if (outcome == ExactCover::Outcome::kExhausted) {
      verdict.status = PartitionStatus::kNotPartitionable;
    } else if (outcome == ExactCover::Outcome::kFound) {
      std::vector<std::size_t> chosen = combiner.separator_cover();
      for (std::size_t b = 0; b < blocks->num_blocks; ++b) {
        IndexSet cols;
        for (std::size_t c = 0; c < model.num_columns(); ++c)
          if (blocks->column_block[c] == static_cast<int>(b)) cols.insert(c);
        combiner.chosen_trace(b).for_each([&](std::size_t slot) { cols.insert(blocks->separator_columns[slot]); });
        auto part = detail::cover_exactly(model, cols);
        if (!part) throw std::logic_error("block trace could not be realized");
        chosen.insert(chosen.end(), part->begin(), part->end());
      }
      verdict.status = PartitionStatus::kPartitionable;
      verdict.certificate = certificate_from(chosen);
    }
    return finish();
  }

  ExactCover root(model.num_columns(), model.rows);
  auto branch_column = root.choose_column();
  std::vector<std::size_t> branches =
      branch_column ? root.rows_in_column(*branch_column) : std::vector<std::size_t>{};

  if (opts.workers <= 1 || branches.size() <= 1) {
    auto outcome = root.solve(meter);
    if (outcome == ExactCover::Outcome::kFound) {
      verdict.status = PartitionStatus::kPartitionable;
      verdict.certificate = certificate_from(root.solution());
    } else if (outcome == ExactCover::Outcome::kExhausted) {
      verdict.status = PartitionStatus::kNotPartitionable;
    }
    return finish();
  }

  std::mutex mu;
  std::optional<std::vector<std::size_t>> found;
  std::atomic<bool> incomplete{false};
  parallel_for(branches.size(), opts.workers, [&](std::size_t b) {
    if (stop.load()) return;
    ExactCover ec(model.num_columns(), model.rows);
    ec.select(branches[b]);
    auto outcome = ec.solve(meter, &stop);
    if (outcome == ExactCover::Outcome::kFound) {
      std::lock_guard lock(mu);
      if (!found) found = ec.solution();
      stop = true;
    } else if (outcome != ExactCover::Outcome::kExhausted) {
      incomplete = true;
    }
  });
  if (found) {
    verdict.status = PartitionStatus::kPartitionable;
    verdict.certificate = certificate_from(*found);
  } else if (!incomplete) {
    verdict.status = PartitionStatus::kNotPartitionable;
  }
  return finish();
}

inline PartitionVerdict decide_partitionable(const RelativeComplex& x, Budget budget = {},
                                             unsigned workers = worker_count()) {
  PartitionOptions opts;
  opts.budget = budget;
  opts.workers = workers;
  return decide_partitionable(x, opts);
}

inline PartitionVerdict decide_partitionable(const SimplicialComplex& c, Budget budget = {},
                                             unsigned workers = worker_count()) {
  return decide_partitionable(RelativeComplex(c), budget, workers);
}

inline PartitionVerdict decide_partitionable(const SimplicialComplex& c, const PartitionOptions& opts) {
  return decide_partitionable(RelativeComplex(c), opts);
}

}  // namespace cmpart
