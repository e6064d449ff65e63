#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "laycon/errors.hpp"
#include "laycon/graph.hpp"
#include "laycon/spectral.hpp"

namespace laycon {

// "equals one" and "strictly below one" bands for the computed connectivity.
// A value inside the gap between them is refused rather than classified.
constexpr double kPreservedTol = 1e-8;
constexpr double kDegradedTol = 1e-6;

enum class Prediction { preserved, degraded, withheld };

inline const char* to_string(Prediction p) {
  switch (p) {
    case Prediction::preserved: return "preserved";
    case Prediction::degraded: return "degraded";
    default: return "withheld";
  }
}

struct RemovalReport {
  std::vector<std::string> removed; // sorted lexicographically
  bool condition1_holds = false;
  std::vector<std::string> witnesses; // nodes below layer 1 left with no upper neighbor
  Prediction predicted = Prediction::withheld;
  std::optional<double> lambda2;  // unset when the subgraph has no second eigenvalue
  std::optional<bool> consistent; // unset when withheld or lambda2 unset
};

namespace detail {

inline std::vector<std::string> zero_degree_witnesses(const LayeredGraph& g) {
  std::vector<std::string> out;
  for (int li = 1; li < g.layer_count(); ++li)
    for (NodeIndex v : g.layer(li))
      if (g.from_above_degree(v) == 0) out.push_back(g.base().label(v));
  std::sort(out.begin(), out.end());
  return out;
}

// True = "equals one", false = "below one". Values in the indeterminate gap
// band are a hard error: the dichotomy is exact, so landing there means
// something is wrong with the computation, not with the graph.
inline bool classify_lambda2(double lambda2) {
  if (std::abs(lambda2 - 1.0) <= kPreservedTol) return true;
  if (lambda2 <= 1.0 - kDegradedTol) return false;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", lambda2);
  throw NumericalError(std::string("computed connectivity ") + buf +
                       " falls in the indeterminate band below 1");
}

} // namespace detail

// Classify one removal set: nodes left without any upper-layer neighbor
// predict degradation, an empty witness set predicts preservation. The
// prediction is withheld when the overlap condition fails (the dichotomy is
// only guaranteed under it); the connectivity is still computed and reported.
inline RemovalReport classify_removal(const LayeredGraph& g,
                                      const std::vector<std::string>& removed) {
  validate_layered_path(g);
  const LayeredGraph h = g.remove_nodes(removed);

  RemovalReport rep;
  rep.removed = removed;
  std::sort(rep.removed.begin(), rep.removed.end());
  rep.condition1_holds =
      check_overlap_condition(g).satisfied && check_overlap_condition(h).satisfied;
  rep.witnesses = detail::zero_degree_witnesses(h);
  rep.lambda2 = lambda2_layered(h).lambda2;
  if (!rep.condition1_holds) {
    rep.predicted = Prediction::withheld;
    return rep;
  }
  rep.predicted = rep.witnesses.empty() ? Prediction::preserved : Prediction::degraded;
  if (rep.lambda2)
    rep.consistent =
        detail::classify_lambda2(*rep.lambda2) == (rep.predicted == Prediction::preserved);
  return rep;
}

struct RemovalTable {
  std::vector<RemovalReport> rows; // sorted by (size, lexicographic ids)
};

struct EnumerateOptions {
  int max_size = 0;
  std::optional<std::vector<std::vector<std::string>>> subsets; // explicit list wins
  int jobs = 1;
  std::size_t guard = std::size_t{1} << 20; // refuse larger enumerations
  bool override_guard = false;
};

namespace detail {

inline void sort_rows(std::vector<RemovalReport>& rows) {
  std::sort(rows.begin(), rows.end(), [](const RemovalReport& a, const RemovalReport& b) {
    if (a.removed.size() != b.removed.size()) return a.removed.size() < b.removed.size();
    return a.removed < b.removed;
  });
}

template <typename Fn>
inline void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<int>(jobs, static_cast<int>(n));
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

} // namespace detail

// One report per removal subset: either every subset of the non-leader
// nodes up to max_size, or exactly the listed ones. Rows come out sorted by
// (size, lexicographic ids) independent of the job count.
inline RemovalTable enumerate_removals(const LayeredGraph& g, const EnumerateOptions& opts) {
  std::vector<std::vector<std::string>> subsets;
  if (opts.subsets) {
    subsets = *opts.subsets;
  } else {
    std::vector<std::string> removable;
    for (int li = 1; li < g.layer_count(); ++li)
      for (NodeIndex v : g.layer(li)) removable.push_back(g.base().label(v));
    std::sort(removable.begin(), removable.end());
    const int m = static_cast<int>(removable.size());
    if (opts.max_size < 0 || opts.max_size > m)
      throw ValidationError("max removal size must be between 0 and " + std::to_string(m));

    std::size_t total = 0;
    std::vector<int> pick;
    auto emit = [&](auto&& self, int start, int left) -> void {
      if (++total > opts.guard && !opts.override_guard)
        throw ValidationError("enumeration exceeds the subset guard (" +
                              std::to_string(opts.guard) + "); pass the override to proceed");
      std::vector<std::string> subset;
      subset.reserve(pick.size());
      for (int i : pick) subset.push_back(removable[i]);
      subsets.push_back(std::move(subset));
      if (left == 0) return;
      for (int i = start; i < m; ++i) {
        pick.push_back(i);
        self(self, i + 1, left - 1);
        pick.pop_back();
      }
    };
    emit(emit, 0, opts.max_size);
  }

  RemovalTable table;
  table.rows.resize(subsets.size());
  detail::parallel_for(subsets.size(), opts.jobs,
                       [&](std::size_t i) { table.rows[i] = classify_removal(g, subsets[i]); });
  detail::sort_rows(table.rows);
  return table;
}

struct AlphaBoundReport {
  double alpha = 0.0;
  bool hypothesis_holds = false;
  int min_from_above_degree = 0;           // over nodes below layer 1 (0 when none)
  std::optional<double> layer1_lambda2;    // computed when layer 1 is not a singleton
  std::optional<double> lambda2;
  bool bound_satisfied = false; // lambda2 >= alpha - 1e-8, when hypothesis holds
  std::string detail;
};

// Degree lower bound: if every node below layer 1 keeps at least alpha
// upper neighbors (and layer 1 itself clears alpha when it is not a
// singleton), the algebraic connectivity is at least alpha.
inline AlphaBoundReport alpha_bound_check(const LayeredGraph& g, double alpha) {
  if (alpha < 0) throw ValidationError("alpha must be nonnegative");
  AlphaBoundReport rep;
  rep.alpha = alpha;
  rep.hypothesis_holds = true;

  bool any_below = false;
  int min_deg = 0;
  for (int li = 1; li < g.layer_count(); ++li)
    for (NodeIndex v : g.layer(li)) {
      const int d = g.from_above_degree(v);
      min_deg = any_below ? std::min(min_deg, d) : d;
      any_below = true;
      if (d < alpha && rep.detail.empty()) {
        rep.hypothesis_holds = false;
        rep.detail = "node '" + g.base().label(v) + "' has from-above degree " +
                     std::to_string(d) + " < alpha";
      }
    }
  rep.min_from_above_degree = any_below ? min_deg : 0;

  const auto spectral = lambda2_layered(g);
  rep.lambda2 = spectral.lambda2;
  if (!g.layer1_singleton() && g.layer_count() > 0 && !g.layer(0).empty()) {
    for (const auto& c : spectral.contributions)
      if (c.layer == 1) rep.layer1_lambda2 = c.eigenvalue;
    if (rep.layer1_lambda2 && *rep.layer1_lambda2 < alpha) {
      rep.hypothesis_holds = false;
      if (rep.detail.empty())
        rep.detail = "layer 1 is not a singleton and its connectivity is below alpha";
    }
  }
  if (rep.hypothesis_holds)
    rep.bound_satisfied = !rep.lambda2 || *rep.lambda2 >= alpha - 1e-8;
  return rep;
}

// The connectivity of any layered path graph lies in [0, 1].
inline bool interval_check(const LayeredGraph& g) {
  validate_layered_path(g);
  const auto rep = lambda2_layered(g);
  if (!rep.lambda2) return true; // nothing to bound
  return *rep.lambda2 >= -1e-9 && *rep.lambda2 <= 1.0 + 1e-9;
}

} // namespace laycon
