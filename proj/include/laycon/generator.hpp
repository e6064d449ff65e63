#pragma once

#include <string>
#include <vector>

#include "laycon/errors.hpp"
#include "laycon/graph.hpp"
#include "laycon/rng.hpp"

namespace laycon {

namespace detail {

// A window [a, b] of positions into the upper layer's node sequence
// (1-based; empty when b = a-1). Shifting both ends by at most one step per
// node keeps the set difference between adjacent windows at size <= 1 in
// both directions, which is exactly the overlap condition.
struct Window {
  int a;
  int b;
};

inline Window advance_window(Window w, int upper_size, Rng& rng) {
  int s = rng.below(2);
  int t = rng.below(2);
  if (w.b < w.a && s > t) t = s; // an empty window may only grow or slide
  Window next{w.a + s, w.b + t};
  if (next.a > upper_size + 1) next.a = upper_size + 1;
  if (next.b > upper_size) next.b = upper_size;
  return next;
}

} // namespace detail

// Reproducible random layered path graph: singleton first layer, each later
// layer a disjoint union of paths, inter edges drawn as sliding windows of
// consecutive upper-layer positions so the overlap condition holds by
// construction. Nodes are labeled v1, v2, ... in layer-major order.
inline LayeredGraph random_layered_path_graph(std::uint64_t seed, int layer_count, int max_width) {
  if (layer_count < 1 || max_width < 1)
    throw ValidationError("generator bounds must be positive");
  Rng rng(seed);
  LayeredGraphSpec spec;
  int next_id = 1;
  std::vector<std::string> upper_seq; // previous layer's nodes in path order

  for (int li = 0; li < layer_count; ++li) {
    const int width = li == 0 ? 1 : rng.range(1, max_width);
    std::vector<std::string> seq;
    seq.reserve(width);
    spec.layers.emplace_back();
    for (int k = 0; k < width; ++k) {
      seq.push_back("v" + std::to_string(next_id++));
      spec.layers.back().push_back(seq.back());
    }

    // split the layer into path components; edges join consecutive nodes
    std::vector<std::vector<std::string>> components;
    for (int k = 0; k < width; ++k) {
      if (k == 0 || rng.chance(0.35))
        components.push_back({seq[k]});
      else {
        spec.intra_edges.emplace_back(components.back().back(), seq[k]);
        components.back().push_back(seq[k]);
      }
    }

    if (li > 0) {
      const int upper = static_cast<int>(upper_seq.size());
      for (const auto& comp : components) {
        detail::Window w{0, 0};
        w.a = rng.range(1, upper);
        const int max_len = std::min(3, upper - w.a + 1);
        w.b = w.a + rng.range(0, max_len) - 1;
        for (const auto& node : comp) {
          for (int pos = w.a; pos <= w.b; ++pos)
            spec.inter_edges.emplace_back(upper_seq[pos - 1], node);
          w = detail::advance_window(w, upper, rng);
        }
      }
    }
    upper_seq = std::move(seq);
  }
  return LayeredGraph::build(spec);
}

// Variant without the path constraint: random undirected graphs inside each
// layer and every non-leader node wired to at least `min_from_above` upper
// nodes. When min_from_above > 1 the first layer becomes a clique of
// min_from_above + 1 nodes (its own algebraic connectivity then exceeds any
// bound up to min_from_above), since a singleton cannot feed two edges
// into any one node below.
inline LayeredGraph random_layered_graph(std::uint64_t seed, int layer_count, int max_width,
                                         int min_from_above) {
  if (layer_count < 1 || max_width < 1 || min_from_above < 0)
    throw ValidationError("generator bounds must be positive");
  Rng rng(seed);
  LayeredGraphSpec spec;
  int next_id = 1;
  std::vector<std::string> upper;

  for (int li = 0; li < layer_count; ++li) {
    int width;
    if (li == 0)
      width = min_from_above <= 1 ? 1 : min_from_above + 1;
    else
      width = rng.range(std::max(1, min_from_above), std::max(max_width, min_from_above));
    std::vector<std::string> cur;
    spec.layers.emplace_back();
    for (int k = 0; k < width; ++k) {
      cur.push_back("v" + std::to_string(next_id++));
      spec.layers.back().push_back(cur.back());
    }

    if (li == 0 && width > 1) { // clique
      for (int i = 0; i < width; ++i)
        for (int j = i + 1; j < width; ++j) spec.intra_edges.emplace_back(cur[i], cur[j]);
    } else if (li > 0) {
      for (int i = 0; i < width; ++i)
        for (int j = i + 1; j < width; ++j)
          if (rng.chance(0.3)) spec.intra_edges.emplace_back(cur[i], cur[j]);
    }

    if (li > 0) {
      const int m = static_cast<int>(upper.size());
      for (const auto& node : cur) {
        const int want = rng.range(std::min(min_from_above, m), m);
        std::vector<int> picks(m);
        for (int i = 0; i < m; ++i) picks[i] = i;
        for (int i = 0; i < want; ++i) std::swap(picks[i], picks[i + rng.below(m - i)]);
        for (int i = 0; i < want; ++i) spec.inter_edges.emplace_back(upper[picks[i]], node);
      }
    }
    upper = std::move(cur);
  }
  return LayeredGraph::build(spec);
}

} // namespace laycon
