#pragma once

#include <vector>

#include "laycon/errors.hpp"
#include "laycon/graph.hpp"

namespace laycon {

// Brute-force side of the matrix-tree identity: sum over all spanning
// directed trees rooted at `root` (edges oriented away from the root, so
// every other node has exactly one incoming tree edge) of the product of
// edge weights. Exhaustive over in-edge choices with incremental cycle
// rejection; capped at 12 nodes.
inline double enumerate_arborescences(const WeightedDigraph& g, NodeIndex root) {
  const NodeIndex n = g.size();
  if (n > 12) throw ValidationError("arborescence enumeration is capped at 12 nodes");
  if (root < 0 || root >= n) throw ValidationError("unknown root node");
  if (n == 1) return 1.0;

  std::vector<NodeIndex> order;
  order.reserve(n - 1);
  for (NodeIndex v = 0; v < n; ++v)
    if (v != root) order.push_back(v);

  std::vector<NodeIndex> parent(n, -1);
  double total = 0.0;

  auto closes_cycle = [&](NodeIndex v, NodeIndex from) {
    for (NodeIndex cur = from; cur != -1; cur = parent[cur])
      if (cur == v) return true;
    return false;
  };

  auto recurse = [&](auto&& self, std::size_t k, double prod) -> void {
    if (k == order.size()) {
      total += prod;
      return;
    }
    const NodeIndex v = order[k];
    for (const auto& [src, w] : g.in_edges(v)) {
      if (w == 0.0 || closes_cycle(v, src)) continue;
      parent[v] = src;
      self(self, k + 1, prod * w);
      parent[v] = -1;
    }
  };
  recurse(recurse, 0, 1.0);
  return total;
}

} // namespace laycon
