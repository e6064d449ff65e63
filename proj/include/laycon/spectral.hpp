#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "laycon/dense_eig.hpp"
#include "laycon/errors.hpp"
#include "laycon/graph.hpp"
#include "laycon/matrix.hpp"
#include "laycon/tridiagonal.hpp"

namespace laycon {

// In-neighbor Laplacian: [L]_ii = sum of incoming weights, [L]_ij = -w(j->i).
// Rows of nodes without incoming edges are zero, so row sums always vanish.
inline Matrix laplacian(const WeightedDigraph& g) {
  const NodeIndex n = g.size();
  Matrix m(n, n);
  for (const Edge& e : g.edges()) {
    m(e.dst, e.src) -= e.weight;
    m(e.dst, e.dst) += e.weight;
  }
  return m;
}

struct LayerContribution {
  int layer = 0;                      // 1-based layer number
  std::vector<std::string> component; // node labels, path order when is_path
  double eigenvalue = 0.0;
  bool is_path = false;
};

struct SpectralReport {
  std::optional<double> lambda2; // unset when the graph has no spectrum terms (n <= 1)
  std::vector<LayerContribution> contributions;
  int argmin = -1; // index into contributions
};

namespace detail {

// Try to order a connected intra-layer component as a path; empty result if
// some node has three or more neighbors inside the component (or a cycle).
inline std::optional<std::vector<NodeIndex>> order_as_path(const LayeredGraph& g,
                                                           const std::vector<NodeIndex>& comp) {
  if (comp.size() == 1) return comp;
  std::size_t edges = 0;
  std::vector<NodeIndex> endpoints;
  for (NodeIndex v : comp) {
    const auto nbrs = g.intra_neighbors(v);
    if (nbrs.size() > 2) return std::nullopt;
    edges += nbrs.size();
    if (nbrs.size() == 1) endpoints.push_back(v);
  }
  if (edges / 2 != comp.size() - 1 || endpoints.size() != 2) return std::nullopt;
  std::vector<NodeIndex> path;
  NodeIndex prev = -1, cur = std::min(endpoints[0], endpoints[1]);
  while (cur != -1) {
    path.push_back(cur);
    NodeIndex next = -1;
    for (NodeIndex u : g.intra_neighbors(cur))
      if (u != prev) next = u;
    prev = path.back();
    cur = next;
  }
  if (path.size() != comp.size()) return std::nullopt;
  return path;
}

// Smallest eigenvalue of the apex-grounded cone Laplacian of one component,
// i.e. of L_component + diag(from-above degrees).
inline LayerContribution component_term(const LayeredGraph& g, int li,
                                        const std::vector<NodeIndex>& comp, double tol) {
  LayerContribution c;
  c.layer = li + 1;
  const auto path = order_as_path(g, comp);
  if (path) {
    c.is_path = true;
    std::vector<double> diag;
    diag.reserve(path->size());
    for (NodeIndex v : *path) {
      const double deg = static_cast<double>(g.intra_neighbors(v).size());
      diag.push_back(g.from_above_degree(v) + deg);
    }
    for (NodeIndex v : *path) c.component.push_back(g.base().label(v));
    c.eigenvalue = tridiagonal_smallest_eig(unit_coupling_tridiagonal(std::move(diag)), tol);
    return c;
  }
  // general component: dense symmetric block
  const std::size_t n = comp.size();
  Matrix block(n, n);
  std::map<NodeIndex, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) local[comp[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    const NodeIndex v = comp[i];
    for (NodeIndex u : g.intra_neighbors(v)) {
      block(i, local[u]) = -1.0;
      block(i, i) += 1.0;
    }
    block(i, i) += g.from_above_degree(v);
  }
  for (NodeIndex v : comp) c.component.push_back(g.base().label(v));
  c.eigenvalue = symmetric_kth_eig(block, 1, tol);
  return c;
}

} // namespace detail

// Algebraic connectivity by the layer decomposition: the minimum over
// layers i >= 2 of the smallest eigenvalue of the apex-grounded cone of the
// layer under the from-above degree map, each connected component handled
// independently (disjoint unions contribute blockwise). When layer 1 has
// more than one node its own intra-layer algebraic connectivity joins the
// minimum; a singleton layer 1 contributes nothing. Empty layers are
// skipped; their effect surfaces as zero from-above degrees below them.
inline SpectralReport lambda2_layered(const LayeredGraph& g, double tol = 1e-10) {
  SpectralReport rep;
  if (g.layer_count() > 0 && g.layer(0).size() > 1) {
    const auto& first = g.layer(0);
    Matrix block(first.size(), first.size());
    std::map<NodeIndex, std::size_t> local;
    for (std::size_t i = 0; i < first.size(); ++i) local[first[i]] = i;
    for (std::size_t i = 0; i < first.size(); ++i)
      for (NodeIndex u : g.intra_neighbors(first[i])) {
        block(i, local[u]) = -1.0;
        block(i, i) += 1.0;
      }
    LayerContribution c;
    c.layer = 1;
    for (NodeIndex v : first) c.component.push_back(g.base().label(v));
    c.eigenvalue = symmetric_kth_eig(block, 2, tol);
    rep.contributions.push_back(std::move(c));
  }
  for (int li = 1; li < g.layer_count(); ++li) {
    if (g.layer(li).empty()) continue;
    for (const auto& comp : detail::layer_components(g, li))
      rep.contributions.push_back(detail::component_term(g, li, comp, tol));
  }
  for (std::size_t i = 0; i < rep.contributions.size(); ++i) {
    const double v = rep.contributions[i].eigenvalue;
    if (!rep.lambda2 || v < *rep.lambda2) {
      rep.lambda2 = v;
      rep.argmin = static_cast<int>(i);
    }
  }
  return rep;
}

// Second-smallest Laplacian eigenvalue straight from the dense solver.
// Cross-checks the decomposition; unset for graphs with fewer than 2 nodes.
inline std::optional<double> lambda2_oracle(const LayeredGraph& g) {
  if (g.node_count() < 2) return std::nullopt;
  return dense_real_eigenvalues(laplacian(g.base()))[1];
}

// Weight of all spanning directed trees rooted at the given node, as the
// grounded Laplacian minor determinant.
inline double matrix_tree_weight(const WeightedDigraph& g, NodeIndex root) {
  if (g.size() < 2) throw ValidationError("matrix_tree_weight requires at least 2 nodes");
  if (root < 0 || root >= g.size()) throw ValidationError("unknown root node");
  return lu_determinant(grounded(laplacian(g), static_cast<std::size_t>(root)));
}

} // namespace laycon
