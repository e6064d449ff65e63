#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "laycon/errors.hpp"

namespace laycon {

using NodeIndex = int;

struct Edge {
  NodeIndex src;
  NodeIndex dst;
  double weight;
};

// Weighted digraph over interned string labels. Nodes get dense indices in
// insertion order; at most one edge per ordered pair, no self-loops, weights
// nonnegative. Treated as immutable once populated.
class WeightedDigraph {
public:
  NodeIndex add_node(const std::string& label) {
    if (index_.count(label)) throw ValidationError("duplicate node '" + label + "'");
    const NodeIndex id = static_cast<NodeIndex>(labels_.size());
    labels_.push_back(label);
    index_.emplace(label, id);
    in_.emplace_back();
    out_.emplace_back();
    return id;
  }

  void add_edge(NodeIndex src, NodeIndex dst, double weight) {
    if (src < 0 || dst < 0 || src >= size() || dst >= size())
      throw ValidationError("edge endpoint index out of range");
    if (src == dst) throw ValidationError("self-loop on node '" + labels_[src] + "'");
    if (weight < 0.0)
      throw ValidationError("negative weight on edge (" + labels_[src] + ", " + labels_[dst] + ")");
    if (!pairs_.emplace(src, dst).second)
      throw ValidationError("duplicate edge (" + labels_[src] + ", " + labels_[dst] + ")");
    edges_.push_back({src, dst, weight});
    out_[src].emplace_back(dst, weight);
    in_[dst].emplace_back(src, weight);
  }

  NodeIndex size() const { return static_cast<NodeIndex>(labels_.size()); }
  const std::string& label(NodeIndex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<NodeIndex> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  NodeIndex require(const std::string& label) const {
    auto v = find(label);
    if (!v) throw ValidationError("unknown node '" + label + "'");
    return *v;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<NodeIndex, double>>& in_edges(NodeIndex v) const { return in_.at(v); }
  const std::vector<std::pair<NodeIndex, double>>& out_edges(NodeIndex v) const { return out_.at(v); }
  bool has_edge(NodeIndex src, NodeIndex dst) const { return pairs_.count({src, dst}) > 0; }

private:
  std::vector<std::string> labels_;
  std::map<std::string, NodeIndex> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<NodeIndex, double>>> in_, out_;
  std::set<std::pair<NodeIndex, NodeIndex>> pairs_;
};

// External description of a layered graph: intra edges listed once
// (undirected), inter edges directed upper layer -> next layer down.
struct LayeredGraphSpec {
  std::vector<std::vector<std::string>> layers;
  std::vector<std::pair<std::string, std::string>> intra_edges;
  std::vector<std::pair<std::string, std::string>> inter_edges;

  bool operator==(const LayeredGraphSpec&) const = default;
};

// Digraph with an ordered layer partition. Every edge is either within a
// layer (stored in both directions, weight 1) or from layer i to layer i+1.
// Layers may be empty (induced subgraphs keep their layer slots).
class LayeredGraph {
public:
  static LayeredGraph build(const LayeredGraphSpec& spec) {
    LayeredGraph g;
    for (std::size_t li = 0; li < spec.layers.size(); ++li) {
      g.layers_.emplace_back();
      for (const auto& label : spec.layers[li]) {
        const NodeIndex v = g.base_.add_node(label);
        g.layers_.back().push_back(v);
        g.layer_of_.push_back(static_cast<int>(li));
      }
    }
    for (const auto& [a, b] : spec.intra_edges) {
      const NodeIndex u = g.base_.require(a);
      const NodeIndex v = g.base_.require(b);
      if (u == v) throw ValidationError("self-loop on node '" + a + "'");
      if (g.layer_of_[u] != g.layer_of_[v])
        throw ValidationError("layer rule violated: intra edge (" + a + ", " + b +
                              ") joins layer " + std::to_string(g.layer_of_[u] + 1) +
                              " and layer " + std::to_string(g.layer_of_[v] + 1));
      g.base_.add_edge(u, v, 1.0);
      g.base_.add_edge(v, u, 1.0);
      g.intra_once_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (const auto& [a, b] : spec.inter_edges) {
      const NodeIndex u = g.base_.require(a);
      const NodeIndex v = g.base_.require(b);
      if (g.layer_of_[v] != g.layer_of_[u] + 1)
        throw ValidationError("layer rule violated: inter edge (" + a + ", " + b +
                              ") must go from layer " + std::to_string(g.layer_of_[u] + 1) +
                              " to layer " + std::to_string(g.layer_of_[u] + 2) + ", node '" + b +
                              "' is in layer " + std::to_string(g.layer_of_[v] + 1));
      g.base_.add_edge(u, v, 1.0);
      g.inter_.emplace_back(u, v);
    }
    std::sort(g.intra_once_.begin(), g.intra_once_.end());
    std::sort(g.inter_.begin(), g.inter_.end());
    return g;
  }

  const WeightedDigraph& base() const { return base_; }
  NodeIndex node_count() const { return base_.size(); }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  const std::vector<NodeIndex>& layer(int i) const { return layers_.at(i); }
  int layer_of(NodeIndex v) const { return layer_of_.at(v); }
  const std::vector<std::pair<NodeIndex, NodeIndex>>& intra_pairs() const { return intra_once_; }
  const std::vector<std::pair<NodeIndex, NodeIndex>>& inter_pairs() const { return inter_; }

  bool layer1_singleton() const { return !layers_.empty() && layers_[0].size() == 1; }

  NodeIndex leader() const {
    if (!layer1_singleton())
      throw ValidationError("layer 1 is not a single node");
    return layers_[0][0];
  }

  // In-neighbors of v in the preceding layer, ascending by index. Empty for
  // layer-1 nodes.
  std::vector<NodeIndex> from_above_neighbors(NodeIndex v) const {
    if (v < 0 || v >= node_count()) throw ValidationError("node index out of range");
    std::vector<NodeIndex> out;
    const int li = layer_of_[v];
    for (const auto& [src, w] : base_.in_edges(v)) {
      (void)w;
      if (layer_of_[src] == li - 1) out.push_back(src);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int from_above_degree(NodeIndex v) const {
    return static_cast<int>(from_above_neighbors(v).size());
  }

  // Neighbors of v within its own layer, ascending.
  std::vector<NodeIndex> intra_neighbors(NodeIndex v) const {
    std::vector<NodeIndex> out;
    const int li = layer_of_.at(v);
    for (const auto& [src, w] : base_.in_edges(v)) {
      (void)w;
      if (layer_of_[src] == li) out.push_back(src);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Induced subgraph on the surviving nodes. Layer slots are kept (possibly
  // empty); removing any layer-1 node is rejected.
  LayeredGraph remove_nodes(std::span<const std::string> removed) const {
    std::set<NodeIndex> gone;
    for (const auto& label : removed) {
      const NodeIndex v = base_.require(label);
      if (layer_of_[v] == 0)
        throw ValidationError("leader removal forbidden: node '" + label + "' is in layer 1");
      gone.insert(v);
    }
    LayeredGraphSpec spec;
    for (const auto& layer : layers_) {
      spec.layers.emplace_back();
      for (NodeIndex v : layer)
        if (!gone.count(v)) spec.layers.back().push_back(base_.label(v));
    }
    for (const auto& [u, v] : intra_once_)
      if (!gone.count(u) && !gone.count(v))
        spec.intra_edges.emplace_back(base_.label(u), base_.label(v));
    for (const auto& [u, v] : inter_)
      if (!gone.count(u) && !gone.count(v))
        spec.inter_edges.emplace_back(base_.label(u), base_.label(v));
    return build(spec);
  }

  LayeredGraph remove_nodes(const std::vector<std::string>& removed) const {
    return remove_nodes(std::span<const std::string>(removed));
  }

  LayeredGraphSpec to_spec() const {
    LayeredGraphSpec spec;
    for (const auto& layer : layers_) {
      spec.layers.emplace_back();
      for (NodeIndex v : layer) spec.layers.back().push_back(base_.label(v));
    }
    for (const auto& [u, v] : intra_once_)
      spec.intra_edges.emplace_back(base_.label(u), base_.label(v));
    for (const auto& [u, v] : inter_) spec.inter_edges.emplace_back(base_.label(u), base_.label(v));
    return spec;
  }

  bool operator==(const LayeredGraph& o) const { return to_spec() == o.to_spec(); }

private:
  WeightedDigraph base_;
  std::vector<std::vector<NodeIndex>> layers_;
  std::vector<int> layer_of_;
  std::vector<std::pair<NodeIndex, NodeIndex>> intra_once_;
  std::vector<std::pair<NodeIndex, NodeIndex>> inter_;
};

inline LayeredGraph build_layered_graph(const LayeredGraphSpec& spec) {
  return LayeredGraph::build(spec);
}

// One maximal path inside a layer, nodes in end-to-end order.
struct PathComponent {
  std::vector<NodeIndex> nodes;
};

struct PathLayerDecomposition {
  std::vector<std::vector<PathComponent>> per_layer;
};

namespace detail {

// Connected components of the intra-layer graph of one layer, each sorted
// by discovery from the smallest index.
inline std::vector<std::vector<NodeIndex>> layer_components(const LayeredGraph& g, int li) {
  std::vector<std::vector<NodeIndex>> comps;
  std::set<NodeIndex> seen;
  std::vector<NodeIndex> ordered = g.layer(li);
  std::sort(ordered.begin(), ordered.end());
  for (NodeIndex start : ordered) {
    if (seen.count(start)) continue;
    std::vector<NodeIndex> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const NodeIndex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (NodeIndex u : g.intra_neighbors(v))
        if (seen.insert(u).second) stack.push_back(u);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

} // namespace detail

// Checks the layered-path shape: layer 1 a single node, every layer a
// disjoint union of paths. Returns each layer's maximal paths with nodes in
// path order (traversal starts at the smaller-index endpoint).
inline PathLayerDecomposition validate_layered_path(const LayeredGraph& g) {
  if (g.layer_count() == 0 || g.layer(0).size() != 1)
    throw ValidationError("layer 1 must contain exactly one node (got " +
                          std::to_string(g.layer_count() == 0 ? 0 : g.layer(0).size()) + ")");
  PathLayerDecomposition dec;
  dec.per_layer.resize(g.layer_count());
  for (int li = 0; li < g.layer_count(); ++li) {
    for (const auto& comp : detail::layer_components(g, li)) {
      std::size_t edge_count = 0;
      std::vector<NodeIndex> endpoints;
      for (NodeIndex v : comp) {
        const auto nbrs = g.intra_neighbors(v);
        edge_count += nbrs.size();
        if (nbrs.size() > 2)
          throw ValidationError("layer " + std::to_string(li + 1) +
                                " is not a disjoint union of paths: node '" + g.base().label(v) +
                                "' has " + std::to_string(nbrs.size()) + " neighbors in its layer");
        if (nbrs.size() <= 1) endpoints.push_back(v);
      }
      edge_count /= 2;
      if (edge_count != comp.size() - 1)
        throw ValidationError("layer " + std::to_string(li + 1) +
                              " is not a disjoint union of paths: component containing '" +
                              g.base().label(comp.front()) + "' has a cycle");
      PathComponent path;
      if (comp.size() == 1) {
        path.nodes = comp;
      } else {
        const NodeIndex start = *std::min_element(endpoints.begin(), endpoints.end());
        NodeIndex prev = -1, cur = start;
        while (true) {
          path.nodes.push_back(cur);
          NodeIndex next = -1;
          for (NodeIndex u : g.intra_neighbors(cur))
            if (u != prev) next = u;
          if (next == -1) break;
          prev = cur;
          cur = next;
        }
        if (path.nodes.size() != comp.size())
          throw ValidationError("layer " + std::to_string(li + 1) +
                                " component containing '" + g.base().label(comp.front()) +
                                "' is not a path");
      }
      dec.per_layer[li].push_back(std::move(path));
    }
  }
  return dec;
}

struct OverlapViolation {
  NodeIndex u, v;
  std::vector<NodeIndex> only_u; // from-above neighbors of u that v lacks
  std::vector<NodeIndex> only_v;
};

struct OverlapReport {
  bool satisfied = true;
  std::vector<OverlapViolation> violations;
};

// The adjacency overlap condition: for every intra-layer edge, each
// endpoint's from-above neighbor set exceeds the other's by at most one
// node. This is the hypothesis under which the preserved/degraded
// classification is exact.
inline OverlapReport check_overlap_condition(const LayeredGraph& g) {
  OverlapReport rep;
  for (const auto& [u, v] : g.intra_pairs()) {
    const auto nu = g.from_above_neighbors(u);
    const auto nv = g.from_above_neighbors(v);
    std::vector<NodeIndex> only_u, only_v;
    std::set_difference(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(only_u));
    std::set_difference(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(only_v));
    if (only_u.size() > 1 || only_v.size() > 1) {
      rep.satisfied = false;
      rep.violations.push_back({u, v, std::move(only_u), std::move(only_v)});
    }
  }
  return rep;
}

// A layer with an apex node attached: apex -> v carries weight f(v) (zero
// weights kept), intra-layer edges keep weight 1 in both directions. The
// apex is node 0 of the result.
struct ConeGraph {
  WeightedDigraph graph;
  NodeIndex apex = 0;
};

inline ConeGraph cone_of_layer(const LayeredGraph& g, int layer_index, std::span<const double> f) {
  const auto& members = g.layer(layer_index);
  if (f.size() != members.size())
    throw ValidationError("cone map must assign a value to every node of the layer");
  for (double x : f)
    if (x < 0.0) throw ValidationError("cone map values must be nonnegative");

  ConeGraph cone;
  cone.apex = cone.graph.add_node("*");
  std::map<NodeIndex, NodeIndex> local;
  for (NodeIndex v : members) local[v] = cone.graph.add_node(g.base().label(v));
  for (std::size_t i = 0; i < members.size(); ++i)
    cone.graph.add_edge(cone.apex, local[members[i]], f[i]);
  for (const auto& [u, v] : g.intra_pairs()) {
    if (g.layer_of(u) != layer_index) continue;
    cone.graph.add_edge(local[u], local[v], 1.0);
    cone.graph.add_edge(local[v], local[u], 1.0);
  }
  return cone;
}

// The from-above degree map of one layer, aligned with g.layer(layer_index).
inline std::vector<double> from_above_map(const LayeredGraph& g, int layer_index) {
  std::vector<double> f;
  f.reserve(g.layer(layer_index).size());
  for (NodeIndex v : g.layer(layer_index)) f.push_back(g.from_above_degree(v));
  return f;
}

} // namespace laycon
