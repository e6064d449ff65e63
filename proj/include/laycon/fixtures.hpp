#pragma once

#include <string>
#include <vector>

#include "laycon/graph.hpp"

namespace laycon::fixtures {

// Built-in reference graphs. Each ships with a catalogue of removal sets
// whose connectivity values and zero-degree witnesses are frozen below;
// every catalogued value has been cross-checked against the dense
// eigensolver, so the catalogue doubles as the regression bar for both
// eigenvalue routes.

// Triangular formation: layers of width 1/2/3/4, each layer a single path,
// every node fed by the one or two nearest nodes of the layer above.
inline LayeredGraphSpec gtri_spec() {
  LayeredGraphSpec s;
  s.layers = {{"v1"}, {"v2", "v3"}, {"v4", "v5", "v6"}, {"v7", "v8", "v9", "v10"}};
  s.intra_edges = {{"v2", "v3"}, {"v4", "v5"}, {"v5", "v6"},
                   {"v7", "v8"}, {"v8", "v9"}, {"v9", "v10"}};
  s.inter_edges = {{"v1", "v2"}, {"v1", "v3"},
                   {"v2", "v4"}, {"v2", "v5"}, {"v3", "v5"}, {"v3", "v6"},
                   {"v4", "v7"}, {"v4", "v8"}, {"v5", "v8"}, {"v5", "v9"},
                   {"v6", "v9"}, {"v6", "v10"}};
  return s;
}

// Square formation, aligned columns: v_k feeds only v_{k+5}.
inline LayeredGraphSpec gsq1_spec() {
  LayeredGraphSpec s;
  s.layers = {{"v1"}, {"v2", "v3", "v4", "v5", "v6"}, {"v7", "v8", "v9", "v10", "v11"}};
  s.intra_edges = {{"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v5", "v6"},
                   {"v7", "v8"}, {"v8", "v9"}, {"v9", "v10"}, {"v10", "v11"}};
  s.inter_edges = {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}, {"v1", "v5"}, {"v1", "v6"},
                   {"v2", "v7"}, {"v3", "v8"}, {"v4", "v9"}, {"v5", "v10"}, {"v6", "v11"}};
  return s;
}

// Square formation, overlapping fan-in: each bottom node listens to the two
// or three nodes above it.
inline LayeredGraphSpec gsq2_spec() {
  LayeredGraphSpec s;
  s.layers = {{"v1"}, {"v2", "v3", "v4", "v5", "v6"}, {"v7", "v8", "v9", "v10", "v11"}};
  s.intra_edges = {{"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v5", "v6"},
                   {"v7", "v8"}, {"v8", "v9"}, {"v9", "v10"}, {"v10", "v11"}};
  s.inter_edges = {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}, {"v1", "v5"}, {"v1", "v6"},
                   {"v2", "v7"}, {"v3", "v7"},
                   {"v2", "v8"}, {"v3", "v8"}, {"v4", "v8"},
                   {"v3", "v9"}, {"v4", "v9"}, {"v5", "v9"},
                   {"v4", "v10"}, {"v5", "v10"}, {"v6", "v10"},
                   {"v5", "v11"}, {"v6", "v11"}};
  return s;
}

inline LayeredGraph gtri() { return LayeredGraph::build(gtri_spec()); }
inline LayeredGraph gsq1() { return LayeredGraph::build(gsq1_spec()); }
inline LayeredGraph gsq2() { return LayeredGraph::build(gsq2_spec()); }

// One catalogued removal: the expected connectivity (4 decimals) and the
// nodes left without any neighbor in the layer above.
struct RemovalCase {
  std::vector<std::string> removed;
  double lambda2;
  std::vector<std::string> witnesses;
};

inline const std::vector<RemovalCase>& gtri_cases() {
  static const std::vector<RemovalCase> rows = {
      {{}, 1.0, {}},
      {{"v2"}, 0.4679, {"v4"}},
      {{"v4"}, 0.5272, {"v7"}},
      {{"v7"}, 1.0, {}},
      {{"v2", "v6"}, 0.3820, {"v4", "v10"}},
      {{"v4", "v5"}, 0.2360, {"v7", "v8"}},
      {{"v4", "v7"}, 1.0, {}},
      {{"v4", "v10"}, 0.5188, {"v7"}},
      {{"v2", "v4", "v7"}, 1.0, {}},
      {{"v4", "v5", "v7"}, 0.4679, {"v8"}},
      {{"v4", "v5", "v10"}, 0.1981, {"v7", "v8"}},
      {{"v2", "v4", "v5", "v7"}, 0.4679, {"v8"}},
      {{"v2", "v4", "v7", "v8"}, 1.0, {}},
      {{"v2", "v4", "v5", "v7", "v10"}, 0.3820, {"v8"}},
  };
  return rows;
}

inline const std::vector<RemovalCase>& gsq1_cases() {
  static const std::vector<RemovalCase> rows = {
      {{}, 1.0, {}},
      {{"v2"}, 0.4978, {"v7"}},
      {{"v3"}, 0.6646, {"v8"}},
      {{"v4"}, 0.6972, {"v9"}},
      {{"v2", "v3"}, 0.2434, {"v7", "v8"}},
      {{"v2", "v4"}, 0.4038, {"v7", "v9"}},
      {{"v2", "v5"}, 0.4570, {"v7", "v10"}},
      {{"v2", "v6"}, 0.4384, {"v7", "v11"}},
      {{"v3", "v4"}, 0.4236, {"v8", "v9"}},
      {{"v3", "v5"}, 0.5188, {"v8", "v10"}},
      {{"v2", "v3", "v4"}, 0.1392, {"v7", "v8", "v9"}},
      {{"v2", "v3", "v5"}, 0.2160, {"v7", "v8", "v10"}},
      {{"v2", "v3", "v6"}, 0.2278, {"v7", "v8", "v11"}},
      {{"v2", "v4", "v6"}, 0.3249, {"v7", "v9", "v11"}},
      {{"v3", "v4", "v5"}, 0.2679, {"v8", "v9", "v10"}},
      {{"v2", "v3", "v4", "v5"}, 0.0810, {"v7", "v8", "v9", "v10"}},
      {{"v2", "v3", "v4", "v6"}, 0.1134, {"v7", "v8", "v9", "v11"}},
      {{"v2", "v3", "v5", "v6"}, 0.1392, {"v7", "v8", "v10", "v11"}},
  };
  return rows;
}

inline const std::vector<RemovalCase>& gsq2_cases() {
  static const std::vector<RemovalCase> rows = {
      {{}, 1.0, {}},
      {{"v2"}, 1.0, {}},
      {{"v3"}, 1.0, {}},
      {{"v4"}, 1.0, {}},
      {{"v2", "v3"}, 0.5357, {"v7"}},
      {{"v2", "v4"}, 1.0, {}},
      {{"v2", "v5"}, 1.0, {}},
      {{"v2", "v6"}, 1.0, {}},
      {{"v3", "v4"}, 1.0, {}},
      {{"v3", "v5"}, 1.0, {}},
      {{"v2", "v3", "v4"}, 0.2531, {"v7", "v8"}},
      {{"v2", "v3", "v5"}, 0.5065, {"v7"}},
      {{"v2", "v3", "v6"}, 0.5337, {"v7"}},
      {{"v2", "v4", "v6"}, 1.0, {}},
      {{"v3", "v4", "v5"}, 0.6972, {"v9"}},
      {{"v2", "v3", "v4", "v5"}, 0.1392, {"v7", "v8", "v9"}},
      {{"v2", "v3", "v4", "v6"}, 0.2434, {"v7", "v8"}},
      {{"v2", "v3", "v5", "v6"}, 0.4384, {"v7", "v11"}},
  };
  return rows;
}

struct Fixture {
  std::string name;
  LayeredGraphSpec spec;
  const std::vector<RemovalCase>* cases;
};

inline std::vector<Fixture> all() {
  return {{"gtri", gtri_spec(), &gtri_cases()},
          {"gsq1", gsq1_spec(), &gsq1_cases()},
          {"gsq2", gsq2_spec(), &gsq2_cases()}};
}

} // namespace laycon::fixtures
