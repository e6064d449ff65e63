#include <catch2/catch_amalgamated.hpp>

#include "laycon/fixtures.hpp"
#include "laycon/graph.hpp"

using namespace laycon;

namespace {

LayeredGraphSpec tiny_spec() {
  LayeredGraphSpec s;
  s.layers = {{"v1"}, {"v2", "v3"}};
  s.intra_edges = {{"v2", "v3"}};
  s.inter_edges = {{"v1", "v2"}, {"v1", "v3"}};
  return s;
}

std::vector<std::string> labels_of(const LayeredGraph& g, const std::vector<NodeIndex>& ids) {
  std::vector<std::string> out;
  for (NodeIndex v : ids) out.push_back(g.base().label(v));
  return out;
}

} // namespace

TEST_CASE("build validates and symmetrizes intra edges") {
  const LayeredGraph g = LayeredGraph::build(tiny_spec());
  REQUIRE(g.node_count() == 3);
  const NodeIndex v2 = g.base().require("v2");
  const NodeIndex v3 = g.base().require("v3");
  REQUIRE(g.base().has_edge(v2, v3));
  REQUIRE(g.base().has_edge(v3, v2));
  REQUIRE(g.base().has_edge(g.base().require("v1"), v2));
  REQUIRE_FALSE(g.base().has_edge(v2, g.base().require("v1")));
}

TEST_CASE("build rejects malformed specs") {
  SECTION("duplicate node") {
    LayeredGraphSpec s = tiny_spec();
    s.layers[1].push_back("v2");
    REQUIRE_THROWS_AS(LayeredGraph::build(s), ValidationError);
  }
  SECTION("unknown node in edge") {
    LayeredGraphSpec s = tiny_spec();
    s.inter_edges.push_back({"v1", "vX"});
    REQUIRE_THROWS_WITH(LayeredGraph::build(s), Catch::Matchers::ContainsSubstring("vX"));
  }
  SECTION("upward edge violates the layer rule") {
    LayeredGraphSpec s;
    s.layers = {{"v1"}, {"v2"}, {"v3"}};
    s.inter_edges = {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v1"}};
    REQUIRE_THROWS_WITH(LayeredGraph::build(s), Catch::Matchers::ContainsSubstring("layer rule"));
  }
  SECTION("layer-skipping edge") {
    LayeredGraphSpec s;
    s.layers = {{"v1"}, {"v2"}, {"v3"}};
    s.inter_edges = {{"v1", "v2"}, {"v1", "v3"}};
    REQUIRE_THROWS_WITH(LayeredGraph::build(s), Catch::Matchers::ContainsSubstring("layer rule"));
  }
  SECTION("intra edge across layers") {
    LayeredGraphSpec s = tiny_spec();
    s.intra_edges.push_back({"v1", "v2"});
    REQUIRE_THROWS_AS(LayeredGraph::build(s), ValidationError);
  }
  SECTION("self loop") {
    LayeredGraphSpec s = tiny_spec();
    s.intra_edges.push_back({"v2", "v2"});
    REQUIRE_THROWS_WITH(LayeredGraph::build(s), Catch::Matchers::ContainsSubstring("self-loop"));
  }
  SECTION("duplicate edge") {
    LayeredGraphSpec s = tiny_spec();
    s.inter_edges.push_back({"v1", "v2"});
    REQUIRE_THROWS_WITH(LayeredGraph::build(s), Catch::Matchers::ContainsSubstring("duplicate"));
  }
}

TEST_CASE("single node graph is a valid layered path graph") {
  LayeredGraphSpec s;
  s.layers = {{"v1"}};
  const LayeredGraph g = LayeredGraph::build(s);
  const auto dec = validate_layered_path(g);
  REQUIRE(dec.per_layer.size() == 1);
  REQUIRE(dec.per_layer[0].size() == 1);
  REQUIRE(dec.per_layer[0][0].nodes.size() == 1);
}

TEST_CASE("path decomposition orders layer paths end to end") {
  const LayeredGraph g = fixtures::gtri();
  const auto dec = validate_layered_path(g);
  REQUIRE(dec.per_layer.size() == 4);
  REQUIRE(dec.per_layer[2].size() == 1);
  REQUIRE(labels_of(g, dec.per_layer[2][0].nodes) ==
          std::vector<std::string>{"v4", "v5", "v6"});
  REQUIRE(labels_of(g, dec.per_layer[3][0].nodes) ==
          std::vector<std::string>{"v7", "v8", "v9", "v10"});
}

TEST_CASE("path validation rejects non-path layers") {
  SECTION("layer 1 not a singleton") {
    LayeredGraphSpec s;
    s.layers = {{"v1", "v2"}};
    REQUIRE_THROWS_WITH(validate_layered_path(LayeredGraph::build(s)),
                        Catch::Matchers::ContainsSubstring("layer 1"));
  }
  SECTION("cycle in a layer") {
    LayeredGraphSpec s;
    s.layers = {{"v1"}, {"a", "b", "c"}};
    s.intra_edges = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
    s.inter_edges = {{"v1", "a"}};
    REQUIRE_THROWS_WITH(validate_layered_path(LayeredGraph::build(s)),
                        Catch::Matchers::ContainsSubstring("cycle"));
  }
  SECTION("branching node") {
    LayeredGraphSpec s;
    s.layers = {{"v1"}, {"a", "b", "c", "d"}};
    s.intra_edges = {{"a", "b"}, {"a", "c"}, {"a", "d"}};
    s.inter_edges = {{"v1", "a"}};
    REQUIRE_THROWS_WITH(validate_layered_path(LayeredGraph::build(s)),
                        Catch::Matchers::ContainsSubstring("neighbors"));
  }
}

TEST_CASE("from-above neighbors and degree") {
  const LayeredGraph g = fixtures::gtri();
  REQUIRE(labels_of(g, g.from_above_neighbors(g.base().require("v8"))) ==
          std::vector<std::string>{"v4", "v5"});
  REQUIRE(g.from_above_degree(g.base().require("v8")) == 2);
  REQUIRE(g.from_above_neighbors(g.base().require("v1")).empty());

  const LayeredGraph h = g.remove_nodes(std::vector<std::string>{"v4"});
  REQUIRE(h.from_above_degree(h.base().require("v7")) == 0);

  const LayeredGraph sq1 = fixtures::gsq1();
  REQUIRE(labels_of(sq1, sq1.from_above_neighbors(sq1.base().require("v7"))) ==
          std::vector<std::string>{"v2"});
}

TEST_CASE("remove_nodes produces the induced subgraph and keeps layer slots") {
  const LayeredGraph g = fixtures::gtri();
  const LayeredGraph h = g.remove_nodes(std::vector<std::string>{"v4", "v7"});
  REQUIRE(h.node_count() == 8);
  REQUIRE(h.layer_count() == 4);
  REQUIRE_NOTHROW(validate_layered_path(h));

  SECTION("whole layer removed leaves an empty slot") {
    const LayeredGraph e = g.remove_nodes(std::vector<std::string>{"v2", "v3"});
    REQUIRE(e.layer_count() == 4);
    REQUIRE(e.layer(1).empty());
    REQUIRE_NOTHROW(validate_layered_path(e));
  }
  SECTION("identity on the empty set") {
    REQUIRE(g.remove_nodes(std::vector<std::string>{}) == g);
  }
  SECTION("leader is protected") {
    REQUIRE_THROWS_WITH(g.remove_nodes(std::vector<std::string>{"v1"}),
                        Catch::Matchers::ContainsSubstring("leader"));
  }
  SECTION("unknown node") {
    REQUIRE_THROWS_WITH(g.remove_nodes(std::vector<std::string>{"vZ"}),
                        Catch::Matchers::ContainsSubstring("unknown node"));
  }
}

TEST_CASE("overlap condition on fixtures and a violating construction") {
  REQUIRE(check_overlap_condition(fixtures::gtri()).satisfied);
  REQUIRE(check_overlap_condition(fixtures::gsq1()).satisfied);
  REQUIRE(check_overlap_condition(fixtures::gsq2()).satisfied);

  LayeredGraphSpec s;
  s.layers = {{"v1"}, {"u", "w"}, {"a", "b"}};
  s.intra_edges = {{"u", "w"}, {"a", "b"}};
  s.inter_edges = {{"v1", "u"}, {"v1", "w"}, {"u", "a"}, {"w", "a"}};
  const LayeredGraph g = LayeredGraph::build(s);
  const auto rep = check_overlap_condition(g);
  REQUIRE_FALSE(rep.satisfied);
  REQUIRE(rep.violations.size() == 1);
  const auto& v = rep.violations[0];
  REQUIRE(g.base().label(v.u) == "a");
  REQUIRE(g.base().label(v.v) == "b");
  REQUIRE(v.only_u.size() == 2);
  REQUIRE(v.only_v.empty());
}

TEST_CASE("cone of a layer") {
  const LayeredGraph g = fixtures::gtri();
  SECTION("from-above map gives apex weights 1,2,1 on layer 3") {
    const auto f = from_above_map(g, 2);
    REQUIRE(f == std::vector<double>{1.0, 2.0, 1.0});
    const ConeGraph cone = cone_of_layer(g, 2, f);
    REQUIRE(cone.graph.size() == 4);
    const auto& apex_out = cone.graph.out_edges(cone.apex);
    REQUIRE(apex_out.size() == 3);
    REQUIRE(cone.graph.in_edges(cone.apex).empty());
  }
  SECTION("zero map keeps apex edges with weight zero") {
    const std::vector<double> f{0.0, 0.0, 0.0};
    const ConeGraph cone = cone_of_layer(g, 2, f);
    for (const auto& [dst, w] : cone.graph.out_edges(cone.apex)) {
      (void)dst;
      REQUIRE(w == 0.0);
    }
  }
  SECTION("negative map value is rejected") {
    const std::vector<double> f{1.0, -0.5, 1.0};
    REQUIRE_THROWS_AS(cone_of_layer(g, 2, f), ValidationError);
  }
  SECTION("single node layer") {
    LayeredGraphSpec s;
    s.layers = {{"v1"}, {"v2"}};
    s.inter_edges = {{"v1", "v2"}};
    const LayeredGraph tiny = LayeredGraph::build(s);
    const ConeGraph cone = cone_of_layer(tiny, 1, std::vector<double>{1.0});
    REQUIRE(cone.graph.size() == 2);
    REQUIRE(cone.graph.out_edges(cone.apex).size() == 1);
  }
}
