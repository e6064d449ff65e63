#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "laycon/arborescence.hpp"
#include "laycon/fixtures.hpp"
#include "laycon/generator.hpp"
#include "laycon/rng.hpp"
#include "laycon/spectral.hpp"

using namespace laycon;

namespace {

WeightedDigraph bidirected_path(int n) {
  WeightedDigraph g;
  for (int i = 0; i < n; ++i) g.add_node("p" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1, 1.0);
    g.add_edge(i + 1, i, 1.0);
  }
  return g;
}

WeightedDigraph cone_of_2path(double f1, double f2) {
  WeightedDigraph g;
  g.add_node("*");
  g.add_node("u");
  g.add_node("v");
  g.add_edge(0, 1, f1);
  g.add_edge(0, 2, f2);
  g.add_edge(1, 2, 1.0);
  g.add_edge(2, 1, 1.0);
  return g;
}

} // namespace

TEST_CASE("laplacian follows the in-neighbor convention") {
  SECTION("bidirected 2-path") {
    REQUIRE(laplacian(bidirected_path(2)) == Matrix{{1, -1}, {-1, 1}});
  }
  SECTION("apex row of a cone is zero") {
    WeightedDigraph g;
    g.add_node("*");
    g.add_node("v");
    g.add_edge(0, 1, 1.0);
    REQUIRE(laplacian(g) == Matrix{{0, 0}, {-1, 1}});
  }
  SECTION("rows sum to zero on a fixture") {
    const Matrix l = laplacian(fixtures::gtri().base());
    REQUIRE(l.rows() == 10);
    for (std::size_t i = 0; i < l.rows(); ++i) {
      double sum = 0;
      for (std::size_t j = 0; j < l.cols(); ++j) sum += l(i, j);
      REQUIRE(std::abs(sum) <= 1e-12);
    }
  }
}

TEST_CASE("layer decomposition reproduces the catalogued values") {
  const LayeredGraph g = fixtures::gtri();
  REQUIRE(*lambda2_layered(g).lambda2 == Catch::Approx(1.0).margin(1e-9));

  const auto degraded = lambda2_layered(g.remove_nodes(std::vector<std::string>{"v4", "v5", "v10"}));
  REQUIRE(*degraded.lambda2 == Catch::Approx(0.1981).margin(5e-5));

  const auto sq1 = lambda2_layered(
      fixtures::gsq1().remove_nodes(std::vector<std::string>{"v2", "v3", "v4", "v5"}));
  REQUIRE(*sq1.lambda2 == Catch::Approx(0.0810).margin(5e-5));
}

TEST_CASE("spectral report pins down the limiting component") {
  const LayeredGraph h = fixtures::gtri().remove_nodes(std::vector<std::string>{"v4", "v5", "v10"});
  const auto rep = lambda2_layered(h);
  REQUIRE(rep.argmin >= 0);
  const auto& c = rep.contributions[rep.argmin];
  REQUIRE(c.layer == 4);
  REQUIRE(c.component == std::vector<std::string>{"v7", "v8", "v9"});
  REQUIRE(c.is_path);
  REQUIRE(*rep.lambda2 == Catch::Approx(c.eigenvalue));
  for (const auto& contribution : rep.contributions)
    REQUIRE(contribution.eigenvalue >= *rep.lambda2 - 1e-12);
}

TEST_CASE("oracle equals the decomposition on the catalogue") {
  for (const auto& fx : fixtures::all()) {
    const LayeredGraph g = LayeredGraph::build(fx.spec);
    for (const auto& rc : *fx.cases) {
      const LayeredGraph h = g.remove_nodes(rc.removed);
      REQUIRE(*lambda2_oracle(h) ==
              Catch::Approx(*lambda2_layered(h).lambda2).margin(1e-8));
    }
  }
}

TEST_CASE("oracle handles degenerate graphs") {
  SECTION("single node has no second eigenvalue") {
    LayeredGraphSpec s;
    s.layers = {{"v1"}};
    REQUIRE_FALSE(lambda2_oracle(LayeredGraph::build(s)).has_value());
    REQUIRE_FALSE(lambda2_layered(LayeredGraph::build(s)).lambda2.has_value());
  }
  SECTION("disconnected graph has connectivity zero") {
    LayeredGraphSpec s;
    s.layers = {{"v1"}, {"v2", "v3"}};
    s.intra_edges = {{"v2", "v3"}};
    // no inter edges: layer 2 floats free
    const LayeredGraph g = LayeredGraph::build(s);
    REQUIRE(*lambda2_oracle(g) == Catch::Approx(0.0).margin(1e-10));
    REQUIRE(*lambda2_layered(g).lambda2 == Catch::Approx(0.0).margin(1e-10));
  }
  SECTION("non-singleton first layer contributes its own connectivity") {
    LayeredGraphSpec s;
    s.layers = {{"a", "b"}, {"c"}};
    s.intra_edges = {{"a", "b"}};
    s.inter_edges = {{"a", "c"}, {"b", "c"}};
    const LayeredGraph g = LayeredGraph::build(s);
    const auto rep = lambda2_layered(g);
    REQUIRE(rep.contributions.size() == 2);
    REQUIRE(rep.contributions[0].layer == 1);
    REQUIRE(*rep.lambda2 == Catch::Approx(*lambda2_oracle(g)).margin(1e-8));
  }
}

TEST_CASE("grounded cone of each fixture layer is the expected tridiagonal") {
  for (const auto& fx : fixtures::all()) {
    const LayeredGraph g = LayeredGraph::build(fx.spec);
    for (int li = 1; li < g.layer_count(); ++li) {
      const ConeGraph cone = cone_of_layer(g, li, from_above_map(g, li));
      const Matrix gc = grounded(laplacian(cone.graph), cone.apex);
      std::vector<double> diag;
      for (NodeIndex v : g.layer(li))
        diag.push_back(g.from_above_degree(v) + g.intra_neighbors(v).size());
      REQUIRE(gc == unit_coupling_tridiagonal(diag).dense());
    }
  }
}

TEST_CASE("matrix tree weight on hand-checked graphs") {
  SECTION("path rooted at an end has one spanning tree") {
    REQUIRE(matrix_tree_weight(bidirected_path(3), 0) == Catch::Approx(1.0));
    REQUIRE(enumerate_arborescences(bidirected_path(3), 0) == Catch::Approx(1.0));
  }
  SECTION("cone of a 2-path with unit map") {
    const WeightedDigraph cone = cone_of_2path(1.0, 1.0);
    REQUIRE(matrix_tree_weight(cone, 0) == Catch::Approx(3.0));
    REQUIRE(enumerate_arborescences(cone, 0) == Catch::Approx(3.0));
  }
  SECTION("no spanning tree rooted at a sink") {
    WeightedDigraph g;
    g.add_node("a");
    g.add_node("b");
    g.add_edge(0, 1, 1.0);
    REQUIRE(matrix_tree_weight(g, 1) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(enumerate_arborescences(g, 1) == 0.0);
  }
  SECTION("size guard") {
    WeightedDigraph big;
    for (int i = 0; i < 13; ++i) big.add_node("n" + std::to_string(i));
    REQUIRE_THROWS_AS(enumerate_arborescences(big, 0), ValidationError);
  }
}

TEST_CASE("matrix tree identity on random weighted digraphs") {
  Rng rng(99);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = rng.range(2, 6);
    WeightedDigraph g;
    for (int i = 0; i < n; ++i) g.add_node("n" + std::to_string(i));
    const double weights[3] = {0.5, 1.0, 2.0};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rng.chance(0.5)) g.add_edge(i, j, weights[rng.below(3)]);
    for (NodeIndex root = 0; root < n; ++root)
      REQUIRE(matrix_tree_weight(g, root) ==
              Catch::Approx(enumerate_arborescences(g, root)).margin(1e-9));
  }
}

TEST_CASE("decomposition agrees with the dense route on generated graphs") {
  for (int seed = 1; seed <= 40; ++seed) {
    const LayeredGraph g = random_layered_path_graph(seed, 2 + seed % 4, 3 + seed % 4);
    const LayeredGraph u = random_layered_graph(seed, 2 + seed % 3, 5, seed % 3);
    for (const LayeredGraph* gp : {&g, &u}) {
      if (gp->node_count() < 2) continue;
      const auto spectrum = dense_eigenvalues(laplacian(gp->base()));
      REQUIRE(spectrum.max_abs_imag < 1e-9);
      REQUIRE(*lambda2_layered(*gp).lambda2 ==
              Catch::Approx(spectrum.values[1].real()).margin(1e-8));
    }
  }
}

TEST_CASE("fixture spectra are real and match the blockwise union") {
  const LayeredGraph g = fixtures::gsq2();
  const auto spectrum = dense_eigenvalues(laplacian(g.base()));
  REQUIRE(spectrum.max_abs_imag < 1e-9);

  std::vector<double> pooled{0.0};
  for (int li = 1; li < g.layer_count(); ++li) {
    const ConeGraph cone = cone_of_layer(g, li, from_above_map(g, li));
    for (double ev : dense_real_eigenvalues(grounded(laplacian(cone.graph), cone.apex)))
      pooled.push_back(ev);
  }
  std::sort(pooled.begin(), pooled.end());
  REQUIRE(pooled.size() == spectrum.values.size());
  for (std::size_t i = 0; i < pooled.size(); ++i)
    REQUIRE(spectrum.values[i].real() == Catch::Approx(pooled[i]).margin(1e-8));
}
