#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "laycon/analysis.hpp"
#include "laycon/fixtures.hpp"
#include "laycon/generator.hpp"
#include "laycon/json_io.hpp"

using namespace laycon;

TEST_CASE("classify_removal on catalogued rows") {
  const LayeredGraph g = fixtures::gtri();
  SECTION("single removal that degrades") {
    const auto rep = classify_removal(g, {"v2"});
    REQUIRE(rep.condition1_holds);
    REQUIRE(rep.predicted == Prediction::degraded);
    REQUIRE(rep.witnesses == std::vector<std::string>{"v4"});
    REQUIRE(*rep.lambda2 == Catch::Approx(0.4679).margin(5e-5));
    REQUIRE(rep.consistent.value());
  }
  SECTION("four removals that preserve") {
    const auto rep = classify_removal(g, {"v2", "v4", "v7", "v8"});
    REQUIRE(rep.predicted == Prediction::preserved);
    REQUIRE(rep.witnesses.empty());
    REQUIRE(*rep.lambda2 == Catch::Approx(1.0).margin(1e-8));
    REQUIRE(rep.consistent.value());
  }
  SECTION("empty removal") {
    const auto rep = classify_removal(g, {});
    REQUIRE(rep.predicted == Prediction::preserved);
    REQUIRE(*rep.lambda2 == Catch::Approx(1.0).margin(1e-8));
    REQUIRE(rep.consistent.value());
  }
  SECTION("leader removal is refused") {
    REQUIRE_THROWS_AS(classify_removal(g, {"v1"}), ValidationError);
  }
  SECTION("unknown id") {
    REQUIRE_THROWS_AS(classify_removal(g, {"nope"}), ValidationError);
  }
}

TEST_CASE("prediction is withheld when the overlap condition fails") {
  LayeredGraphSpec s;
  s.layers = {{"v1"}, {"u", "w"}, {"a", "b"}};
  s.intra_edges = {{"u", "w"}, {"a", "b"}};
  s.inter_edges = {{"v1", "u"}, {"v1", "w"}, {"u", "a"}, {"w", "a"}};
  const LayeredGraph g = LayeredGraph::build(s);
  const auto rep = classify_removal(g, {});
  REQUIRE_FALSE(rep.condition1_holds);
  REQUIRE(rep.predicted == Prediction::withheld);
  REQUIRE(rep.lambda2.has_value()); // connectivity still reported
  REQUIRE_FALSE(rep.consistent.has_value());
}

TEST_CASE("enumerate_removals covers all subsets in deterministic order") {
  const LayeredGraph g = fixtures::gtri();
  EnumerateOptions opts;
  opts.max_size = 2;
  const RemovalTable table = enumerate_removals(g, opts);
  REQUIRE(table.rows.size() == 1 + 9 + 36);
  REQUIRE(table.rows[0].removed.empty());
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const auto& a = table.rows[i - 1];
    const auto& b = table.rows[i];
    const bool ordered = a.removed.size() < b.removed.size() ||
                         (a.removed.size() == b.removed.size() && a.removed < b.removed);
    REQUIRE(ordered);
  }
  for (const auto& row : table.rows) {
    REQUIRE(row.consistent.has_value());
    REQUIRE(row.consistent.value());
  }

  SECTION("parallel evaluation yields the same table") {
    EnumerateOptions par = opts;
    par.jobs = 3;
    const RemovalTable t2 = enumerate_removals(g, par);
    REQUIRE(to_csv(t2) == to_csv(table));
  }
}

TEST_CASE("enumerate_removals with an explicit subset list") {
  const LayeredGraph g = fixtures::gsq2();
  EnumerateOptions opts;
  opts.subsets = std::vector<std::vector<std::string>>{
      {"v2"}, {"v2", "v3"}, {"v2", "v3", "v4"}};
  const RemovalTable table = enumerate_removals(g, opts);
  REQUIRE(table.rows.size() == 3);
  REQUIRE(*table.rows[0].lambda2 == Catch::Approx(1.0).margin(1e-8));
  REQUIRE(*table.rows[1].lambda2 == Catch::Approx(0.5357).margin(5e-5));
  REQUIRE(table.rows[1].witnesses == std::vector<std::string>{"v7"});
  REQUIRE(*table.rows[2].lambda2 == Catch::Approx(0.2531).margin(5e-5));
  REQUIRE(table.rows[2].witnesses == std::vector<std::string>{"v7", "v8"});
}

TEST_CASE("enumerate_removals degenerate and guarded cases") {
  SECTION("single node graph") {
    LayeredGraphSpec s;
    s.layers = {{"v1"}};
    EnumerateOptions opts;
    opts.max_size = 0;
    const RemovalTable table = enumerate_removals(LayeredGraph::build(s), opts);
    REQUIRE(table.rows.size() == 1);
    REQUIRE_FALSE(table.rows[0].lambda2.has_value());
    REQUIRE(table.rows[0].predicted == Prediction::preserved);
    REQUIRE_FALSE(table.rows[0].consistent.has_value());
    REQUIRE(to_csv(table).find("n/a") != std::string::npos);
  }
  SECTION("max size beyond the removable pool") {
    EnumerateOptions opts;
    opts.max_size = 10; // gtri has 9 removable nodes
    REQUIRE_THROWS_AS(enumerate_removals(fixtures::gtri(), opts), ValidationError);
  }
  SECTION("subset guard") {
    EnumerateOptions opts;
    opts.max_size = 3;
    opts.guard = 10;
    REQUIRE_THROWS_WITH(enumerate_removals(fixtures::gtri(), opts),
                        Catch::Matchers::ContainsSubstring("guard"));
    opts.override_guard = true;
    REQUIRE_NOTHROW(enumerate_removals(fixtures::gtri(), opts));
  }
}

TEST_CASE("alpha bound check") {
  const LayeredGraph g = fixtures::gtri();
  SECTION("alpha = 1 holds on the full graph") {
    const auto rep = alpha_bound_check(g, 1.0);
    REQUIRE(rep.hypothesis_holds);
    REQUIRE(rep.min_from_above_degree == 1);
    REQUIRE(rep.bound_satisfied);
    REQUIRE(*rep.lambda2 == Catch::Approx(1.0).margin(1e-8));
  }
  SECTION("hypothesis fails once v2 is removed") {
    const auto rep = alpha_bound_check(g.remove_nodes(std::vector<std::string>{"v2"}), 1.0);
    REQUIRE_FALSE(rep.hypothesis_holds);
    REQUIRE(rep.detail.find("v4") != std::string::npos);
  }
  SECTION("alpha = 0 is trivially true") {
    REQUIRE(alpha_bound_check(g, 0.0).hypothesis_holds);
    REQUIRE(alpha_bound_check(g, 0.0).bound_satisfied);
  }
  SECTION("negative alpha is rejected") {
    REQUIRE_THROWS_AS(alpha_bound_check(g, -0.5), ValidationError);
  }
}

TEST_CASE("interval check on fixtures and degenerate graphs") {
  REQUIRE(interval_check(fixtures::gtri()));
  REQUIRE(interval_check(fixtures::gsq1()));
  LayeredGraphSpec s;
  s.layers = {{"v1"}, {"v2"}};
  s.inter_edges = {{"v1", "v2"}};
  REQUIRE(interval_check(LayeredGraph::build(s)));
  s.layers = {{"v1"}};
  s.inter_edges.clear();
  REQUIRE(interval_check(LayeredGraph::build(s)));
}

TEST_CASE("generator produces valid overlap-condition graphs deterministically") {
  for (int seed = 1; seed <= 25; ++seed) {
    const LayeredGraph a = random_layered_path_graph(seed, 3, 4);
    const LayeredGraph b = random_layered_path_graph(seed, 3, 4);
    REQUIRE(a == b);
    REQUIRE_NOTHROW(validate_layered_path(a));
    REQUIRE(check_overlap_condition(a).satisfied);
  }
  REQUIRE_FALSE(random_layered_path_graph(1, 3, 4) == random_layered_path_graph(2, 3, 4));
}

TEST_CASE("the indeterminate band refuses to classify") {
  REQUIRE(detail::classify_lambda2(1.0));
  REQUIRE(detail::classify_lambda2(1.0 - 5e-9));
  REQUIRE_FALSE(detail::classify_lambda2(0.5));
  REQUIRE_FALSE(detail::classify_lambda2(1.0 - 1e-6));
  REQUIRE_THROWS_AS(detail::classify_lambda2(1.0 - 1e-7), NumericalError);
}

TEST_CASE("classification tolerances separate one from below-one") {
  // generated graphs: every removal classifies consistently
  for (int seed = 1; seed <= 10; ++seed) {
    const LayeredGraph g = random_layered_path_graph(seed, 3, 4);
    std::vector<std::string> pool;
    for (int li = 1; li < g.layer_count(); ++li)
      for (NodeIndex v : g.layer(li)) pool.push_back(g.base().label(v));
    for (const auto& node : pool) {
      const auto rep = classify_removal(g, {node});
      if (rep.lambda2) REQUIRE(rep.consistent.value());
    }
  }
}
