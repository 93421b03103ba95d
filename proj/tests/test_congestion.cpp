#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lgtw/congestion.hpp"
#include "lgtw/exact.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace lgtw;
using namespace fixtures;

TEST_CASE("vertex congestion examples") {
  Graph k3 = complete(3);
  LeafEmbedding star3{4, {{0, 1}, {0, 2}, {0, 3}}, {1, 2, 3}};
  auto p = vertex_congestion(star3, k3);
  CHECK(p.value == 3);
  CHECK(p.per_node == std::vector<int>{3, 2, 2, 2});
  CHECK(vertex_congestion(LeafEmbedding{2, {{0, 1}}, {0, 1}}, complete(2)).value == 1);
}

TEST_CASE("tree congestion examples") {
  CHECK(min_tree_congestion(complete(2)).value == 1);
  CHECK(min_tree_congestion(complete(3)).value == 3);
  auto k4 = min_tree_congestion(complete(4));
  CHECK(k4.value == 5);
  CHECK(k4.kind == CongestionKind::tree_vertex);
  CHECK(vertex_congestion(std::get<LeafEmbedding>(k4.witness), complete(4)).value == 5);
  CHECK(exact_treewidth(line_graph(complete(4))).width + 1 == 5);
}

TEST_CASE("path congestion and cutwidth examples") {
  CHECK(min_path_congestion(complete(3)).value == 3);
  CHECK(min_path_congestion(complete(2)).value == 1);
  CHECK(min_path_congestion(star(3)).value == 3);
  CHECK(cutwidth(star(3)).value == 2);
  CHECK(cutwidth(path(4)).value == 1);
  CHECK(cutwidth(complete(4)).value == 4);
  CHECK(cutwidth(Graph(3)).value == 0);
}

TEST_CASE("congestion solver errors") {
  CHECK_THROWS_AS(min_tree_congestion(Graph(4)), InvalidInput);
  CHECK_THROWS_AS(min_path_congestion(Graph(4)), InvalidInput);
  CHECK_THROWS_AS(min_tree_congestion(path(11)), LimitExceeded);
  CHECK_THROWS_WITH(min_tree_congestion(path(11)), Catch::Matchers::ContainsSubstring("limit of 10"));
  CHECK_THROWS_AS(min_path_congestion(path(21)), LimitExceeded);
  CHECK_THROWS_AS(cutwidth(path(21)), LimitExceeded);
  SolverLimits wide;
  wide.tree_congestion = 11;
  CHECK(min_tree_congestion(path(11), wide).value == 2);
}

TEST_CASE("isolated vertices are ignored by the congestion solvers") {
  Graph g(6, {{0, 1}, {1, 2}, {2, 0}});
  auto tree = min_tree_congestion(g);
  CHECK(tree.value == 3);
  const auto& e = std::get<LeafEmbedding>(tree.witness);
  CHECK(e.leaf_of[3] == -1);
  auto pathc = min_path_congestion(g);
  CHECK(std::get<LinearOrdering>(pathc.witness).order.size() == 3);
}

TEST_CASE("layout solvers match permutation brute force") {
  for (const Graph& g : small_suite(60, 31)) {
    if (g.edge_count() == 0) continue;
    auto pc = min_path_congestion(g);
    CHECK(pc.value == oracle::path_congestion(g));
    CHECK(path_congestion(std::get<LinearOrdering>(pc.witness), g) == pc.value);
    auto cw = cutwidth(g);
    CHECK(cw.value == oracle::cutwidth(g));
    CHECK(cutwidth_of(std::get<LinearOrdering>(cw.witness), g) == cw.value);
  }
}

TEST_CASE("tree congestion matches exhaustive search over all sub-cubic trees") {
  // Every tree of maximum degree 3 on up to 2n'-2 nodes, every leaf placement.
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : connected_graphs(n)) {
      int expected = oracle::tree_congestion(g, 2 * n - 2);
      INFO("n=" << n << " m=" << g.edge_count());
      CHECK(min_tree_congestion(g).value == expected);
    }
}

TEST_CASE("congestion relations on the small suite") {
  for (const Graph& g : small_suite(80, 37)) {
    if (g.edge_count() == 0) continue;
    auto tree = min_tree_congestion(g);
    auto pathc = min_path_congestion(g);
    CHECK(tree.value >= g.max_degree());
    CHECK(tree.value <= pathc.value);
    CHECK(vertex_congestion(std::get<LeafEmbedding>(tree.witness), g).value == tree.value);
  }
}

TEST_CASE("caterpillar embedding reproduces the path congestion of its ordering") {
  std::mt19937 rng(41);
  for (const Graph& g : small_suite(40, 41)) {
    auto verts = non_isolated_vertices(g);
    std::shuffle(verts.begin(), verts.end(), rng);
    LinearOrdering o{verts};
    auto e = caterpillar_embedding(o, g);
    CHECK_FALSE(embedding_defect(e, g).has_value());
    CHECK(vertex_congestion(e, g).value == path_congestion(o, g));
  }
}

TEST_CASE("cutwidth sandwich") {
  auto s = cutwidth_sandwich_check(star(3));
  CHECK(s.lower == 2);
  CHECK(s.cutwidth == 2);
  CHECK(s.upper == 2);
  CHECK(s.holds);
  auto k3 = cutwidth_sandwich_check(complete(3));
  CHECK((k3.lower == 2 && k3.cutwidth == 2 && k3.upper == 2));
  auto c4 = cutwidth_sandwich_check(cycle(4));
  CHECK((c4.lower == 2 && c4.cutwidth == 2 && c4.upper == 2));
  CHECK_THROWS_WITH(cutwidth_sandwich_check(complete(2)),
                    Catch::Matchers::ContainsSubstring("maximum degree at least 2"));
  for (const Graph& g : small_suite(60, 43))
    if (g.max_degree() >= 2) CHECK(cutwidth_sandwich_check(g).holds);
}

TEST_CASE("ordering evaluators reject malformed orderings") {
  Graph g(4, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(path_congestion(LinearOrdering{{0, 1}}, g), InvalidInput);
  CHECK_THROWS_AS(path_congestion(LinearOrdering{{0, 1, 1}}, g), InvalidInput);
  CHECK_THROWS_AS(path_congestion(LinearOrdering{{0, 1, 2, 3}}, g), InvalidInput);
  CHECK(path_congestion(LinearOrdering{{0, 1, 2}}, g) == 2);
  CHECK(cutwidth_of(LinearOrdering{{0, 2, 1}}, g) == 2);
}
