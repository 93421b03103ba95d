#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "lgtw/bounds.hpp"
#include "lgtw/constructions.hpp"

#include "fixtures.hpp"

using namespace lgtw;
using namespace fixtures;

namespace {

Graph spider(std::vector<int> legs) {
  std::vector<Edge> e;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph(next, e);
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1.x"), InvalidInput);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
}

TEST_CASE("average-degree bound") {
  auto k4 = avg_degree_lower_bound(complete(4));
  CHECK(k4.raw == Rational(11, 8));
  CHECK(k4.value == 2);
  auto c6 = avg_degree_lower_bound(cycle(6));
  CHECK(c6.raw == Rational(0));
  CHECK(c6.value == 1);
  CHECK(avg_degree_lower_bound(Graph(4)).value == 0);
  // K4 plus a pendant: evaluated on the K4 inside
  auto pendant = avg_degree_lower_bound(from_pairs(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}));
  CHECK(pendant.average_degree == Rational(3));
  CHECK(pendant.used_dense_subgraph);
  auto big = avg_degree_lower_bound(cycle(19));
  CHECK_FALSE(big.used_dense_subgraph);
  CHECK(big.value == 1);
}

TEST_CASE("minimum-degree bound") {
  std::vector<Edge> c82;
  for (int i = 0; i < 8; ++i) {
    c82.push_back({i, (i + 1) % 8});
    c82.push_back({i, (i + 2) % 8});
  }
  CHECK(min_degree_lower_bound(Graph(8, c82)) == 7);
  CHECK(min_degree_lower_bound(complete(4)) == 4);
  CHECK(min_degree_lower_bound(path(4)) == 0);
  CHECK(min_degree_lower_bound(complete(5)) == 7);
  CHECK(min_degree_lower_bound(complete(6)) == 10);
  // per component: an isolated vertex does not hide the K4
  Graph k4_plus(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(min_degree_lower_bound(k4_plus) == 4);
}

TEST_CASE("elementary bounds") {
  auto k4 = elementary_bounds(complete(4), 3, 3);
  auto value = [&](const std::string& name) {
    for (const auto& e : k4)
      if (e.name == name) return e.value;
    return -1;
  };
  CHECK(value("incident-expansion-tree") == 11);
  CHECK(value("incident-expansion-path") == 11);
  CHECK(value("max-degree-clique") == 2);
  CHECK(value("graph-tw-minus-one") == 2);
  CHECK(value("half-graph-tw") == 1);

  auto s5 = elementary_bounds(star(5), 1, 1);
  CHECK(s5[3].value == 9);
  CHECK(exact_treewidth(line_graph(star(5))).width == 4);

  for (const auto& e : elementary_bounds(complete(2), 1, 1)) CHECK(e.value <= 1);
}

TEST_CASE("tree line decomposition") {
  auto s4 = tree_line_decomposition(star(4));
  CHECK(validate(s4, star(4)).ok());
  CHECK(width(s4) == 3);
  CHECK(width(tree_line_decomposition(path(5))) == 1);
  Graph sp = spider({2, 2, 2});
  auto d = tree_line_decomposition(sp);
  CHECK(validate(d, sp).ok());
  CHECK(width(d) == 2);
  CHECK(exact_treewidth(line_graph(sp)).width == 2);
  CHECK_THROWS_AS(tree_line_decomposition(cycle(4)), InvalidInput);
  CHECK_THROWS_AS(tree_line_decomposition(Graph(1)), InvalidInput);
}

TEST_CASE("balanced subdivision examples") {
  SECTION("star K_{1,9}") {
    Graph s = star(9);
    auto r = balanced_subdivision_decomposition(exact_treewidth(s).decomposition, s);
    CHECK(r.closed_form == Rational(43, 3));
    CHECK(r.width == 8);
    CHECK_FALSE(r.fell_back);
    CHECK(r.large_vertices == 1);
  }
  SECTION("path P6 from its path decomposition") {
    Graph p = path(6);
    auto pd = exact_pathwidth(p).decomposition;
    auto r = balanced_subdivision_decomposition(pd, p);
    CHECK(r.width == 1);
    CHECK_NOTHROW(as_path(r.decomposition));
    CHECK(exact_pathwidth(line_graph(p)).width == 1);
  }
  SECTION("all vertices small: no subdivisions") {
    Graph c = cycle(5);
    TreeDecomposition td{{{0, 1, 2, 3, 4}}, {}, Subject::graph};
    auto r = balanced_subdivision_decomposition(td, c);
    CHECK(r.subdivisions == 0);
    CHECK(r.width <= (width(td) + 1) * c.max_degree() - 1);
  }
  SECTION("maximum degree below width falls back") {
    Graph k5 = complete(5);
    TreeDecomposition td{{{0, 1, 2, 3, 4}}, {}, Subject::graph};
    Graph c5 = cycle(5);
    auto r = balanced_subdivision_decomposition(td, c5);
    CHECK(r.fell_back);
    CHECK(r.width == width(expand_to_line(td, c5)));
    CHECK_FALSE(r.notice.empty());
    auto k = balanced_subdivision_decomposition(td, k5);
    CHECK_FALSE(k.fell_back);
  }
  SECTION("invalid input") {
    Graph k2 = complete(2);
    TreeDecomposition bad{{{0}, {1}}, {{0, 1}}, Subject::graph};
    CHECK_THROWS_AS(balanced_subdivision_decomposition(bad, k2), InvalidInput);
  }
}

TEST_CASE("balanced subdivision stays within its closed forms") {
  std::mt19937 rng(61);
  std::vector<Graph> graphs = small_suite(120, 61);
  for (int i = 0; i < 40; ++i) {
    // high-degree, low-width graphs exercise the large-vertex branch
    Graph t = random_tree(rng, std::uniform_int_distribution<int>(4, 12)(rng));
    Graph hub = star(std::uniform_int_distribution<int>(3, 9)(rng));
    graphs.push_back(t);
    graphs.push_back(hub);
  }
  for (const Graph& g : graphs) {
    if (g.edge_count() == 0) continue;
    auto td = exact_treewidth(g).decomposition;
    auto pd = exact_pathwidth(g).decomposition;
    auto tree = balanced_subdivision_decomposition(td, g);
    auto pathr = balanced_subdivision_decomposition(pd, g);
    CHECK(validate(tree.decomposition, g).ok());
    CHECK(validate(pathr.decomposition, g).ok());
    CHECK(Rational(tree.width) <= tree.closed_form);
    CHECK(Rational(pathr.width) <= pathr.closed_form);
    CHECK_NOTHROW(as_path(pathr.decomposition));
    // an arbitrary, non-optimal tree shape with a high-degree node
    TreeDecomposition wide = td;
    NodeId hubnode = 0;
    for (int j = 0; j < 4; ++j) {
      wide.bags.push_back(wide.bags[hubnode]);
      wide.tree_edges.push_back({hubnode, wide.node_count() - 1});
    }
    auto w = balanced_subdivision_decomposition(wide, g);
    CHECK(validate(w.decomposition, g).ok());
    CHECK(Rational(w.width) <= w.closed_form);
  }
}

TEST_CASE("bounds report for K4") {
  BoundsOptions opt;
  opt.compute_exact = true;
  auto r = bounds_report(complete(4), opt);
  CHECK(r.find("avg-degree")->value == 2);
  CHECK(r.find("min-degree")->value == 4);
  CHECK(r.find("max-degree-clique")->value == 2);
  CHECK(r.find("graph-tw-minus-one")->value == 2);
  CHECK(r.find("half-graph-tw")->value == 1);
  CHECK(r.find("incident-expansion-tree")->value == 11);
  CHECK(r.find("balanced-subdivision-tree")->value == 11);
  REQUIRE(r.exact_tw_line);
  CHECK(*r.exact_tw_line == 4);
  CHECK(*r.exact_pw_line == 4);

  std::ostringstream out;
  write_report(out, r);
  CHECK(out.str().find("bound min-degree lower tw(L) 4\n") != std::string::npos);
  CHECK(out.str().find("exact tw(L) 4\n") != std::string::npos);
  CHECK(out.str().find("raw avg-degree 11/8\n") != std::string::npos);
}

TEST_CASE("bounds report special cases") {
  SECTION("C_8^2: min-degree bound equals exact pw(L)") {
    std::vector<Edge> e;
    for (int i = 0; i < 8; ++i) {
      e.push_back({i, (i + 1) % 8});
      e.push_back({i, (i + 2) % 8});
    }
    BoundsOptions opt;
    opt.compute_exact = true;
    auto r = bounds_report(Graph(8, e), opt);
    CHECK(r.find("min-degree")->value == 7);
    CHECK(*r.exact_pw_line == 7);
  }
  SECTION("paths: exact tw(L) is Δ - 1") {
    BoundsOptions opt;
    opt.compute_exact = true;
    auto r = bounds_report(path(6), opt);
    CHECK(*r.exact_tw_line == 1);
  }
  SECTION("edgeless") {
    auto r = bounds_report(Graph(3), {});
    for (const auto& e : r.entries) CHECK(e.value == 0);
    CHECK_FALSE(r.exact_tw_line);
  }
}

TEST_CASE("every lower bound sits below the exact value and every upper above it") {
  BoundsOptions opt;
  opt.compute_exact = true;
  std::vector<Graph> graphs = small_suite(200, 67);
  for (const Graph& g : graphs) {
    if (g.edge_count() == 0) continue;
    auto r = bounds_report(g, opt);  // enforces the ordering internally
    REQUIRE(r.exact_tw_line);
    for (const auto& e : r.entries) {
      int exact = e.target == Target::tw_line ? *r.exact_tw_line : *r.exact_pw_line;
      if (e.kind == BoundKind::lower) CHECK(e.value <= exact);
      else CHECK(e.value >= exact);
    }
  }
}
