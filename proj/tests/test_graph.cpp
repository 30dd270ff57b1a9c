#include <doctest.h>

#include <random>
#include <sstream>

#include "support/bridge.hpp"
#include "tokenham/error.hpp"
#include "tokenham/graph.hpp"

using namespace tokenham;

namespace {

std::vector<Edge> edge_set(const Graph& g) { return g.edges(); }

Graph random_graph(std::mt19937& rng, std::size_t order, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < order; ++u) {
    for (VertexId v = u + 1; v < order; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(order, edges);
}

}  // namespace

TEST_CASE("path, empty and fan families") {
  const Graph p3 = build(GraphFamily::path(3));
  CHECK(p3.order() == 3);
  CHECK(edge_set(p3) == std::vector<Edge>{{0, 1}, {1, 2}});

  const Graph e4 = build(GraphFamily::empty(4));
  CHECK(e4.order() == 4);
  CHECK(e4.edge_count() == 0);

  const Graph f13 = build(GraphFamily::fan(1, 3));
  CHECK(f13.order() == 4);
  CHECK(edge_set(f13) == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

  const Graph p1 = build(GraphFamily::path(1));
  CHECK(p1.order() == 1);
  CHECK(p1.edge_count() == 0);
}

TEST_CASE("remaining families") {
  CHECK(build(GraphFamily::complete(5)).edge_count() == 10);
  CHECK(build(GraphFamily::cycle(6)).edge_count() == 6);
  CHECK(build(GraphFamily::complete_bipartite(2, 3)).edge_count() == 6);
  CHECK(build(GraphFamily::star(4)) == build(GraphFamily::fan(4, 1)));
  const Graph sq = build(GraphFamily::square_of_path(4));
  CHECK(edge_set(sq) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("family parameters are validated") {
  CHECK_THROWS_AS(build(GraphFamily::path(0)), ParameterError);
  CHECK_THROWS_AS(build(GraphFamily::fan(0, 3)), ParameterError);
  CHECK_THROWS_AS(build(GraphFamily::cycle(2)), ParameterError);
  CHECK_THROWS_AS(build(GraphFamily{FamilyTag::Fan, {1}}), ParameterError);
  CHECK_THROWS_AS(parse_family_tag("wheel"), ParameterError);
  for (auto tag : {FamilyTag::Path, FamilyTag::Empty, FamilyTag::Complete, FamilyTag::Cycle,
                   FamilyTag::CompleteBipartite, FamilyTag::Star, FamilyTag::SquareOfPath, FamilyTag::Fan}) {
    CHECK(parse_family_tag(family_name(tag)) == tag);
  }
}

TEST_CASE("join examples") {
  const Graph triangle = join(build(GraphFamily::empty(1)), build(GraphFamily::path(2)));
  CHECK(triangle == build(GraphFamily::complete(3)));

  const Graph star = join(build(GraphFamily::empty(3)), build(GraphFamily::path(1)));
  CHECK(star.order() == 4);
  CHECK(star.degree(3) == 3);
  CHECK(star.edge_count() == 3);

  CHECK_THROWS_AS(join(Graph(0), Graph(2)), ParameterError);
}

TEST_CASE("join sizes on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t a = 1 + rng() % 7, b = 1 + rng() % 7;
    const Graph g = random_graph(rng, a, 0.4), h = random_graph(rng, b, 0.4);
    const Graph j = join(g, h);
    CHECK(j.order() == a + b);
    CHECK(j.edge_count() == g.edge_count() + h.edge_count() + a * b);
    CHECK(j.validate().empty());
    const auto expected = oracle::join(bridge::matrix(g), bridge::matrix(h));
    CHECK(bridge::matrix(j) == expected);
  }
}

TEST_CASE("fan degree profile") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 2; n <= 7; ++n) {
      const Graph f = build(GraphFamily::fan(m, n));
      const FanLayout layout{m, n};
      CHECK(f.validate().empty());
      CHECK(f.degree(layout.v(1)) == static_cast<std::size_t>(m + 1));
      CHECK(f.degree(layout.v(n)) == static_cast<std::size_t>(m + 1));
      for (int i = 2; i < n; ++i) CHECK(f.degree(layout.v(i)) == static_cast<std::size_t>(m + 2));
      for (int j = 1; j <= m; ++j) CHECK(f.degree(layout.w(j)) == static_cast<std::size_t>(n));
      CHECK(bridge::matrix(f) == oracle::fan(m, n));
    }
  }
}

TEST_CASE("validator rejects malformed adjacency") {
  CHECK_THROWS_AS(Graph::from_adjacency({{1}, {}}), ContractViolation);
  CHECK_THROWS_AS(Graph::from_adjacency({{0}}), ContractViolation);
  CHECK_THROWS_AS(Graph::from_adjacency({{2, 1}, {0}, {0}}), ContractViolation);
  CHECK_THROWS_AS(Graph::from_adjacency({{5}, {0}}), ContractViolation);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(2, loop), ContractViolation);
  const std::vector<Edge> far{{0, 9}};
  CHECK_THROWS_AS(Graph::from_edges(2, far), ContractViolation);
}

TEST_CASE("has_edge agrees between sparse and dense storage") {
  std::mt19937 rng(11);
  const Graph base = random_graph(rng, 40, 0.2);
  const auto edges = base.edges();
  const Graph sparse = Graph::from_edges(40, edges, 0);
  const Graph dense = Graph::from_edges(40, edges, 1000);
  for (VertexId u = 0; u < 40; ++u) {
    for (VertexId v = 0; v < 40; ++v) CHECK(sparse.has_edge(u, v) == dense.has_edge(u, v));
  }
  CHECK_FALSE(dense.has_edge(0, 99));
}

TEST_CASE("connected components") {
  CHECK(connected_components(build(GraphFamily::path(5))).count == 1);
  const auto empty = connected_components(build(GraphFamily::empty(4)));
  CHECK(empty.count == 4);
  CHECK(empty.label == std::vector<std::size_t>{0, 1, 2, 3});

  const std::vector<Edge> two{{0, 1}, {2, 3}};
  const auto c = connected_components(Graph::from_edges(4, two));
  CHECK(c.count == 2);
  CHECK(c.label[0] == c.label[1]);
  CHECK(c.label[2] == c.label[3]);
  CHECK(c.label[0] != c.label[2]);
}

TEST_CASE("components of a long path are found without recursion") {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < 300000; ++i) edges.emplace_back(i, i + 1);
  CHECK(connected_components(Graph::from_edges(300000, edges)).count == 1);
}

TEST_CASE("induced subgraph") {
  const Graph c5 = build(GraphFamily::cycle(5));
  const std::vector<VertexId> keep{0, 1, 3, 4};
  const Graph sub = induced_subgraph(c5, keep);
  CHECK(edge_set(sub) == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
}

TEST_CASE("fan layout labels") {
  const FanLayout layout{2, 3};
  CHECK(layout.label(0) == "v1");
  CHECK(layout.label(2) == "v3");
  CHECK(layout.label(3) == "w1");
  CHECK(layout.label(4) == "w2");
  CHECK(layout.is_hub(layout.w(1)));
  CHECK_FALSE(layout.is_hub(layout.v(3)));
}

TEST_CASE("dot and edge-list output") {
  const Graph f = build(GraphFamily::fan(1, 2));
  std::ostringstream dot;
  write_dot(dot, f, [](VertexId v) { return FanLayout{1, 2}.label(v); });
  CHECK(dot.str() ==
        "graph {\n  0 [label=\"v1\"];\n  1 [label=\"v2\"];\n  2 [label=\"w1\"];\n"
        "  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");

  std::ostringstream list;
  write_edge_list(list, f);
  CHECK(list.str() == "# order 3\n0 1\n0 2\n1 2\n");

  std::istringstream back(list.str());
  CHECK(read_edge_list(back) == f);
}

TEST_CASE("edge-list reader errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK(parse("# comment\n# order 2\n\n0 1\n").edge_count() == 1);
  CHECK(parse("# order 4\n").order() == 4);
  CHECK_THROWS_AS(parse("0 1\n"), ContractViolation);
  CHECK_THROWS_AS(parse(""), ContractViolation);
  CHECK_THROWS_AS(parse("# order 2\n0 x\n"), ContractViolation);
  CHECK_THROWS_AS(parse("# order 2\n0 1 2\n"), ContractViolation);
  CHECK_THROWS_AS(parse("# order 2\n0 5\n"), ContractViolation);
  CHECK_THROWS_AS(parse("# order -1\n"), ContractViolation);
}
