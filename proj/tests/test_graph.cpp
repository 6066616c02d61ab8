#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "spantree/errors.hpp"

using namespace spantree;

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# triangle\n3 3\n1 2\n\n2 3\n1 3 # closing edge\n");
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(1, 3));
  CHECK(g.degree(2) == 2);

  CHECK(parse_edge_list("1 0\n").order() == 1);
  CHECK(parse_edge_list("4 0").edge_count() == 0);
}

TEST_CASE("edge list rejects malformed input") {
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 2\n2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 -1\n"), ParseError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("format round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = fixtures::random_graph(rng, 1 + trial % 9, 0.4);
    CHECK(parse_edge_list(format_edge_list(g)) == g);
    CHECK_FALSE(validate(g));
  }
}

TEST_CASE("graph construction errors") {
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 5}}), std::invalid_argument);
}

TEST_CASE("neighbourhoods and induced subgraphs") {
  const Graph g = fixtures::fig1a();
  CHECK(g.neighborhood(2) == VertexSet{1, 3, 5, 6});
  CHECK(g.neighborhood_in(2, VertexSet{1, 3, 4}) == VertexSet{1, 3});
  CHECK(g.degree_in(5, VertexSet{2, 6}) == 2);

  const Subgraph s = induced_subgraph(g, VertexSet{2, 5, 6});
  CHECK(s.graph.order() == 3);
  CHECK(s.graph.edge_count() == 3);
  CHECK(s.origin == std::vector<Vertex>{2, 5, 6});
}

TEST_CASE("vertex sets") {
  const VertexSet a{5, 1, 3};
  CHECK(a.items() == std::vector<Vertex>{1, 3, 5});
  CHECK(a.intersect(VertexSet{3, 4, 5}) == VertexSet{3, 5});
  CHECK(a.minus(VertexSet{3}) == VertexSet{1, 5});
  CHECK(VertexSet{1, 5}.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(VertexSet{1, 5}));
  CHECK(VertexSet::range(3) == VertexSet{1, 2, 3});
}

TEST_CASE("named families") {
  CHECK(complete(4).edge_count() == 6);
  CHECK(complete_multipartite({2, 3}).edge_count() == 6);
  CHECK(path(4).edge_count() == 3);
  CHECK(cycle(5).edge_count() == 5);
  CHECK(edgeless(3).edge_count() == 0);
  CHECK(is_connected(path(5)));
  CHECK_FALSE(is_connected(edgeless(2)));
  CHECK(bipartition(cycle(6)));
  CHECK_FALSE(bipartition(cycle(5)));
  CHECK(is_independent(cycle(6), VertexSet{1, 3, 5}));
}

TEST_CASE("ferrers graphs and conjugates") {
  const PartitionShape shape({3, 2, 2, 1});
  CHECK(conjugate(shape) == PartitionShape({4, 3, 1}));
  CHECK(conjugate(conjugate(shape)) == shape);
  CHECK(shape.size() == 8);

  const FerrersGraph f = ferrers_graph(shape);
  CHECK(f.graph.order() == 7);
  CHECK(f.graph.edge_count() == 8);
  CHECK(f.rows.size() == 4);
  CHECK(f.columns.size() == 3);
  CHECK(f.graph.degree(f.rows[0]) == 3);
  CHECK(f.graph.degree(f.columns[0]) == 4);

  CHECK_THROWS_AS(PartitionShape({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PartitionShape({2, 0}), std::invalid_argument);
}

TEST_CASE("integer lists") {
  CHECK(parse_int_list("3,2,2,1") == std::vector<int>{3, 2, 2, 1});
  CHECK(parse_int_list("4") == std::vector<int>{4});
  CHECK_THROWS_AS(parse_int_list("3,,1"), ParseError);
  CHECK_THROWS_AS(parse_int_list(""), ParseError);
  CHECK_THROWS_AS(parse_int_list("a"), ParseError);
}
