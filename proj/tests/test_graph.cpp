#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bzeta/errors.hpp"
#include "bzeta/graph.hpp"
#include "corpus.hpp"

using namespace bzeta;

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# triangle\n0 1\n1 2\n\n2 0  # closing edge\n");
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  const Graph padded = parse_edge_list("n 5\n0 1\n");
  CHECK(padded.n() == 5);
  CHECK(padded.m() == 1);

  CHECK(parse_edge_list("").n() == 0);
  CHECK(parse_edge_list("n 3\n").m() == 0);
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0 -1\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), InputError);
  CHECK_THROWS_AS(read_edge_list_file(BZETA_TEST_DATA "/self_loop.edges"), InputError);
  CHECK_THROWS_AS(read_edge_list_file(BZETA_TEST_DATA "/does_not_exist.edges"), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
}

TEST_CASE("serialization round trip") {
  for (const Graph& g : testing::random_corpus()) {
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  }
  std::istringstream in("0 1\n");
  CHECK(parse_edge_list(in).m() == 1);
}

TEST_CASE("degree lists") {
  CHECK(parse_degree_list("2,2,2,3,4,5,6") == testing::example_degrees());
  CHECK(parse_degree_list("2 2 2 3 4 5 6") == testing::example_degrees());
  CHECK(parse_degree_list(" 1, 1 ") == DegreeSequence({1, 1}));
  CHECK_THROWS_AS(parse_degree_list("2,-1"), InputError);
  CHECK_THROWS_AS(parse_degree_list("2,a"), InputError);

  const DegreeSequence& d = testing::example_degrees();
  CHECK(d.sum() == 24);
  CHECK(d.max() == 6);
  CHECK(d.min() == 2);
}

TEST_CASE("Havel-Hakimi realizes graphical sequences") {
  const Graph g = realize_degree_sequence(testing::example_degrees());
  CHECK(g.n() == 7);
  CHECK(g.m() == 12);
  CHECK(degree_sequence(g) == testing::example_degrees());
  CHECK(realize_degree_sequence(testing::example_degrees()) == g);

  CHECK(realize_degree_sequence(DegreeSequence({0, 0})).m() == 0);
  CHECK(realize_degree_sequence(DegreeSequence()).n() == 0);

  // Every sequence realized from a random graph is graphical.
  for (const Graph& h : testing::random_corpus()) {
    const DegreeSequence dh = degree_sequence(h);
    CHECK(degree_sequence(realize_degree_sequence(dh)) == dh);
  }
}

TEST_CASE("non-graphical sequences") {
  try {
    realize_degree_sequence(DegreeSequence({3, 3, 3, 1}));
    FAIL("expected NonGraphicalError");
  } catch (const NonGraphicalError& e) {
    CHECK(e.failing_index() == 2);
  }
  try {
    realize_degree_sequence(DegreeSequence({1, 1, 1}));
    FAIL("expected NonGraphicalError");
  } catch (const NonGraphicalError& e) {
    CHECK(e.failing_index() == 0);
  }
  CHECK_THROWS_AS(realize_degree_sequence(DegreeSequence({4, 1, 1})), NonGraphicalError);
}

TEST_CASE("random realizations keep the degree sequence") {
  const DegreeSequence& d = testing::example_degrees();
  const Graph base = realize_degree_sequence(d);
  bool any_different = false;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_realization(d, seed);
    CHECK(degree_sequence(g) == d);
    CHECK(random_realization(d, seed) == g);
    any_different = any_different || !(g == base);
  }
  CHECK(any_different);
}

TEST_CASE("random graphs") {
  CHECK(random_graph(6, Rational(0), 3).m() == 0);
  CHECK(random_graph(6, Rational(1), 3).m() == 15);
  CHECK(random_graph(8, Rational(1, 2), 42) == read_edge_list_file(BZETA_TEST_DATA "/random8.edges"));
  CHECK(random_graph(8, Rational(1, 2), 42) == random_graph(8, Rational(1, 2), 42));
  CHECK_THROWS(random_graph(3, Rational(3, 2), 1));
  CHECK_THROWS(random_graph(3, Rational(-1, 2), 1));
}

TEST_CASE("line graphs") {
  // |E(L(G))| = sum over vertices of C(d, 2)
  const Graph g = realize_degree_sequence(testing::example_degrees());
  const Graph lg = line_graph(g);
  CHECK(lg.n() == 12);
  CHECK(lg.m() == 37);

  CHECK(line_graph(testing::complete_graph(3)).m() == 3);
  CHECK(line_graph(testing::star_graph(4)).m() == 6);
  CHECK(line_graph(testing::path_graph(5)) == testing::path_graph(4));

  for (const Graph& h : testing::random_corpus()) {
    const DegreeSequence degrees = degree_sequence(h);
    std::size_t expected = 0;
    for (std::size_t d : degrees.degrees()) expected += d * (d - (d > 0 ? 1 : 0)) / 2;
    CHECK(line_graph(h).m() == expected);
  }
}
