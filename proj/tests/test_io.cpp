#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "statsum/io.hpp"

using namespace statsum;

TEST_CASE("edge list parsing") {
  SECTION("triangle") {
    std::istringstream in("n 3\n1 2\n1 3\n2 3\n");
    ParsedInput p = parse_edge_list(in);
    REQUIRE(p.is_graph());
    CHECK(p.graph().n() == 3);
    CHECK(p.graph().edge_count() == 3);
    CHECK(p.graph().weight(0).to_string() == "w_1_2");
  }
  SECTION("signed lines produce a root set") {
    std::istringstream in("n 2\n1 2 +\n1 2 -\n");
    ParsedInput p = parse_edge_list(in);
    REQUIRE_FALSE(p.is_graph());
    CHECK(p.root_set().size() == 2);
    CHECK(p.root_set().roots()[0].minus == false);
    CHECK(p.root_set().roots()[1].minus == true);
  }
  SECTION("loops are rejected with the line number") {
    std::istringstream in("n 2\n1 1\n");
    CHECK_THROWS_AS(parse_edge_list(in), LoopEdgeError);
  }
  SECTION("duplicates are rejected") {
    std::istringstream in("n 3\n1 2\n2 1\n");
    CHECK_THROWS_AS(parse_edge_list(in), DuplicateEdgeError);
  }
  SECTION("missing header") {
    std::istringstream in("1 2\n");
    CHECK_THROWS_AS(parse_edge_list(in), ParseError);
  }
  SECTION("out-of-range vertex") {
    std::istringstream in("n 2\n1 3\n");
    CHECK_THROWS_AS(parse_edge_list(in), ParseError);
  }
  SECTION("all-ones weight mode") {
    std::istringstream in("n 3\n1 2\n2 3\n");
    ParsedInput p = parse_edge_list(in, WeightMode::kAllOnes);
    CHECK(p.graph().weight(0) == RingElem(1));
  }
  SECTION("expected Laplacian entries parse") {
    std::istringstream in("n 2\n1 2\nL 1 1 w_1_2\nL 1 2 -w_1_2\n");
    ParsedInput p = parse_edge_list(in);
    REQUIRE(p.expected_laplacian.size() == 2);
    CHECK(std::get<2>(p.expected_laplacian[1]) == -RingElem::variable("w_1_2"));
  }
}

TEST_CASE("weight files") {
  std::istringstream in("1 2 3\n2 3 1/2\n");
  auto weights = parse_weight_file(in);
  CHECK(weights.at({1, 2}) == RingElem(3));
  CHECK(weights.at({2, 3}) == RingElem::rational(1, 2));

  Graph g(3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  apply_weights(g, weights);
  CHECK(g.weight(0) == RingElem(3));

  Graph missing(3);
  missing.add_edge(1, 3);
  CHECK_THROWS_AS(apply_weights(missing, weights), std::invalid_argument);
}

TEST_CASE("core spec files") {
  Graph g = Graph::complete(3);
  std::istringstream in("1 2 2\n");
  MultiSubgraph m = parse_core_spec(in, g);
  CHECK(m.mult[g.edge_index(1, 2)] == 2);
  CHECK(m.edge_count() == 2);

  std::istringstream bad("1 2 3\n");
  CHECK_THROWS_AS(parse_core_spec(bad, g), ParseError);
  std::istringstream not_edge("1 4 1\n");
  CHECK_THROWS_AS(parse_core_spec(not_edge, g), ParseError);
}

TEST_CASE("polynomial parsing corner cases") {
  CHECK(parse_ring_elem("0") == RingElem(0));
  CHECK(parse_ring_elem("-3") == RingElem(-3));
  CHECK(parse_ring_elem("2/4") == RingElem::rational(1, 2));
  CHECK(parse_ring_elem("w_1_2^2 - 1") ==
        RingElem::variable("w_1_2").pow(2) - RingElem(1));
  CHECK(parse_ring_elem("3*w_1_2*w_2_3") ==
        RingElem(3) * RingElem::variable("w_1_2") * RingElem::variable("w_2_3"));
  CHECK_THROWS_AS(parse_ring_elem(""), ParseError);
  CHECK_THROWS_AS(parse_ring_elem("w_1_2 +"), ParseError);
}
