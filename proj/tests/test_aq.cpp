#include <set>
#include <stdexcept>

#include "augcube/aq.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace augcube;

TEST_CASE("labels render zero-padded and round-trip") {
  CHECK(to_label(0b0011, 4) == "0011");
  CHECK(to_label(0, 4) == "0000");
  CHECK(to_label(0b100101, 6) == "100101");
  CHECK(parse_label("0011") == 0b0011u);
  CHECK(parse_label("100101") == 0b100101u);
  for (Vertex v = 0; v < 32; ++v) CHECK(parse_label(to_label(v, 5)) == v);
  CHECK_THROWS_AS(parse_label("01x1"), std::invalid_argument);
  CHECK_THROWS_AS(to_label(16, 4), std::invalid_argument);
}

TEST_CASE("smallest cubes have the expected shape") {
  const Graph aq1 = build_aq(1);
  CHECK(aq1.vertex_count() == 2);
  CHECK(aq1.edge_count() == 1);
  CHECK(aq1.has_edge(0, 1));

  // AQ_2 is complete on four vertices: both matchings fill the missing pairs.
  const Graph aq2 = build_aq(2);
  CHECK(aq2.edge_count() == 6);
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = a + 1; b < 4; ++b) CHECK(aq2.has_edge(a, b));

  const Graph aq4 = build_aq(4);
  CHECK(aq4.vertex_count() == 16);
  CHECK(aq4.edge_count() == 56);
  for (Vertex v = 0; v < 16; ++v) CHECK(aq4.degree(v) == 7);

  CHECK_THROWS_AS(build_aq(0), std::invalid_argument);
  CHECK_THROWS_AS(build_aq(17), std::invalid_argument);
}

TEST_CASE("adjacency classification matches the pinned examples") {
  const auto h4 = classify_edge(parse_label("0011"), parse_label("1011"), 4);
  REQUIRE(h4.has_value());
  CHECK(*h4 == EdgeClass{EdgeKind::hypercube, 4});

  const auto c4 = classify_edge(parse_label("0011"), parse_label("1100"), 4);
  REQUIRE(c4.has_value());
  CHECK(*c4 == EdgeClass{EdgeKind::complement, 4});

  CHECK_FALSE(classify_edge(parse_label("0011"), parse_label("0110"), 4).has_value());
  CHECK_THROWS_AS(classify_edge(3, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(classify_edge(3, 16, 4), std::invalid_argument);
}

TEST_CASE("partners match the pinned examples") {
  CHECK(partner_of(parse_label("0000"), 4, EdgeKind::hypercube, 4) == parse_label("1000"));
  CHECK(partner_of(parse_label("1010"), 2, EdgeKind::complement, 4) == parse_label("1001"));
  CHECK(partner_of(parse_label("0100"), 4, EdgeKind::complement, 4) == parse_label("1011"));
  CHECK_THROWS_AS(partner_of(0, 1, EdgeKind::complement, 4), std::invalid_argument);
  CHECK_THROWS_AS(partner_of(0, 5, EdgeKind::hypercube, 4), std::invalid_argument);
}

TEST_CASE("bitwise construction agrees with the recursive reference") {
  for (int n = 1; n <= 6; ++n) {
    const Graph g = build_aq(n);
    const oracles::EdgeSet expect = oracles::aq_edges_recursive(n);
    oracles::EdgeSet got;
    for (const Edge& e : g.edges()) got.insert(oracles::norm(e.a, e.b));
    CHECK(got == expect);
  }
}

TEST_CASE("classification agrees with the recursive reference on all pairs") {
  for (int n = 2; n <= 6; ++n) {
    const Vertex count = Vertex{1} << n;
    for (Vertex x = 0; x < count; ++x)
      for (Vertex y = x + 1; y < count; ++y)
        CHECK(classify_edge(x, y, n) == oracles::classify_recursive(x, y, n));
  }
}

TEST_CASE("every vertex sees each edge class exactly once") {
  const int n = 5;
  const Graph g = build_aq(n);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    CHECK(g.degree(v) == 2 * n - 1);
    std::set<std::pair<int, int>> classes;
    for (Vertex w : g.neighbors(v)) {
      const auto cls = classify_edge(v, w, n);
      REQUIRE(cls.has_value());
      classes.insert({cls->kind == EdgeKind::hypercube ? 0 : 1, cls->dim});
    }
    // n hypercube dims + n-1 complement dims, all distinct.
    CHECK(classes.size() == static_cast<std::size_t>(2 * n - 1));
  }
}

TEST_CASE("half matchings spell out the expected pairs") {
  const auto top = half_matching("", 4, EdgeKind::hypercube);
  CHECK(top.size() == 8);
  for (const Edge& e : top) CHECK((e.a ^ e.b) == 0b1000u);

  const auto comp = half_matching("0", 3, EdgeKind::complement);
  REQUIRE(comp.size() == 4);
  CHECK(comp[0] == make_edge(parse_label("0000"), parse_label("0111")));
  CHECK(comp[1] == make_edge(parse_label("0001"), parse_label("0110")));
  CHECK(comp[2] == make_edge(parse_label("0010"), parse_label("0101")));
  CHECK(comp[3] == make_edge(parse_label("0011"), parse_label("0100")));

  CHECK(half_matching("", 2, EdgeKind::hypercube).size() == 2);
  CHECK_THROWS_AS(half_matching("0", 1, EdgeKind::hypercube), std::invalid_argument);
}

TEST_CASE("edge class counts per dimension are uniform") {
  const int n = 6;
  const Graph g = build_aq(n);
  std::set<std::pair<int, int>> keys;
  std::vector<int> counts(2 * (n + 1), 0);
  for (const Edge& e : g.edges()) {
    const auto cls = classify_edge(e.a, e.b, n);
    REQUIRE(cls.has_value());
    counts[static_cast<std::size_t>(
        2 * cls->dim + (cls->kind == EdgeKind::complement ? 1 : 0))]++;
  }
  for (int d = 1; d <= n; ++d) CHECK(counts[static_cast<std::size_t>(2 * d)] == 1 << (n - 1));
  for (int d = 2; d <= n; ++d)
    CHECK(counts[static_cast<std::size_t>(2 * d + 1)] == 1 << (n - 1));
}

TEST_CASE("graph editing validates its inputs") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.remove_edge(0, 2), std::invalid_argument);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("difference and union behave as set operations") {
  const Graph aq4 = build_aq(4);
  std::vector<Edge> top = half_matching("", 4, EdgeKind::hypercube);
  const Graph smaller = graph_difference(aq4, top);
  CHECK(smaller.edge_count() == 48);
  CHECK(graph_union(smaller, graph_from_edges(4, top)) == aq4);
  // Union tolerates overlap, difference insists the edges exist.
  CHECK(graph_union(aq4, smaller) == aq4);
  CHECK_THROWS_AS(graph_difference(smaller, top), std::invalid_argument);
}

TEST_CASE("edge list serialization round-trips byte for byte") {
  const Graph g = build_aq(4);
  const std::string text = to_edge_list(g);
  CHECK(text.rfind("n=4\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 57);  // header + 56 edges
  const Graph back = parse_edge_list(text);
  CHECK(back == g);
  CHECK(to_edge_list(back) == text);
  CHECK_THROWS_AS(parse_edge_list("0000 0001\n"), std::runtime_error);
}

TEST_CASE("dot export names vertices by label") {
  const std::string dot = to_dot(build_aq(2));
  CHECK(dot.rfind("graph AQ2 {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 12);  // six "--" connectors
  CHECK(dot.find("\"00\" -- \"01\";") != std::string::npos);
}
