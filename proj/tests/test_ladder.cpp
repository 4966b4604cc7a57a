#include <set>
#include <stdexcept>

#include "augcube/aq.hpp"
#include "augcube/decompose.hpp"
#include "augcube/ladder.hpp"
#include "augcube/verify.hpp"
#include "doctest.h"

using namespace augcube;

namespace {

// The special-4-cycle base certificate and the host it spans: the complement
// of the base Hamiltonian cycle in AQ_4.
LadderCert base_ladder() { return base_aq4_hamiltonian().ladder; }

Graph base_ladder_host() {
  const Aq4HamiltonianBase& b = base_aq4_hamiltonian();
  return graph_difference(build_aq(4), graph_of_cycle(b.cycle).edges());
}

std::vector<Vertex> labels(std::initializer_list<const char*> ls) {
  std::vector<Vertex> out;
  for (const char* l : ls) out.push_back(parse_label(l));
  return out;
}

}  // namespace

TEST_CASE("certificate edge set has 3m+2 edges with the two cross chords") {
  const LadderCert c = base_ladder();
  const std::vector<Edge> es = cert_edges(c);
  CHECK(es.size() == 26);
  const std::set<Edge> set(es.begin(), es.end());
  CHECK(set.size() == 26);
  // Rung at rank 1 and both cross chords u1-v4, u4-v1.
  CHECK(set.count(make_edge(parse_label("0010"), parse_label("0101"))) == 1);
  CHECK(set.count(make_edge(parse_label("0010"), parse_label("0001"))) == 1);
  CHECK(set.count(make_edge(parse_label("0110"), parse_label("0101"))) == 1);
}

TEST_CASE("malformed certificates are rejected") {
  LadderCert c = base_ladder();
  c.u.pop_back();
  CHECK_THROWS_AS(cert_edges(c), std::invalid_argument);  // ranks differ

  LadderCert d = base_ladder();
  d.u[2] = d.u[0];
  CHECK_THROWS_AS(cert_edges(d), std::invalid_argument);  // repeated vertex

  LadderCert e;
  e.n = 4;
  e.u = labels({"0000", "0001", "0011", "0010"});
  e.v = labels({"0100", "0101", "0111", "0110"});
  CHECK_THROWS_AS(cert_edges(e), std::invalid_argument);  // m < 6
}

TEST_CASE("the base certificate validates against its host") {
  const Report r = validate_cert(base_ladder(), base_ladder_host(), true);
  CHECK(r.overall());
  // Its special 4-cycle sits at rank 5 and complements across all 4 bits.
  const LadderCert c = base_ladder();
  REQUIRE(c.special_t.has_value());
  CHECK(*c.special_t == 5);
  CHECK(c.special_dim == 4);
  CHECK((c.u[4] ^ c.u[5]) == 0b1111u);
  CHECK((c.v[4] ^ c.v[5]) == 0b1111u);
}

TEST_CASE("validation notices a broken certificate") {
  LadderCert c = base_ladder();
  std::swap(c.u[0], c.u[1]);
  const Report r = validate_cert(c, base_ladder_host(), true);
  CHECK_FALSE(r.overall());

  // Wrong special index: the rank-6 pair is not a complement pair.
  LadderCert d = base_ladder();
  d.special_t = 6;
  CHECK_FALSE(validate_cert(d, base_ladder_host(), true).overall());

  // Special required but absent.
  LadderCert e = base_ladder();
  e.special_t.reset();
  CHECK_FALSE(validate_cert(e, base_ladder_host(), true).overall());
  CHECK(validate_cert(e, base_ladder_host(), false).overall());

  // Host missing a certificate edge.
  const LadderCert f = base_ladder();
  Graph host = base_ladder_host();
  const std::vector<Edge> es = cert_edges(f);
  host.remove_edge(es.front().a, es.front().b);
  CHECK_FALSE(validate_cert(f, host, true).overall());
}

TEST_CASE("embedding and mirroring") {
  const LadderCert c = base_ladder();
  const LadderCert c5 = embedded(c, 5);
  CHECK(c5.n == 5);
  CHECK(c5.u == c.u);
  CHECK_THROWS_AS(embedded(c, 3), std::invalid_argument);

  const LadderCert m = mirror(c5);
  CHECK(m.u[0] == (c.u[0] | 0b10000u));
  CHECK(m.special_t == c.special_t);
  CHECK_THROWS_AS(mirror(m), std::invalid_argument);  // labels already in the 1-half

  // Mirroring at the certificate's own width fails: the base uses all 4 bits.
  CHECK_THROWS_AS(mirror(c), std::invalid_argument);
}

TEST_CASE("hypercube lift doubles the certificate inside the next cube") {
  const LadderCert l = embedded(base_ladder(), 5);
  const LadderCert lm = mirror(l);
  const LadderCert lifted = lift_h(l, lm, 5);

  CHECK(lifted.n == 5);
  CHECK(lifted.m() == 16);
  CHECK_FALSE(lifted.special_t.has_value());
  CHECK(cert_edges(lifted).size() == 50);
  // After the crossover at rank 5 the walk continues on the mirror side.
  CHECK(lifted.u[4] == l.u[4]);
  CHECK(lifted.u[5] == (l.u[4] | 0b10000u));
  CHECK(validate_cert(lifted, build_aq(5), false).overall());

  CHECK_THROWS_AS(lift_h(l, lm, 4), std::invalid_argument);
  CHECK_THROWS_AS(lift_h(l, lm, 8), std::invalid_argument);
  CHECK_THROWS_AS(lift_h(l, l, 5), std::invalid_argument);  // not a mirror pair
}

TEST_CASE("complement lift crosses at the special 4-cycle and keeps it") {
  const LadderCert l = embedded(base_ladder(), 5);
  const LadderCert lm = mirror(l);
  const LadderCert lifted = lift_c(l, lm);

  CHECK(lifted.n == 5);
  CHECK(lifted.m() == 16);
  REQUIRE(lifted.special_t.has_value());
  CHECK(*lifted.special_t == 5);
  CHECK(lifted.special_dim == 5);
  // The new special pair joins the two halves across all five bits.
  CHECK(to_label(lifted.u[4], 5) == "00100");
  CHECK(to_label(lifted.u[5], 5) == "11011");
  CHECK(validate_cert(lifted, build_aq(5), true).overall());

  // Without a special 4-cycle there is nowhere to cross.
  LadderCert plain = l;
  plain.special_t.reset();
  CHECK_THROWS_AS(lift_c(plain, mirror(plain)), std::invalid_argument);

  // The special pair must complement across n-1 bits, not fewer.
  const LadderCert wide = embedded(base_ladder(), 6);
  CHECK_THROWS_AS(lift_c(wide, mirror(wide)), std::invalid_argument);
}

TEST_CASE("lifts chain through increasing dimensions") {
  LadderCert h = base_ladder();
  LadderCert c = base_ladder();
  for (int n = 5; n <= 9; ++n) {
    h = lift_h(embedded(h, n), mirror(embedded(h, n)), 5);
    c = lift_c(embedded(c, n), mirror(embedded(c, n)));
    CHECK(h.m() == 1 << (n - 1));
    const Graph aq = build_aq(n);
    CHECK(validate_cert(h, aq, false).overall());
    CHECK(validate_cert(c, aq, true).overall());
    CHECK(*c.special_t == 5);
    CHECK(c.special_dim == n);
  }
}

TEST_CASE("extracted cycles match the pinned examples") {
  const LadderCert c = base_ladder();

  const CycleSeq c4 = extract_cycle(c, 4);
  CHECK(c4.verts == labels({"0100", "1011", "1100", "0011"}));  // <u5,u6,v6,v5>

  const CycleSeq c5 = extract_cycle(c, 5);
  CHECK(c5.verts == labels({"1101", "0010", "0001", "1001", "1010"}));  // <u2,u1,v4,v3,v2>

  CHECK_THROWS_AS(extract_cycle(c, 3), std::invalid_argument);
  CHECK_THROWS_AS(extract_cycle(c, 17), std::invalid_argument);
}

TEST_CASE("every extractable length yields a simple cycle inside the core") {
  const LadderCert base = base_ladder();
  const LadderCert lifted = lift_h(embedded(base, 5), mirror(embedded(base, 5)), 5);
  for (const LadderCert& c : {base, lifted}) {
    const Graph core = core_graph(c);
    for (int len = 4; len <= 2 * c.m(); ++len) {
      const CycleSeq seq = extract_cycle(c, len);
      CHECK(static_cast<int>(seq.verts.size()) == len);
      CHECK(is_cycle_in(seq, core));  // in particular: never a corner rung
    }
  }
}

TEST_CASE("the core is 3-regular, 3-connected and has every length from 4 up") {
  const Graph core = core_graph(base_ladder());
  CHECK(core.edge_count() == 24);
  CHECK(verify_regular(core, 3, "core").overall());
  CHECK(vertex_connectivity(core) == 3);
  std::set<int> want;
  for (int len = 4; len <= 16; ++len) want.insert(len);
  CHECK(exhaustive_cycle_spectrum(core) == want);
}

TEST_CASE("core-only validation tolerates exactly the two corner rungs") {
  const LadderCert c = base_ladder();
  const Graph core = core_graph(c);
  CHECK_FALSE(validate_cert(c, core, true).overall());
  CHECK(validate_cert(c, core, true, /*core_only=*/true).overall());
  // Any other missing edge still fails.
  Graph thinner = core;
  const Edge e = make_edge(c.u[4], c.u[5]);
  thinner.remove_edge(e.a, e.b);
  CHECK_FALSE(validate_cert(c, thinner, true, /*core_only=*/true).overall());
}

TEST_CASE("cycle membership checks are strict") {
  const Graph aq4 = build_aq(4);
  CycleSeq seq;
  seq.n = 4;
  seq.verts = labels({"0000", "0001", "0011"});
  CHECK(is_cycle_in(seq, aq4));
  seq.verts.push_back(parse_label("0001"));  // repeat
  CHECK_FALSE(is_cycle_in(seq, aq4));
  seq.verts = labels({"0000", "0001", "0110"});  // 0110-0000 is not an edge
  CHECK_FALSE(is_cycle_in(seq, aq4));
  CHECK(graph_of_cycle(extract_cycle(base_ladder(), 6)).edge_count() == 6);
}

TEST_CASE("certificate text round-trips") {
  for (const LadderCert& c :
       {base_ladder(), lift_h(embedded(base_ladder(), 5), mirror(embedded(base_ladder(), 5)), 5)}) {
    const std::string text = to_cert_text(c);
    const LadderCert back = parse_cert_text(text);
    CHECK(back == c);
    CHECK(to_cert_text(back) == text);
  }
  const std::string text = to_cert_text(base_ladder());
  CHECK(text.rfind("m=8\n", 0) == 0);
  CHECK(text.find("special_t=5\n") != std::string::npos);
  CHECK_THROWS(parse_cert_text("m=8\nu=0000\n"));
  CHECK_THROWS(parse_cert_text("what=8\n"));
}

TEST_CASE("cycle text round-trips") {
  const CycleSeq cyc = base_aq4_hamiltonian().cycle;
  const std::string text = to_cycle_text(cyc);
  CHECK(text.rfind("cycle=0111 1000", 0) == 0);
  const CycleSeq back = parse_cycle_text(text);
  CHECK(back == cyc);
  CHECK_THROWS(parse_cycle_text("path=0000 0001\n"));
}
