#include "augcube/decompose.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace augcube {

namespace {

Vertex U(const LadderCert& c, int i) { return c.u[static_cast<std::size_t>(i - 1)]; }
Vertex V(const LadderCert& c, int i) { return c.v[static_cast<std::size_t>(i - 1)]; }

std::vector<Vertex> parse_labels(const std::array<const char*, 16>& labels, int take) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(take));
  for (int i = 0; i < take; ++i) out.push_back(parse_label(labels[static_cast<std::size_t>(i)]));
  return out;
}

// Hamiltonian cycle of AQ_4 used as the 2-regular base side.
constexpr std::array<const char*, 16> kBaseCycle = {
    "0111", "1000", "1100", "0100", "0000", "1111", "1011", "0011",
    "0010", "1010", "1110", "0001", "0101", "1101", "1001", "0110"};

// Spanning ladder certificate with its special 4-cycle at rank 5.  It avoids
// both the base cycle above and the core of the base ladder below, so it
// serves as the complement-side witness of both AQ_4 base pairs.
constexpr std::array<const char*, 16> kSpecialLadderU = {
    "0010", "1101", "1110", "0110", "0100", "1011", "1000", "0000"};
constexpr std::array<const char*, 16> kSpecialLadderV = {
    "0101", "1010", "1001", "0001", "0011", "1100", "1111", "0111"};

// Spanning ladder certificate whose core is the 3-regular base side.
constexpr std::array<const char*, 16> kCoreLadderU = {
    "1000", "0111", "0011", "1011", "1111", "0000", "0100", "1100"};
constexpr std::array<const char*, 16> kCoreLadderV = {
    "1001", "0110", "0010", "1010", "1110", "0001", "0101", "1101"};

LadderCert special_ladder_base() {
  LadderCert c;
  c.n = 4;
  c.u = parse_labels(kSpecialLadderU, 8);
  c.v = parse_labels(kSpecialLadderV, 8);
  c.special_t = 5;
  c.special_dim = 4;
  return c;
}

// The two corner rungs the complement-side certificate must stay clear of
// (they are the edges the core drops, so the host alone does not forbid them).
bool avoids_corner_rungs(const LadderCert& cert, const LadderCert& first) {
  const Edge r1 = make_edge(U(first, 1), V(first, 1));
  const Edge r4 = make_edge(U(first, 4), V(first, 4));
  for (const Edge& e : cert_edges(cert))
    if (e == r1 || e == r4) return false;
  return true;
}

bool ladder_pair_valid(const LadderCert& first, const LadderCert& second, const Graph& aq4) {
  if (!validate_cert(first, aq4, false).overall()) return false;
  const Graph host = graph_difference(aq4, core_graph(first).edges());
  return validate_cert(second, host, true).overall() && avoids_corner_rungs(second, first);
}

CycleSeq embedded_cycle(const CycleSeq& c, int n) {
  if (n < c.n || n > kMaxDim) throw std::invalid_argument("embedding dimension out of range");
  CycleSeq out = c;
  out.n = n;
  return out;
}

CycleSeq mirror_cycle(const CycleSeq& c) {
  const Vertex hi = Vertex{1} << (c.n - 1);
  CycleSeq out = c;
  for (Vertex& w : out.verts) {
    if (w & hi) throw std::invalid_argument("mirror requires all labels in the 0-half");
    w |= hi;
  }
  return out;
}

// Both halves of a dimension-(n-1) graph plus the dimension-n matching of
// the requested kind: the doubling step of the general recursion.
Graph doubled_with_matching(const Graph& g0, int n, EdgeKind kind) {
  if (g0.dim() != n - 1) throw std::invalid_argument("doubling expects a half-size graph");
  Graph out(n);
  const Vertex hi = Vertex{1} << (n - 1);
  for (const Edge& e : g0.edges()) {
    out.add_edge(e.a, e.b);
    out.add_edge(e.a | hi, e.b | hi);
  }
  for (const Edge& e : half_matching("", n, kind)) out.add_edge(e.a, e.b);
  return out;
}

void check_decompose_dim(int n, int lo) {
  if (n < lo || n > kMaxDim)
    throw std::invalid_argument("decomposition dimension out of range [" + std::to_string(lo) +
                                "," + std::to_string(kMaxDim) + "]");
}

}  // namespace

const Aq4HamiltonianBase& base_aq4_hamiltonian() {
  static const Aq4HamiltonianBase base = [] {
    Aq4HamiltonianBase b;
    b.cycle.n = 4;
    b.cycle.verts = parse_labels(kBaseCycle, 16);
    const Graph aq4 = build_aq(4);
    if (b.cycle.verts.size() != 16 || !is_cycle_in(b.cycle, aq4))
      throw std::logic_error("embedded base cycle is not a Hamiltonian cycle of AQ_4");
    b.ladder = special_ladder_base();
    const Graph host = graph_difference(aq4, graph_of_cycle(b.cycle).edges());
    if (!validate_cert(b.ladder, host, true).overall())
      throw std::logic_error("embedded base ladder does not span the cycle complement");
    return b;
  }();
  return base;
}

LadderCert search_ladder_pair_first(const Graph& aq4, const LadderCert& second) {
  // Exhaustive depth-first search for a spanning ladder certificate of AQ_4
  // with the pinned corners u1=1000, v1=1001, u4=1011, v4=1010 whose core
  // leaves room for `second`.  Fills u2..u3, u5..u8, then v2..v3, v5..v8;
  // neighbor lists are sorted, so the first hit is lexicographically minimal.
  LadderCert c;
  c.n = 4;
  c.u.assign(8, 0);
  c.v.assign(8, 0);
  c.u[0] = parse_label("1000");
  c.v[0] = parse_label("1001");
  c.u[3] = parse_label("1011");
  c.v[3] = parse_label("1010");
  std::set<Vertex> used = {c.u[0], c.v[0], c.u[3], c.v[3]};

  // Fill order: ranks cycle through u first, then v, skipping the pins.
  const std::array<std::pair<bool, int>, 12> order = {{{true, 2},
                                                       {true, 3},
                                                       {true, 5},
                                                       {true, 6},
                                                       {true, 7},
                                                       {true, 8},
                                                       {false, 2},
                                                       {false, 3},
                                                       {false, 5},
                                                       {false, 6},
                                                       {false, 7},
                                                       {false, 8}}};

  auto slot = [&](bool u_side, int rank) -> Vertex& {
    return u_side ? c.u[static_cast<std::size_t>(rank - 1)]
                  : c.v[static_cast<std::size_t>(rank - 1)];
  };

  std::function<bool(std::size_t)> fill = [&](std::size_t step) -> bool {
    if (step == order.size()) return ladder_pair_valid(c, second, aq4);
    const auto [u_side, rank] = order[step];
    const Vertex prev = slot(u_side, rank - 1);
    for (Vertex cand : aq4.neighbors(prev)) {
      if (used.count(cand)) continue;
      // Cycle edge to the next pinned/filled rank, where one exists.
      if (rank == 3 && !aq4.has_edge(cand, slot(u_side, 4))) continue;
      if (rank == 8 && !aq4.has_edge(cand, slot(u_side, 1))) continue;
      // Rung to the already-filled u-side when filling v.
      if (!u_side && !aq4.has_edge(cand, slot(true, rank))) continue;
      slot(u_side, rank) = cand;
      used.insert(cand);
      if (fill(step + 1)) return true;
      used.erase(cand);
    }
    return false;
  };

  if (!fill(0)) throw std::logic_error("no spanning ladder certificate matches the pinned corners");
  return c;
}

const Aq4LadderPairBase& base_aq4_ladder_pair() {
  static const Aq4LadderPairBase base = [] {
    Aq4LadderPairBase b;
    b.second = special_ladder_base();
    b.first.n = 4;
    b.first.u = parse_labels(kCoreLadderU, 8);
    b.first.v = parse_labels(kCoreLadderV, 8);
    const Graph aq4 = build_aq(4);
    if (!ladder_pair_valid(b.first, b.second, aq4))
      b.first = search_ladder_pair_first(aq4, b.second);
    if (!ladder_pair_valid(b.first, b.second, aq4))
      throw std::logic_error("no valid AQ_4 ladder pair available");
    return b;
  }();
  return base;
}

Decomposition decompose_n1_2(int n) {
  check_decompose_dim(n, 4);
  const Aq4HamiltonianBase& base = base_aq4_hamiltonian();
  CycleSeq cyc = base.cycle;
  LadderCert lad = base.ladder;
  std::vector<std::string> trace = {"4:aq4-base:hamiltonian-cycle+complement-ladder"};

  for (int k = 5; k <= n; ++k) {
    cyc = embedded_cycle(cyc, k);
    lad = embedded(lad, k);
    const CycleSeq cyc_m = mirror_cycle(cyc);
    const LadderCert lad_m = mirror(lad);

    // Splice the two half cycles through one hypercube pair {aa', bb'} whose
    // endpoints stay clear of the four crossing edges the lift adds at ranks
    // 5 and 6 -- otherwise the cycle would reclaim edges the ladder needs.
    const std::set<Vertex> avoid = {U(lad, 5), U(lad, 6), V(lad, 5), V(lad, 6)};
    const std::size_t len = cyc.verts.size();
    std::size_t cut = len;
    for (std::size_t j = 0; j < len; ++j) {
      if (!avoid.count(cyc.verts[j]) && !avoid.count(cyc.verts[(j + 1) % len])) {
        cut = j;
        break;
      }
    }
    if (cut == len) throw std::logic_error("no splice edge clear of the lift crossing edges");

    CycleSeq next;
    next.n = k;
    next.verts.reserve(2 * len);
    for (std::size_t i = 0; i < len; ++i) next.verts.push_back(cyc.verts[(cut + 1 + i) % len]);
    for (std::size_t i = 0; i < len; ++i)
      next.verts.push_back(cyc_m.verts[(cut + len - i) % len]);
    cyc = std::move(next);
    lad = lift_h(lad, lad_m, 5);
    trace.push_back(std::to_string(k) + ":splice-hamiltonian-cycle+hypercube-lift[s=5]");
  }

  Decomposition d;
  d.n = n;
  d.n1 = 2;
  d.n2 = 2 * n - 3;
  d.h = graph_of_cycle(cyc);
  d.k = graph_difference(build_aq(n), d.h.edges());
  d.cert_h = cyc;
  d.cert_k = lad;
  d.trace = std::move(trace);
  return d;
}

Decomposition decompose_n1_3(int n) {
  check_decompose_dim(n, 4);
  const Aq4LadderPairBase& base = base_aq4_ladder_pair();
  LadderCert l1 = base.first;
  LadderCert l2 = base.second;
  std::vector<std::string> trace = {"4:aq4-base:edge-disjoint-ladder-pair"};

  for (int k = 5; k <= n; ++k) {
    l1 = embedded(l1, k);
    l2 = embedded(l2, k);
    l1 = lift_h(l1, mirror(l1), 5);
    l2 = lift_c(l2, mirror(l2));
    trace.push_back(std::to_string(k) + ":hypercube-lift[s=5]+complement-lift");
  }

  Decomposition d;
  d.n = n;
  d.n1 = 3;
  d.n2 = 2 * n - 4;
  d.h = core_graph(l1);
  d.k = graph_difference(build_aq(n), d.h.edges());
  d.cert_h = l1;
  d.cert_k = l2;
  d.trace = std::move(trace);
  return d;
}

Decomposition decompose_n1_4(int n) {
  check_decompose_dim(n, 5);
  Decomposition prev = decompose_n1_3(n - 1);

  LadderCert l1 = embedded(std::get<LadderCert>(prev.cert_h), n);
  LadderCert l2 = embedded(prev.cert_k, n);
  const LadderCert l1m = mirror(l1);
  const LadderCert l2m = mirror(l2);
  const int m = l1.m();

  // Both copies of the full first ladder, tied together by the hypercube
  // rung-matching at every rank except the corners 1 and 4: those corner
  // vertices already have degree 4 inside one ladder (cycle + rung + cross).
  Graph h(n);
  for (const Edge& e : cert_edges(l1)) h.add_edge(e.a, e.b);
  for (const Edge& e : cert_edges(l1m)) h.add_edge(e.a, e.b);
  for (int i = 1; i <= m; ++i) {
    if (i == 1 || i == 4) continue;
    h.add_edge(U(l1, i), U(l1m, i));
    h.add_edge(V(l1, i), V(l1m, i));
  }

  Decomposition d;
  d.n = n;
  d.n1 = 4;
  d.n2 = 2 * n - 5;
  d.h = std::move(h);
  d.k = graph_difference(build_aq(n), d.h.edges());
  d.cert_h = lift_h(l1, l1m, 5);
  d.cert_k = lift_c(l2, l2m);
  d.trace = std::move(prev.trace);
  d.trace.push_back(std::to_string(n) + ":parallel-ladder-rung-matching+complement-lift");
  return d;
}

Decomposition decompose(int n, int n1) {
  check_decompose_dim(n, 4);
  const int n2 = 2 * n - 1 - n1;
  if (n1 < 2 || n1 > n2)
    throw std::invalid_argument("split requires 2 <= n1 <= n2 with n1 + n2 = 2n-1");
  if (n1 == 2) return decompose_n1_2(n);
  if (n1 == 3) return decompose_n1_3(n);
  if (n1 == 4) return decompose_n1_4(n);

  Decomposition prev = decompose(n - 1, n1 - 1);
  LadderCert l1 = embedded(std::get<LadderCert>(prev.cert_h), n);
  LadderCert l2 = embedded(prev.cert_k, n);
  const LadderCert l1m = mirror(l1);
  const LadderCert l2m = mirror(l2);

  Decomposition d;
  d.n = n;
  d.n1 = n1;
  d.n2 = n2;
  d.h = doubled_with_matching(prev.h, n, EdgeKind::hypercube);
  d.k = doubled_with_matching(prev.k, n, EdgeKind::complement);
  d.cert_h = lift_h(l1, l1m, 5);
  d.cert_k = lift_c(l2, l2m);
  d.trace = std::move(prev.trace);
  d.trace.push_back(std::to_string(n) + ":half-doubling+hypercube/complement-matchings");
  return d;
}

Bundle bundle_from(const Decomposition& d, bool swap_sides) {
  Bundle b;
  b.n = d.n;
  b.trace = d.trace;
  if (!swap_sides) {
    b.n1 = d.n1;
    b.n2 = d.n2;
    b.h = d.h;
    b.k = d.k;
    b.cert_h = d.cert_h;
    b.cert_k = d.cert_k;
  } else {
    b.n1 = d.n2;
    b.n2 = d.n1;
    b.h = d.k;
    b.k = d.h;
    b.cert_h = d.cert_k;
    b.cert_k = d.cert_h;
  }
  return b;
}

std::string to_meta_text(const Bundle& b) {
  std::ostringstream os;
  os << "n=" << b.n << "\nn1=" << b.n1 << "\nn2=" << b.n2 << '\n';
  for (const std::string& rule : b.trace) os << "rule=" << rule << '\n';
  return os.str();
}

namespace {

std::string witness_text(const PancyclicWitness& w) {
  if (std::holds_alternative<CycleSeq>(w)) return to_cycle_text(std::get<CycleSeq>(w));
  return to_cert_text(std::get<LadderCert>(w));
}

PancyclicWitness parse_witness(const std::string& text) {
  if (text.rfind("cycle=", 0) == 0) return parse_cycle_text(text);
  return parse_cert_text(text);
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + p.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + p.string());
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + p.string());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

void write_bundle(const Bundle& b, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir / "H.edges", to_edge_list(b.h));
  write_file(dir / "K.edges", to_edge_list(b.k));
  write_file(dir / "certH.cert", witness_text(b.cert_h));
  write_file(dir / "certK.cert", witness_text(b.cert_k));
  write_file(dir / "meta", to_meta_text(b));
}

Bundle read_bundle(const std::filesystem::path& dir) {
  Bundle b;
  b.h = parse_edge_list(read_file(dir / "H.edges"));
  b.k = parse_edge_list(read_file(dir / "K.edges"));
  b.cert_h = parse_witness(read_file(dir / "certH.cert"));
  b.cert_k = parse_witness(read_file(dir / "certK.cert"));

  std::istringstream meta(read_file(dir / "meta"));
  std::string line;
  while (std::getline(meta, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("bad meta line: " + line);
    const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "n")
      b.n = std::stoi(val);
    else if (key == "n1")
      b.n1 = std::stoi(val);
    else if (key == "n2")
      b.n2 = std::stoi(val);
    else if (key == "rule")
      b.trace.push_back(val);
    else
      throw std::runtime_error("unknown meta field: " + key);
  }
  if (b.n < 4 || b.n > kMaxDim || b.n1 + b.n2 != 2 * b.n - 1)
    throw std::runtime_error("meta does not describe a valid split");
  if (b.h.dim() != b.n || b.k.dim() != b.n)
    throw std::runtime_error("edge files do not match the meta dimension");
  return b;
}

}  // namespace augcube
