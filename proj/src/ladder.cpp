#include "augcube/ladder.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace augcube {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_shape(const LadderCert& c) {
  if (c.n < 1 || c.n > kMaxDim) throw std::invalid_argument("cert dimension out of range");
  if (c.u.size() != c.v.size()) throw std::invalid_argument("cert ranks differ between sides");
  if (c.m() < 6) throw std::invalid_argument("cert needs at least 6 ranks");
  for (Vertex w : c.u)
    if (w >> c.n) throw std::invalid_argument("cert label exceeds ambient dimension");
  for (Vertex w : c.v)
    if (w >> c.n) throw std::invalid_argument("cert label exceeds ambient dimension");
}

bool all_distinct(const LadderCert& c) {
  std::set<Vertex> seen(c.u.begin(), c.u.end());
  seen.insert(c.v.begin(), c.v.end());
  return seen.size() == 2 * c.u.size();
}

// 1-based rank accessors, matching the <u_1..u_m> convention.
Vertex U(const LadderCert& c, int i) { return c.u[static_cast<std::size_t>(i - 1)]; }
Vertex V(const LadderCert& c, int i) { return c.v[static_cast<std::size_t>(i - 1)]; }

std::string edge_str(Edge e, int n) { return to_label(e.a, n) + "-" + to_label(e.b, n); }

void sort_unique(std::vector<Edge>& es) {
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw std::logic_error("duplicate edge in certificate edge set");
}

}  // namespace

std::vector<Edge> cert_edges(const LadderCert& c) {
  check_shape(c);
  if (!all_distinct(c)) throw std::invalid_argument("cert vertices are not distinct");
  const int m = c.m();
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(3 * m + 2));
  for (int i = 1; i <= m; ++i) {
    const int j = i == m ? 1 : i + 1;
    es.push_back(make_edge(U(c, i), U(c, j)));
    es.push_back(make_edge(V(c, i), V(c, j)));
    es.push_back(make_edge(U(c, i), V(c, i)));
  }
  es.push_back(make_edge(U(c, 1), V(c, 4)));
  es.push_back(make_edge(U(c, 4), V(c, 1)));
  sort_unique(es);
  return es;
}

Report validate_cert(const LadderCert& c, const Graph& host, bool require_special,
                     bool core_only) {
  Report r;
  const std::string target = "cert[m=" + std::to_string(c.m()) + ",n=" + std::to_string(c.n) + "]";
  const auto t0 = Clock::now();

  std::vector<Edge> es;
  try {
    check_shape(c);
    if (c.n != host.dim()) throw std::invalid_argument("cert/host dimension mismatch");
    if (!all_distinct(c)) throw std::invalid_argument("cert vertices are not distinct");
    es = cert_edges(c);
  } catch (const std::exception& ex) {
    std::string why = ex.what();
    std::replace(why.begin(), why.end(), ' ', '-');
    r.add({"cert-shape", target, "well-formed", why, false, ms_since(t0)});
    return r;
  }
  r.add({"cert-shape", target, "well-formed", "ok", true, ms_since(t0)});

  const auto t1 = Clock::now();
  const bool spanning = 2 * static_cast<std::size_t>(c.m()) == host.vertex_count();
  r.add({"cert-spanning", target, std::to_string(host.vertex_count()) + "-vertices",
         std::to_string(2 * c.m()) + "-vertices", spanning, ms_since(t1)});

  const auto t2 = Clock::now();
  const Edge rung1 = make_edge(U(c, 1), V(c, 1));
  const Edge rung4 = make_edge(U(c, 4), V(c, 4));
  std::size_t missing = 0;
  std::string first_missing = "none";
  for (const Edge& e : es) {
    if (core_only && (e == rung1 || e == rung4)) continue;
    if (!host.has_edge(e.a, e.b)) {
      if (missing == 0) first_missing = edge_str(e, c.n);
      ++missing;
    }
  }
  r.add({"cert-edges", target, core_only ? "core-in-host" : "all-in-host",
         missing == 0 ? "ok" : "missing=" + std::to_string(missing) + ":" + first_missing,
         missing == 0, ms_since(t2)});

  if (require_special || c.special_t.has_value()) {
    const auto t3 = Clock::now();
    bool ok = false;
    std::string observed;
    if (!c.special_t.has_value()) {
      observed = "absent";
    } else {
      const int t = *c.special_t;
      const int d = c.special_dim;
      if (t < 5 || t > c.m() - 1) {
        observed = "t=" + std::to_string(t) + "-out-of-range";
      } else if (d < 2 || d > c.n) {
        observed = "dim=" + std::to_string(d) + "-out-of-range";
      } else if (partner_of(U(c, t), d, EdgeKind::complement, c.n) != U(c, t + 1) ||
                 partner_of(V(c, t), d, EdgeKind::complement, c.n) != V(c, t + 1)) {
        observed = "pair-not-complement-partners";
      } else {
        ok = true;
        observed = "t=" + std::to_string(t) + ",dim=" + std::to_string(d);
      }
    }
    r.add({"cert-special", target, "complement-4-cycle", observed, ok, ms_since(t3)});
  }
  return r;
}

LadderCert embedded(const LadderCert& c, int n) {
  check_shape(c);
  if (n < c.n || n > kMaxDim) throw std::invalid_argument("embedding dimension out of range");
  LadderCert out = c;
  out.n = n;
  return out;
}

LadderCert mirror(const LadderCert& c) {
  check_shape(c);
  const Vertex hi = Vertex{1} << (c.n - 1);
  for (Vertex w : c.u)
    if (w & hi) throw std::invalid_argument("mirror requires all labels in the 0-half");
  for (Vertex w : c.v)
    if (w & hi) throw std::invalid_argument("mirror requires all labels in the 0-half");
  LadderCert out = c;
  for (Vertex& w : out.u) w |= hi;
  for (Vertex& w : out.v) w |= hi;
  return out;
}

namespace {

// Shared preconditions of the two lifts: lm must be the mirror image of l.
void check_mirror_pair(const LadderCert& l, const LadderCert& lm) {
  if (l.n != lm.n || l.m() != lm.m())
    throw std::invalid_argument("lift requires certs of equal shape and dimension");
  const Vertex hi = Vertex{1} << (l.n - 1);
  for (int i = 1; i <= l.m(); ++i) {
    if (U(l, i) & hi) throw std::invalid_argument("lift requires the base cert in the 0-half");
    if (U(lm, i) != (U(l, i) | hi) || V(lm, i) != (V(l, i) | hi))
      throw std::invalid_argument("lift requires the second cert to mirror the first");
  }
}

// Post-construction invariant: the relabeled certificate implies exactly the
// intended edge set (both halves minus the cut edges, plus the four crossing
// edges).  Cheap relative to everything around it, so always on.
void check_lift_edges(const LadderCert& result, const LadderCert& l, const LadderCert& lm,
                      const std::vector<Edge>& cut_l, const std::vector<Edge>& cut_lm,
                      const std::vector<Edge>& crossing) {
  std::set<Edge> expected;
  for (const Edge& e : cert_edges(l)) expected.insert(e);
  for (const Edge& e : cut_l) expected.erase(e);
  for (const Edge& e : cert_edges(lm)) expected.insert(e);
  const auto lm_cross = {make_edge(U(lm, 1), V(lm, 4)), make_edge(U(lm, 4), V(lm, 1))};
  for (const Edge& e : cut_lm) expected.erase(e);
  for (const Edge& e : lm_cross) expected.erase(e);
  for (const Edge& e : crossing) expected.insert(e);
  const std::vector<Edge> got = cert_edges(result);
  if (!std::equal(got.begin(), got.end(), expected.begin(), expected.end()))
    throw std::logic_error("lifted certificate does not imply the constructed edge set");
}

}  // namespace

LadderCert lift_h(const LadderCert& l, const LadderCert& lm, int s) {
  check_mirror_pair(l, lm);
  const int m = l.m();
  if (s < 5 || s > m - 1) throw std::invalid_argument("lift rank s out of range [5,m-1]");

  LadderCert out;
  out.n = l.n;
  out.u.reserve(static_cast<std::size_t>(2 * m));
  out.v.reserve(static_cast<std::size_t>(2 * m));
  // Walk up the base side to rank s, cross over, walk the mirror side down to
  // rank 1, wrap to rank m, descend to s+1, cross back and finish the base.
  for (int i = 1; i <= 2 * m; ++i) {
    int j;
    const LadderCert* side;
    if (i <= s) {
      side = &l, j = i;
    } else if (i <= 2 * s) {
      side = &lm, j = 2 * s - i + 1;
    } else if (i <= m + s) {
      side = &lm, j = m + 2 * s - i + 1;
    } else {
      side = &l, j = i - m;
    }
    out.u.push_back(U(*side, j));
    out.v.push_back(V(*side, j));
  }

  check_lift_edges(out, l, lm,
                   {make_edge(U(l, s), U(l, s + 1)), make_edge(V(l, s), V(l, s + 1))},
                   {make_edge(U(lm, s), U(lm, s + 1)), make_edge(V(lm, s), V(lm, s + 1))},
                   {make_edge(U(l, s), U(lm, s)), make_edge(V(l, s), V(lm, s)),
                    make_edge(U(l, s + 1), U(lm, s + 1)), make_edge(V(l, s + 1), V(lm, s + 1))});
  return out;
}

LadderCert lift_c(const LadderCert& l, const LadderCert& lm) {
  check_mirror_pair(l, lm);
  const int m = l.m();
  if (!l.special_t.has_value())
    throw std::invalid_argument("complement lift requires a special 4-cycle");
  const int t = *l.special_t;
  if (t < 5 || t > m - 1) throw std::invalid_argument("special rank t out of range [5,m-1]");
  // The crossing edges must complement across the full ambient dimension;
  // with the special pair complementing across n-1 bits, mirroring the
  // partner flips the leading bit and extends the complement to n bits.
  const int n = l.n;
  auto full_partner = [n](Vertex w) { return partner_of(w, n, EdgeKind::complement, n); };
  if (full_partner(U(l, t)) != U(lm, t + 1) || full_partner(U(l, t + 1)) != U(lm, t) ||
      full_partner(V(l, t)) != V(lm, t + 1) || full_partner(V(l, t + 1)) != V(lm, t))
    throw std::invalid_argument("special pair does not complement across the full dimension");

  LadderCert out;
  out.n = n;
  out.u.reserve(static_cast<std::size_t>(2 * m));
  out.v.reserve(static_cast<std::size_t>(2 * m));
  // Walk the base side to rank t, jump to the mirror side at t+1, finish its
  // cycle through rank m, 1, .., t, and jump back to base rank t+1.
  for (int i = 1; i <= 2 * m; ++i) {
    int j;
    const LadderCert* side;
    if (i <= t) {
      side = &l, j = i;
    } else if (i <= m) {
      side = &lm, j = i;
    } else if (i <= m + t) {
      side = &lm, j = i - m;
    } else {
      side = &l, j = i - m;
    }
    out.u.push_back(U(*side, j));
    out.v.push_back(V(*side, j));
  }
  out.special_t = t;
  out.special_dim = n;

  check_lift_edges(out, l, lm,
                   {make_edge(U(l, t), U(l, t + 1)), make_edge(V(l, t), V(l, t + 1))},
                   {make_edge(U(lm, t), U(lm, t + 1)), make_edge(V(lm, t), V(lm, t + 1))},
                   {make_edge(U(l, t), U(lm, t + 1)), make_edge(U(l, t + 1), U(lm, t)),
                    make_edge(V(l, t), V(lm, t + 1)), make_edge(V(l, t + 1), V(lm, t))});
  return out;
}

CycleSeq extract_cycle(const LadderCert& c, int len) {
  check_shape(c);
  const int m = c.m();
  if (len < 4 || len > 2 * m)
    throw std::invalid_argument("cycle length out of range [4," + std::to_string(2 * m) + "]");

  CycleSeq seq;
  seq.n = c.n;
  auto push_u = [&](int from, int to) {  // inclusive, either direction
    const int step = from <= to ? 1 : -1;
    for (int i = from; i != to + step; i += step) seq.verts.push_back(U(c, i));
  };
  auto push_v = [&](int from, int to) {
    const int step = from <= to ? 1 : -1;
    for (int i = from; i != to + step; i += step) seq.verts.push_back(V(c, i));
  };

  if (len % 2 == 0) {
    if (len <= 2 * m - 8) {
      // Inside the sub-ladder above rank 4: up one side, back down the other.
      const int k = len / 2;
      push_u(5, 4 + k);
      push_v(4 + k, 5);
    } else if (len == 2 * m - 6) {
      push_u(3, m - 1);
      push_v(m - 1, 3);
    } else if (len == 2 * m - 4) {
      push_u(3, m);
      push_v(m, 3);
    } else if (len == 2 * m - 2) {
      push_u(2, m);
      push_v(m, 2);
    } else {  // len == 2m: all vertices, detouring through ranks 1 and 2
      push_u(3, m);
      push_u(1, 2);
      push_v(2, 1);
      push_v(m, 3);
    }
  } else {
    if (len == 5) {
      // Shortest odd cycle, through the cross edge u_1 v_4.
      push_u(2, 1);
      push_v(4, 2);
    } else if (len == 2 * m - 1) {
      // All vertices but one, through both cross edges and both wrap edges.
      push_u(3, m);
      push_u(1, 1);
      push_v(4, m);
      push_v(1, 3);
    } else {
      // len = 2i-3 for 5 <= i <= m, through the cross edge u_4 v_1.
      const int i = (len + 3) / 2;
      push_u(4, 4);
      push_v(1, i);
      push_u(i, 5);
    }
  }

  if (static_cast<int>(seq.verts.size()) != len)
    throw std::logic_error("extracted cycle has wrong length");
  return seq;
}

Graph core_graph(const LadderCert& c) {
  std::vector<Edge> es = cert_edges(c);
  const std::vector<Edge> rungs = {make_edge(U(c, 1), V(c, 1)), make_edge(U(c, 4), V(c, 4))};
  std::erase_if(es, [&](const Edge& e) {
    return e == rungs[0] || e == rungs[1];
  });
  return graph_from_edges(c.n, es);
}

bool is_cycle_in(const CycleSeq& c, const Graph& host) {
  const std::size_t len = c.verts.size();
  if (len < 3 || c.n != host.dim()) return false;
  std::set<Vertex> seen(c.verts.begin(), c.verts.end());
  if (seen.size() != len) return false;
  for (std::size_t i = 0; i < len; ++i)
    if (!host.has_edge(c.verts[i], c.verts[(i + 1) % len])) return false;
  return true;
}

Graph graph_of_cycle(const CycleSeq& c) {
  Graph g(c.n);
  const std::size_t len = c.verts.size();
  if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  for (std::size_t i = 0; i < len; ++i)
    g.add_edge(c.verts[i], c.verts[(i + 1) % len]);
  return g;
}

std::string to_cert_text(const LadderCert& c) {
  check_shape(c);
  std::ostringstream os;
  os << "m=" << c.m() << '\n';
  os << "u=";
  for (int i = 1; i <= c.m(); ++i) os << (i > 1 ? " " : "") << to_label(U(c, i), c.n);
  os << "\nv=";
  for (int i = 1; i <= c.m(); ++i) os << (i > 1 ? " " : "") << to_label(V(c, i), c.n);
  os << '\n';
  if (c.special_t.has_value())
    os << "special_t=" << *c.special_t << "\nspecial_dim=" << c.special_dim << '\n';
  return os.str();
}

std::string to_cycle_text(const CycleSeq& c) {
  std::ostringstream os;
  os << "cycle=";
  for (std::size_t i = 0; i < c.verts.size(); ++i)
    os << (i > 0 ? " " : "") << to_label(c.verts[i], c.n);
  os << '\n';
  return os.str();
}

namespace {

std::vector<Vertex> parse_label_row(const std::string& row, int& n) {
  std::istringstream is(row);
  std::vector<Vertex> out;
  std::string lab;
  while (is >> lab) {
    if (n == 0) n = static_cast<int>(lab.size());
    if (static_cast<int>(lab.size()) != n)
      throw std::runtime_error("inconsistent label widths in certificate");
    out.push_back(parse_label(lab));
  }
  return out;
}

}  // namespace

LadderCert parse_cert_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  LadderCert c;
  int m = 0, n = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("bad certificate line: " + line);
    const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "m")
      m = std::stoi(val);
    else if (key == "u")
      c.u = parse_label_row(val, n);
    else if (key == "v")
      c.v = parse_label_row(val, n);
    else if (key == "special_t")
      c.special_t = std::stoi(val);
    else if (key == "special_dim")
      c.special_dim = std::stoi(val);
    else
      throw std::runtime_error("unknown certificate field: " + key);
  }
  c.n = n;
  if (m == 0 || c.m() != m || static_cast<int>(c.v.size()) != m)
    throw std::runtime_error("certificate rank count mismatch");
  check_shape(c);
  return c;
}

CycleSeq parse_cycle_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line) && line.empty()) {
  }
  if (line.rfind("cycle=", 0) != 0) throw std::runtime_error("cycle file must start with cycle=");
  CycleSeq c;
  int n = 0;
  c.verts = parse_label_row(line.substr(6), n);
  c.n = n;
  if (c.verts.size() < 3) throw std::runtime_error("cycle needs at least 3 vertices");
  return c;
}

}  // namespace augcube
