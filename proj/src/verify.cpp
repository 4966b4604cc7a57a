#include "augcube/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace augcube {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr int kInf = 1 << 29;

std::string edge_str(Edge e, int n) { return to_label(e.a, n) + "-" + to_label(e.b, n); }

// Split-vertex flow network: vertex v becomes in(v) -> out(v) with capacity
// one; each undirected edge {a,b} becomes out(a) -> in(b) and out(b) -> in(a)
// with unbounded capacity.  Max-flow out(s) -> in(t) counts internally
// vertex-disjoint s-t paths, which by Menger is the smallest s-t vertex cut
// for non-adjacent s, t.
class FlowNet {
 public:
  explicit FlowNet(const SimpleGraph& g) : nodes_(2 * g.nv), arcs_(static_cast<std::size_t>(nodes_)) {
    for (int v = 0; v < g.nv; ++v) add(in(v), out(v), 1);
    for (int a = 0; a < g.nv; ++a)
      for (int b : g.adj[static_cast<std::size_t>(a)])
        if (a < b) {
          add(out(a), in(b), kInf);
          add(out(b), in(a), kInf);
        }
    pristine_ = arcs_;
  }

  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  // Max-flow from out(s) to in(t), aborting once the flow reaches `cap`.
  int max_flow(int s, int t, int cap) {
    arcs_ = pristine_;
    const int src = out(s), dst = in(t);
    int flow = 0;
    while (flow < cap && bfs(src, dst)) {
      iter_.assign(static_cast<std::size_t>(nodes_), 0);
      int f;
      while (flow < cap && (f = dfs(src, dst, cap - flow)) > 0) flow += f;
    }
    return flow;
  }

 private:
  struct Arc {
    int to, cap, rev;
  };

  void add(int a, int b, int cap) {
    arcs_[static_cast<std::size_t>(a)].push_back({b, cap, static_cast<int>(arcs_[static_cast<std::size_t>(b)].size())});
    arcs_[static_cast<std::size_t>(b)].push_back({a, 0, static_cast<int>(arcs_[static_cast<std::size_t>(a)].size()) - 1});
  }

  bool bfs(int src, int dst) {
    level_.assign(static_cast<std::size_t>(nodes_), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const Arc& a : arcs_[static_cast<std::size_t>(v)])
        if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(a.to);
        }
    }
    return level_[static_cast<std::size_t>(dst)] >= 0;
  }

  int dfs(int v, int dst, int limit) {
    if (v == dst) return limit;
    for (int& i = iter_[static_cast<std::size_t>(v)];
         i < static_cast<int>(arcs_[static_cast<std::size_t>(v)].size()); ++i) {
      Arc& a = arcs_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
      if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(v)] + 1)
        continue;
      const int got = dfs(a.to, dst, std::min(limit, a.cap));
      if (got > 0) {
        a.cap -= got;
        arcs_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += got;
        return got;
      }
    }
    return 0;
  }

  int nodes_;
  std::vector<std::vector<Arc>> arcs_, pristine_;
  std::vector<int> level_, iter_;
};

int degree(const SimpleGraph& g, int v) {
  return static_cast<int>(g.adj[static_cast<std::size_t>(v)].size());
}

}  // namespace

void SimpleGraph::add_edge(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= nv || b >= nv)
    throw std::invalid_argument("bad edge endpoints");
  if (has_edge(a, b)) throw std::invalid_argument("duplicate edge");
  adj[static_cast<std::size_t>(a)].push_back(b);
  adj[static_cast<std::size_t>(b)].push_back(a);
}

bool SimpleGraph::has_edge(int a, int b) const {
  const auto& nb = adj[static_cast<std::size_t>(a)];
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return twice / 2;
}

SimpleGraph to_simple(const Graph& g) {
  SimpleGraph s(static_cast<int>(g.vertex_count()));
  for (const Edge& e : g.edges()) s.add_edge(static_cast<int>(e.a), static_cast<int>(e.b));
  return s;
}

bool is_connected(const SimpleGraph& g) {
  if (g.nv == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.nv), 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == g.nv;
}

int min_vertex_cut_between(const SimpleGraph& g, int s, int t, int cap) {
  if (s == t || g.has_edge(s, t))
    throw std::invalid_argument("vertex cut requires distinct non-adjacent endpoints");
  FlowNet net(g);
  return net.max_flow(s, t, cap);
}

int vertex_connectivity(const SimpleGraph& g) {
  const int nv = g.nv;
  if (nv > 256) throw std::invalid_argument("exact connectivity capped at 256 vertices");
  if (nv <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (g.edge_count() == static_cast<std::size_t>(nv) * (nv - 1) / 2) return nv - 1;

  int w = 0;
  for (int v = 1; v < nv; ++v)
    if (degree(g, v) < degree(g, w)) w = v;

  int best = degree(g, w);
  FlowNet net(g);
  for (int v = 0; v < nv && best > 0; ++v)
    if (v != w && !g.has_edge(w, v)) best = std::min(best, net.max_flow(w, v, best));
  std::vector<int> nbs = g.adj[static_cast<std::size_t>(w)];
  std::sort(nbs.begin(), nbs.end());
  for (std::size_t i = 0; i < nbs.size() && best > 0; ++i)
    for (std::size_t j = i + 1; j < nbs.size() && best > 0; ++j)
      if (!g.has_edge(nbs[i], nbs[j]))
        best = std::min(best, net.max_flow(nbs[i], nbs[j], best));
  return best;
}

int vertex_connectivity(const Graph& g) { return vertex_connectivity(to_simple(g)); }

Report verify_partition(const Graph& whole, const Graph& h, const Graph& k,
                        std::string_view target) {
  Report r;
  const auto t0 = Clock::now();
  std::string observed = "ok";
  bool pass = true;
  if (whole.dim() != h.dim() || whole.dim() != k.dim()) {
    pass = false;
    observed = "dimension-mismatch";
  } else {
    for (const Edge& e : h.edges()) {
      if (k.has_edge(e.a, e.b)) {
        pass = false;
        observed = "shared:" + edge_str(e, whole.dim());
        break;
      }
      if (!whole.has_edge(e.a, e.b)) {
        pass = false;
        observed = "foreign-H:" + edge_str(e, whole.dim());
        break;
      }
    }
    if (pass)
      for (const Edge& e : k.edges())
        if (!whole.has_edge(e.a, e.b)) {
          pass = false;
          observed = "foreign-K:" + edge_str(e, whole.dim());
          break;
        }
    if (pass && h.edge_count() + k.edge_count() != whole.edge_count()) {
      pass = false;
      observed = "covered=" + std::to_string(h.edge_count() + k.edge_count()) + "/" +
                 std::to_string(whole.edge_count());
    }
  }
  r.add({"partition[" + std::string(target) + "]", std::string(target), "exact-partition",
         observed, pass, ms_since(t0)});
  return r;
}

Report verify_regular(const Graph& g, int k, std::string_view target) {
  Report r;
  const auto t0 = Clock::now();
  bool pass = true;
  std::string observed = std::to_string(k);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) {
      pass = false;
      observed = "deg(" + to_label(v, g.dim()) + ")=" + std::to_string(g.degree(v));
      break;
    }
  r.add({"regular[" + std::string(target) + "]", std::string(target), std::to_string(k),
         observed, pass, ms_since(t0)});
  return r;
}

Report verify_connectivity_at_least(const Graph& g, int k, ConnMode mode, std::uint32_t seed,
                                    int pairs, std::string_view target) {
  Report r;
  const auto t0 = Clock::now();
  if (mode == ConnMode::exact) {
    const int kappa = vertex_connectivity(g);
    r.add({"connectivity-exact[" + std::string(target) + "]", std::string(target),
           ">=" + std::to_string(k), "kappa=" + std::to_string(kappa), kappa >= k,
           ms_since(t0)});
    return r;
  }

  if (pairs < 1) throw std::invalid_argument("sampled connectivity requires pairs >= 1");
  const SimpleGraph s = to_simple(g);
  const int nv = s.nv;
  std::mt19937 rng(seed);
  FlowNet net(s);
  bool pass = true;
  std::string observed = "min-cut>=" + std::to_string(k) + "@" + std::to_string(pairs) + "pairs";
  int done = 0;
  int attempts = 0;
  const int max_attempts = pairs * 200;
  while (done < pairs && attempts < max_attempts) {
    ++attempts;
    const int a = static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(nv)));
    const int b = static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(nv)));
    if (a == b || s.has_edge(a, b)) continue;
    const int cut = net.max_flow(a, b, k);
    ++done;
    if (cut < k) {
      pass = false;
      observed = "cut=" + std::to_string(cut) + "@" + to_label(static_cast<Vertex>(a), g.dim()) +
                 "-" + to_label(static_cast<Vertex>(b), g.dim());
      break;
    }
  }
  if (pass && done < pairs) {
    // Could not find enough non-adjacent pairs: the graph is nearly complete,
    // fall back to the degree bound.
    int min_deg = nv - 1;
    for (int v = 0; v < nv; ++v) min_deg = std::min(min_deg, degree(s, v));
    pass = min_deg >= k;
    observed = "sparse-pairs:min-degree=" + std::to_string(min_deg);
  }
  r.add({"connectivity-sampled[" + std::string(target) + "]", std::string(target),
         ">=" + std::to_string(k), observed, pass, ms_since(t0)});
  return r;
}

Report verify_pancyclic_via_cert(const Graph& g, const LadderCert& c, std::string_view target,
                                 bool require_special) {
  // Core-only: the host may omit the two corner rungs (a 3-regular side is
  // exactly a certificate core), and no extracted cycle ever needs them.
  Report r = validate_cert(c, g, require_special, /*core_only=*/true);
  for (Check& ch : r.checks) ch.name = std::string(target) + ":" + ch.name;

  const auto t0 = Clock::now();
  const int top = 2 * c.m();
  bool pass = r.overall();
  std::string observed = pass ? "lengths-4.." + std::to_string(top) : "cert-invalid";
  if (pass) {
    for (int len = 4; len <= top; ++len) {
      const CycleSeq seq = extract_cycle(c, len);
      if (static_cast<int>(seq.verts.size()) != len || !is_cycle_in(seq, g)) {
        pass = false;
        observed = "broken-at-length=" + std::to_string(len);
        break;
      }
    }
  }
  r.add({"pancyclic[" + std::string(target) + "]", std::string(target),
         "all-lengths-4.." + std::to_string(top), observed, pass, ms_since(t0)});
  return r;
}

std::set<int> exhaustive_cycle_spectrum(const Graph& g) {
  const int nv = static_cast<int>(g.vertex_count());
  if (nv > 16) throw std::invalid_argument("cycle spectrum oracle capped at 16 vertices");

  std::array<std::uint32_t, 16> adj{};
  for (const Edge& e : g.edges()) {
    adj[e.a] |= 1u << e.b;
    adj[e.b] |= 1u << e.a;
  }

  std::uint32_t found = 0;
  std::uint32_t all = 0;
  for (int len = 3; len <= nv; ++len) all |= 1u << len;

  // Each cycle is enumerated from its minimal vertex s over vertices > s.
  struct Frame {
    int vertex;
    std::uint32_t candidates;
  };
  std::vector<Frame> stack;
  for (int s = 0; s < nv && found != all; ++s) {
    const std::uint32_t above = ~((2u << s) - 1);
    std::uint32_t visited = 1u << s;
    stack.clear();
    stack.push_back({s, adj[s] & above});
    while (!stack.empty() && found != all) {
      Frame& f = stack.back();
      if (f.candidates == 0) {
        visited &= ~(1u << f.vertex);
        stack.pop_back();
        continue;
      }
      const int next = std::countr_zero(f.candidates);
      f.candidates &= f.candidates - 1;
      const int depth = static_cast<int>(stack.size()) + 1;  // vertices incl. `next`
      if (depth >= 3 && (adj[next] >> s & 1u)) found |= 1u << depth;
      visited |= 1u << next;
      stack.push_back({next, adj[next] & above & ~visited});
    }
  }

  std::set<int> out;
  for (int len = 3; len <= nv; ++len)
    if (found >> len & 1u) out.insert(len);
  return out;
}

Report verify_common_neighbor_bound(int n) {
  if (n < 3 || n > 8)
    throw std::invalid_argument("common-neighbor bound requires 3 <= n <= 8");
  Report r;
  const auto t0 = Clock::now();
  const Graph g = build_aq(n);
  const int nv = static_cast<int>(g.vertex_count());
  const int words = (nv + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(nv * words), 0);
  for (const Edge& e : g.edges()) {
    rows[e.a * static_cast<std::size_t>(words) + e.b / 64] |= std::uint64_t{1} << (e.b % 64);
    rows[e.b * static_cast<std::size_t>(words) + e.a / 64] |= std::uint64_t{1} << (e.a % 64);
  }
  int max_common = 0;
  Vertex ma = 0, mb = 0;
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      int common = 0;
      for (int w = 0; w < words; ++w)
        common += std::popcount(rows[a * static_cast<std::size_t>(words) + w] &
                                rows[b * static_cast<std::size_t>(words) + w]);
      if (common > max_common) {
        max_common = common;
        ma = static_cast<Vertex>(a);
        mb = static_cast<Vertex>(b);
      }
    }
  const bool pass = max_common <= 4;
  r.add({"common-neighbors[AQ" + std::to_string(n) + "]", "AQ_" + std::to_string(n), "<=4",
         "max=" + std::to_string(max_common) + "@" + to_label(ma, n) + "-" + to_label(mb, n),
         pass, ms_since(t0)});
  return r;
}

std::uint32_t rng_below(std::mt19937& rng, std::uint32_t bound) {
  if (bound == 0) throw std::invalid_argument("rng_below needs a positive bound");
  return static_cast<std::uint32_t>(rng() % bound);
}

SimpleGraph random_graph(std::mt19937& rng, int nv, int edge_percent) {
  SimpleGraph g(nv);
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (rng_below(rng, 100) < static_cast<std::uint32_t>(edge_percent)) g.add_edge(a, b);
  return g;
}

SimpleGraph random_k_connected_graph(std::mt19937& rng, int nv, int k) {
  if (nv < k + 2) throw std::invalid_argument("too few vertices for the requested connectivity");
  int percent = std::clamp(100 * (k + 2) / nv + 10, 20, 95);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const SimpleGraph g = random_graph(rng, nv, percent);
    if (vertex_connectivity(g) >= k) return g;
    if (attempt % 25 == 24) percent = std::min(95, percent + 10);
  }
  throw std::logic_error("failed to sample a k-connected graph");
}

SimpleGraph matching_join(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.nv != b.nv) throw std::invalid_argument("matching join needs equal orders");
  SimpleGraph out(2 * a.nv);
  for (int v = 0; v < a.nv; ++v)
    for (int w : a.adj[static_cast<std::size_t>(v)])
      if (v < w) out.add_edge(v, w);
  for (int v = 0; v < b.nv; ++v)
    for (int w : b.adj[static_cast<std::size_t>(v)])
      if (v < w) out.add_edge(v + a.nv, w + a.nv);
  for (int v = 0; v < a.nv; ++v) out.add_edge(v, v + a.nv);
  return out;
}

Report verify_matching_join_property(int trials, std::uint32_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  Report r;
  const auto t0 = Clock::now();
  std::mt19937 rng(seed);
  bool pass = true;
  std::string observed = "ok@" + std::to_string(trials) + "trials";
  for (int trial = 0; trial < trials && pass; ++trial) {
    const int k = 1 + static_cast<int>(rng_below(rng, 4));
    const int nv = k + 2 + static_cast<int>(rng_below(rng, 9));
    const SimpleGraph g1 = random_k_connected_graph(rng, nv, k);
    const SimpleGraph g2 = random_k_connected_graph(rng, nv, k);
    const int joined = vertex_connectivity(matching_join(g1, g2));
    if (joined < k + 1) {
      pass = false;
      observed = "trial=" + std::to_string(trial) + ":k=" + std::to_string(k) +
                 ",kappa=" + std::to_string(joined);
    }
  }
  r.add({"matching-join[trials=" + std::to_string(trials) + ",seed=" + std::to_string(seed) + "]",
         "random-k-connected-pairs", "kappa>=k+1", observed, pass, ms_since(t0)});
  return r;
}

namespace {

int bfs_eccentricity(const Graph& g, Vertex from) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[from] = 0;
  q.push(from);
  int ecc = 0;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        ecc = std::max(ecc, dist[w]);
        q.push(w);
      }
  }
  for (int d : dist)
    if (d < 0) throw std::logic_error("diameter of a disconnected graph");
  return ecc;
}

}  // namespace

Report verify_aq_sanity(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("sanity harness requires 1 <= n <= 8");
  Report r;
  const Graph g = build_aq(n);
  const std::string tag = "AQ" + std::to_string(n);

  const auto t0 = Clock::now();
  const std::size_t want_edges =
      static_cast<std::size_t>(2 * n - 1) * (std::size_t{1} << (n - 1));
  r.add({"aq-size[" + tag + "]", tag,
         std::to_string(std::size_t{1} << n) + "v/" + std::to_string(want_edges) + "e",
         std::to_string(g.vertex_count()) + "v/" + std::to_string(g.edge_count()) + "e",
         g.edge_count() == want_edges, ms_since(t0)});

  r.merge(verify_regular(g, 2 * n - 1, tag));

  const auto t1 = Clock::now();
  int diameter = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    diameter = std::max(diameter, bfs_eccentricity(g, v));
  const int want_diam = (n + 1) / 2;
  r.add({"aq-diameter[" + tag + "]", tag, std::to_string(want_diam), std::to_string(diameter),
         diameter == want_diam, ms_since(t1)});

  if (n <= 7) {
    const auto t2 = Clock::now();
    const int kappa = vertex_connectivity(g);
    // Connectivity equals the degree 2n-1 except at n = 3: there any two
    // non-adjacent vertices (say 000 and 101) share exactly four neighbours,
    // and removing those four separates the pair, so the 5-regular cube on
    // 8 vertices is only 4-connected.
    const int want = n == 3 ? 4 : 2 * n - 1;
    r.add({"aq-connectivity[" + tag + "]", tag, std::to_string(want), std::to_string(kappa),
           kappa == want, ms_since(t2)});
  }
  return r;
}

namespace {

// One side of a bundle: regularity, connectivity, and its cycle witness.
Report verify_side(const Graph& side, int want_regular, const PancyclicWitness& witness,
                   bool special_required, std::string_view label, ConnMode mode,
                   std::uint32_t seed, int pairs) {
  Report r;
  r.merge(verify_regular(side, want_regular, label));

  if (mode == ConnMode::exact) {
    const auto t0 = Clock::now();
    const int kappa = vertex_connectivity(side);
    r.add({"connectivity-exact[" + std::string(label) + "]", std::string(label),
           "=" + std::to_string(want_regular), "kappa=" + std::to_string(kappa),
           kappa == want_regular, ms_since(t0)});
  } else {
    r.merge(verify_connectivity_at_least(side, want_regular, ConnMode::sampled, seed, pairs,
                                         label));
  }

  if (std::holds_alternative<CycleSeq>(witness)) {
    const auto t0 = Clock::now();
    const CycleSeq& cyc = std::get<CycleSeq>(witness);
    const bool ok = cyc.verts.size() == side.vertex_count() && is_cycle_in(cyc, side) &&
                    side.edge_count() == cyc.verts.size();
    r.add({"hamiltonian[" + std::string(label) + "]", std::string(label),
           "spanning-cycle-" + std::to_string(side.vertex_count()),
           ok ? "ok" : "not-a-spanning-cycle", ok, ms_since(t0)});
    r.add({"pancyclic[" + std::string(label) + "]", std::string(label), "n/a",
           "skipped:2-regular-side-is-the-cycle-witness", true, 0.0});
  } else {
    r.merge(verify_pancyclic_via_cert(side, std::get<LadderCert>(witness), label,
                                      special_required));
  }
  return r;
}

}  // namespace

Report verify_bundle(const Bundle& b, ConnMode mode, std::uint32_t seed, int pairs,
                     int max_exact_n) {
  if (mode == ConnMode::exact && b.n > max_exact_n)
    throw std::invalid_argument("exact connectivity limited to n <= " +
                                std::to_string(max_exact_n) +
                                " (raise AUGCUBE_MAX_EXACT_N or use sampled mode)");
  Report r;
  const Graph aq = build_aq(b.n);
  r.merge(verify_partition(aq, b.h, b.k, "AQ" + std::to_string(b.n) + "=H+K"));

  // The complement-chain certificate sits on the side with the larger degree;
  // it must carry the special 4-cycle whenever the smaller side is >= 3.
  const int small = std::min(b.n1, b.n2);
  const bool special_on_large = small >= 3;
  r.merge(verify_side(b.h, b.n1, b.cert_h, special_on_large && b.n1 > b.n2, "H", mode, seed,
                      pairs));
  r.merge(verify_side(b.k, b.n2, b.cert_k, special_on_large && b.n2 > b.n1, "K", mode,
                      seed ^ 0x9e3779b9u, pairs));
  return r;
}

}  // namespace augcube
