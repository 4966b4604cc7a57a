#include "augcube/aq.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace augcube {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("dimension out of range [1," +
                                std::to_string(kMaxDim) + "]: " + std::to_string(n));
}

constexpr Vertex low_mask(int d) { return (Vertex{1} << d) - 1; }

}  // namespace

std::string to_label(Vertex v, int n) {
  check_dim(n);
  if (v >> n) throw std::invalid_argument("label value does not fit in " + std::to_string(n) + " bits");
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (v >> (n - 1 - i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Vertex parse_label(std::string_view s) {
  check_dim(static_cast<int>(s.size()));
  Vertex v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("label must be a 0/1 string");
    v = v << 1 | static_cast<Vertex>(c - '0');
  }
  return v;
}

Edge make_edge(Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("self-loop edge");
  return x < y ? Edge{x, y} : Edge{y, x};
}

Graph::Graph(int n) : n_(n) {
  check_dim(n);
  adj_.assign(vertex_count(), {});
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) throw std::invalid_argument("vertex out of range");
}

bool Graph::has_edge(Vertex x, Vertex y) const {
  check_vertex(x);
  check_vertex(y);
  const auto& nb = adj_[x];
  return std::binary_search(nb.begin(), nb.end(), y);
}

void Graph::add_edge(Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("self-loop edge");
  if (has_edge(x, y)) throw std::invalid_argument("duplicate edge");
  auto insert = [this](Vertex a, Vertex b) {
    auto& nb = adj_[a];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), b), b);
  };
  insert(x, y);
  insert(y, x);
  ++edge_count_;
}

void Graph::remove_edge(Vertex x, Vertex y) {
  if (!has_edge(x, y))
    throw std::invalid_argument("removing edge absent from graph: " + to_label(x, n_) +
                                "-" + to_label(y, n_));
  auto erase = [this](Vertex a, Vertex b) {
    auto& nb = adj_[a];
    nb.erase(std::lower_bound(nb.begin(), nb.end(), b));
  };
  erase(x, y);
  erase(y, x);
  --edge_count_;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (Vertex w : adj_[v])
      if (v < w) out.push_back(Edge{v, w});
  return out;
}

Graph build_aq(int n) {
  check_dim(n);
  Graph g(n);
  const Vertex count = Vertex{1} << n;
  // Hypercube edges of every dimension, then complement edges of dimension
  // d >= 2: each pair is added from its endpoint with bit d-1 clear.
  for (int d = 1; d <= n; ++d) {
    const Vertex bit = Vertex{1} << (d - 1);
    for (Vertex x = 0; x < count; ++x)
      if (!(x & bit)) g.add_edge(x, x ^ bit);
  }
  for (int d = 2; d <= n; ++d) {
    const Vertex bit = Vertex{1} << (d - 1);
    for (Vertex x = 0; x < count; ++x)
      if (!(x & bit)) g.add_edge(x, x ^ low_mask(d));
  }
  return g;
}

std::optional<EdgeClass> classify_edge(Vertex x, Vertex y, int n) {
  check_dim(n);
  if (x >> n || y >> n) throw std::invalid_argument("label value does not fit in dimension");
  if (x == y) throw std::invalid_argument("classify_edge requires distinct vertices");
  const Vertex diff = x ^ y;
  if (std::has_single_bit(diff))
    return EdgeClass{EdgeKind::hypercube, static_cast<int>(std::bit_width(diff))};
  if ((diff & (diff + 1)) == 0)  // block of trailing ones, here of size >= 2
    return EdgeClass{EdgeKind::complement, std::popcount(diff)};
  return std::nullopt;
}

Vertex partner_of(Vertex x, int d, EdgeKind kind, int n) {
  check_dim(n);
  if (x >> n) throw std::invalid_argument("label value does not fit in dimension");
  if (d < 1 || d > n) throw std::invalid_argument("dimension index out of range");
  if (kind == EdgeKind::hypercube) return x ^ (Vertex{1} << (d - 1));
  if (d < 2) throw std::invalid_argument("complement partner requires d >= 2");
  return x ^ low_mask(d);
}

std::vector<Edge> half_matching(std::string_view prefix, int d, EdgeKind kind) {
  const int n = static_cast<int>(prefix.size()) + d;
  check_dim(n);
  if (d < 2) throw std::invalid_argument("half_matching requires d >= 2");
  Vertex p = 0;
  for (char c : prefix) {
    if (c != '0' && c != '1') throw std::invalid_argument("prefix must be a 0/1 string");
    p = p << 1 | static_cast<Vertex>(c - '0');
  }
  const Vertex base = p << d;
  const Vertex half = Vertex{1} << (d - 1);
  std::vector<Edge> out;
  out.reserve(half);
  for (Vertex w = 0; w < half; ++w) {
    const Vertex lo = base | w;
    const Vertex hi =
        kind == EdgeKind::hypercube ? base | half | w : base | half | (~w & (half - 1));
    out.push_back(make_edge(lo, hi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.a, e.b);
  return g;
}

Graph graph_difference(const Graph& g, const std::vector<Edge>& drop) {
  Graph out = g;
  for (const Edge& e : drop) out.remove_edge(e.a, e.b);
  return out;
}

Graph graph_union(const Graph& g1, const Graph& g2) {
  if (g1.dim() != g2.dim()) throw std::invalid_argument("graph_union dimension mismatch");
  Graph out = g1;
  for (const Edge& e : g2.edges())
    if (!out.has_edge(e.a, e.b)) out.add_edge(e.a, e.b);
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.dim() << '\n';
  for (const Edge& e : g.edges())
    os << to_label(e.a, g.dim()) << ' ' << to_label(e.b, g.dim()) << '\n';
  return os.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string header;
  if (!std::getline(is, header) || header.rfind("n=", 0) != 0)
    throw std::runtime_error("edge list must start with an n=<dim> header");
  const int n = std::stoi(header.substr(2));
  check_dim(n);
  Graph g(n);
  std::string a, b;
  while (is >> a >> b) {
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
      throw std::runtime_error("edge label width does not match header dimension");
    g.add_edge(parse_label(a), parse_label(b));
  }
  return g;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph AQ" << g.dim() << " {\n";
  for (const Edge& e : g.edges())
    os << "  \"" << to_label(e.a, g.dim()) << "\" -- \"" << to_label(e.b, g.dim())
       << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace augcube
