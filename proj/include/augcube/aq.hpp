#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Augmented cube AQ_n: vertex set {0,1}^n; x and y are adjacent iff they agree
// on some (possibly empty) prefix and either differ in exactly the next bit
// (a "hypercube" edge) or are complementary on the whole remaining suffix
// (a "complement" edge).  Equivalently, x ^ y is a single bit or a block of
// d >= 2 trailing ones.  AQ_n is (2n-1)-regular on 2^n vertices.

namespace augcube {

// An n-bit vertex label; the printed label's first character is bit n-1, so
// the top-level halves of the recursive construction are split by the MSB.
using Vertex = std::uint32_t;

inline constexpr int kMaxDim = 16;

std::string to_label(Vertex v, int n);
// Parses a 0/1 string; the dimension is the string length.
Vertex parse_label(std::string_view s);

// Undirected edge held canonically with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex x, Vertex y);

enum class EdgeKind : unsigned char { hypercube, complement };

// Classification of an AQ_n edge: hypercube(d) flips bit d, counted 1-based
// from the right; complement(d) flips the d rightmost bits.  complement(1)
// would coincide with hypercube(1), so complement requires d >= 2.
struct EdgeClass {
  EdgeKind kind = EdgeKind::hypercube;
  int dim = 0;
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

// Simple undirected graph over the fixed vertex set {0..2^n-1}.
// Neighbor lists are kept sorted; edges() enumerates in canonical order,
// which makes every serialization of the same graph byte-identical.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int dim() const { return n_; }
  std::size_t vertex_count() const { return std::size_t{1} << n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex x, Vertex y) const;
  void add_edge(Vertex x, Vertex y);     // no-op error if already present
  void remove_edge(Vertex x, Vertex y);  // error if absent
  int degree(Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_{std::vector<Vertex>{}};
};

// The augmented cube itself, built edge-class by edge-class (1 <= n <= 16).
Graph build_aq(int n);

// Adjacency test returning the edge class, or nullopt for non-adjacent pairs.
// Requires x != y and both labels < 2^n.
std::optional<EdgeClass> classify_edge(Vertex x, Vertex y, int n);

// The unique neighbor of x across dimension d of the given kind.
Vertex partner_of(Vertex x, int d, EdgeKind kind, int n);

// Perfect matching joining the two halves of the subcube on labels that start
// with `prefix`: for each (d-1)-bit suffix w, hypercube matches prefix.0.w
// with prefix.1.w, complement matches prefix.0.w with prefix.1.~w.
// d >= 2; the ambient dimension is prefix.size() + d.
std::vector<Edge> half_matching(std::string_view prefix, int d, EdgeKind kind);

Graph graph_from_edges(int n, const std::vector<Edge>& edges);
// Removes `drop` from g; every dropped edge must be present.
Graph graph_difference(const Graph& g, const std::vector<Edge>& drop);
// Set union of two graphs on the same vertex set.
Graph graph_union(const Graph& g1, const Graph& g2);

// Edge-list text format: header "n=<dim>", then one line per edge as two
// zero-padded binary labels separated by a single space, sorted by (min,max).
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Graphviz export (undirected; vertex names are the binary labels).
std::string to_dot(const Graph& g);

}  // namespace augcube
