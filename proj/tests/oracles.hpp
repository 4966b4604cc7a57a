#pragma once

// Test-side oracles, written independently of the library internals so the
// two can disagree: the cube is built by literal recursion instead of bit
// tricks, and connectivity by exhaustive vertex-cut enumeration instead of
// max-flow.

#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "augcube/aq.hpp"
#include "augcube/verify.hpp"

namespace oracles {

using augcube::Vertex;

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

inline std::pair<Vertex, Vertex> norm(Vertex a, Vertex b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Recursive reference construction: two labeled copies of the previous cube
// plus the straight matching {x, x+2^(n-1)} and the complementing matching
// {x, ~x within n bits}.
inline EdgeSet aq_edges_recursive(int n) {
  if (n == 1) return {norm(0, 1)};
  const EdgeSet prev = aq_edges_recursive(n - 1);
  const Vertex hi = Vertex{1} << (n - 1);
  const Vertex full = (Vertex{1} << n) - 1;
  EdgeSet out;
  for (const auto& [a, b] : prev) {
    out.insert(norm(a, b));
    out.insert(norm(a | hi, b | hi));
  }
  for (Vertex x = 0; x < hi; ++x) {
    out.insert(norm(x, x | hi));
    out.insert(norm(x, x ^ full));
  }
  return out;
}

// Same recursion, but answering one adjacency query with its edge class.
inline std::optional<augcube::EdgeClass> classify_recursive(Vertex x, Vertex y, int n) {
  if (x == y) return std::nullopt;
  const Vertex hi = Vertex{1} << (n - 1);
  if ((x & hi) == (y & hi)) return classify_recursive(x & ~hi, y & ~hi, n - 1);
  if ((x ^ y) == hi) return augcube::EdgeClass{augcube::EdgeKind::hypercube, n};
  if ((x ^ y) == (hi << 1) - 1) return augcube::EdgeClass{augcube::EdgeKind::complement, n};
  return std::nullopt;
}

inline bool connected_after_removal(const augcube::SimpleGraph& g,
                                    const std::vector<char>& removed) {
  int start = -1, remaining = 0;
  for (int v = 0; v < g.nv; ++v)
    if (!removed[v]) {
      ++remaining;
      if (start < 0) start = v;
    }
  if (remaining <= 1) return true;
  std::vector<char> seen(g.nv, 0);
  std::queue<int> q;
  seen[start] = 1;
  q.push(start);
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.adj[v])
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == remaining;
}

// Brute-force vertex connectivity: smallest vertex subset whose removal
// disconnects the graph, by enumerating subsets in increasing size.  Only
// sensible for a dozen vertices or so.
inline int vertex_connectivity_bruteforce(const augcube::SimpleGraph& g) {
  const int nv = g.nv;
  if (nv <= 1) return 0;
  std::vector<char> removed(nv, 0);
  if (!connected_after_removal(g, removed)) return 0;
  for (int size = 1; size <= nv - 2; ++size) {
    // Subsets of the given size via combination walking.
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int v : pick) removed[v] = 1;
      if (!connected_after_removal(g, removed)) return size;
      int i = size - 1;
      while (i >= 0 && pick[i] == nv - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return nv - 1;
}

}  // namespace oracles
