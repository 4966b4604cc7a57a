#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "augcube/aq.hpp"
#include "augcube/report.hpp"

// Ladder-like certificates.  A certificate consists of two vertex-disjoint
// m-cycles Z1 = <u_1..u_m> and Z2 = <v_1..v_m> (m >= 6), the rungs u_i v_i
// for every i, and the two cross edges u_1 v_4 and u_4 v_1 -- 3m+2 edges in
// all.  Such a subgraph pins down enough structure to read off a cycle of
// every length from 4 to 2m without touching the rungs u_1 v_1 and u_4 v_4,
// which is what makes it a reusable pancyclicity witness: the "core"
// (everything except those two rungs) is 3-regular, 3-connected and contains
// cycles of all lengths 4..2m.
//
// A certificate may carry a distinguished index t (5 <= t <= m-1) marking a
// 4-cycle <u_t, u_{t+1}, v_{t+1}, v_t> in which u_{t+1} is the complement
// partner of u_t across `special_dim` bits (and likewise v_{t+1} of v_t).
// That 4-cycle is the handle used to splice two mirrored certificates
// together with complement edges.

namespace augcube {

struct LadderCert {
  int n = 0;                      // ambient cube dimension of the labels
  std::vector<Vertex> u;          // Z1 in cyclic order
  std::vector<Vertex> v;          // Z2 in cyclic order
  std::optional<int> special_t;   // 1-based index of the special 4-cycle
  int special_dim = 0;            // complement dimension of the special pair

  int m() const { return static_cast<int>(u.size()); }
  friend bool operator==(const LadderCert&, const LadderCert&) = default;
};

// A closed vertex sequence (the wrap edge is implicit).
struct CycleSeq {
  int n = 0;
  std::vector<Vertex> verts;
  friend bool operator==(const CycleSeq&, const CycleSeq&) = default;
};

// All 3m+2 implied edges, sorted.  Throws if the sequences are malformed
// (size mismatch, m < 6, repeated vertices, labels out of range).
std::vector<Edge> cert_edges(const LadderCert& c);

// Checks the certificate against a host graph: shape, distinct vertices,
// spanning (2m == |V(host)|), every implied edge present, and -- when present
// or required -- the special-pair complement relation.  With `core_only` the
// two rungs u_1 v_1 and u_4 v_4 are exempt from the edge check: extracted
// cycles never use them, so a certificate can witness pancyclicity of a host
// that carries only its core.
Report validate_cert(const LadderCert& c, const Graph& host, bool require_special,
                     bool core_only = false);

// Reinterprets the labels in a larger ambient cube (values unchanged).
LadderCert embedded(const LadderCert& c, int n);

// Image under the canonical 0-half -> 1-half isomorphism: sets the leading
// ambient bit of every label.  Requires all labels in the 0-half.
LadderCert mirror(const LadderCert& c);

// Joins a certificate in the 0-half with its mirror image through the four
// hypercube edges at ranks s and s+1 (5 <= s <= m-1), giving a certificate
// with 2m ranks in the full cube.  The result carries no special index.
LadderCert lift_h(const LadderCert& l, const LadderCert& lm, int s);

// Joins through four complement edges at the special 4-cycle instead.  The
// special pair of `l` must complement across dimension n-1 so that the
// crossing edges complement across the full dimension n; the result keeps the
// same special index t with special_dim = n.
LadderCert lift_c(const LadderCert& l, const LadderCert& lm);

// A simple cycle of the requested length (4 <= len <= 2m) using only implied
// edges and never the rungs u_1 v_1 or u_4 v_4.
CycleSeq extract_cycle(const LadderCert& c, int len);

// The certificate's edges minus the rungs u_1 v_1 and u_4 v_4, as a graph.
Graph core_graph(const LadderCert& c);

bool is_cycle_in(const CycleSeq& c, const Graph& host);
Graph graph_of_cycle(const CycleSeq& c);

// Certificate file format: "m=<m>", "u=<labels>", "v=<labels>" and, if the
// special index is set, "special_t=<t>" and "special_dim=<d>".  Labels are
// zero-padded binary, space-separated; their width is the ambient dimension.
std::string to_cert_text(const LadderCert& c);
// Hamiltonian-cycle certificates serialize as a single "cycle=<labels>" line.
std::string to_cycle_text(const CycleSeq& c);
LadderCert parse_cert_text(std::string_view text);
CycleSeq parse_cycle_text(std::string_view text);

}  // namespace augcube
