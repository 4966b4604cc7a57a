#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "augcube/aq.hpp"
#include "augcube/ladder.hpp"

// Spanning decompositions of AQ_n: for every split 2n-1 = n1 + n2 with
// n1, n2 >= 2, the edge set partitions into an n1-regular subgraph H and an
// n2-regular subgraph K, each n_i-connected and with cycles of every length
// 4..2^n whenever n_i >= 3 (for n_i = 2 the subgraph is a Hamiltonian cycle).
// Every construction also produces an explicit witness: the Hamiltonian cycle
// itself, or a spanning ladder certificate embedded in the subgraph.

namespace augcube {

// Pancyclicity witness for one side: a Hamiltonian cycle for 2-regular
// sides, a spanning ladder certificate otherwise.
using PancyclicWitness = std::variant<CycleSeq, LadderCert>;

struct Decomposition {
  int n = 0;
  int n1 = 0;  // n1 <= n2; H is the n1-regular side
  int n2 = 0;
  Graph h, k;
  PancyclicWitness cert_h;
  LadderCert cert_k;  // always the complement-side ladder certificate
  std::vector<std::string> trace;  // construction rule applied at each level
};

// Base pair in AQ_4 for the 2+5 split: a Hamiltonian cycle plus a spanning
// ladder certificate of its complement (special 4-cycle at rank 5).
// The embedded constants are validated on first use.
struct Aq4HamiltonianBase {
  CycleSeq cycle;
  LadderCert ladder;
};
const Aq4HamiltonianBase& base_aq4_hamiltonian();

// Base pair in AQ_4 for the 3+4 split: two edge-disjoint spanning ladder
// certificates; the first one's core is the 3-regular side, the second (with
// its special 4-cycle) spans the complement and avoids the first's corner
// rungs.  The embedded constants are validated on first use; if the first
// certificate fails validation it is recovered by exhaustive search over
// AQ_4, keeping the four pinned corner labels.
struct Aq4LadderPairBase {
  LadderCert first, second;
};
const Aq4LadderPairBase& base_aq4_ladder_pair();

// Deterministic search behind the recovery path (exposed for testing):
// finds the lexicographically first valid companion for `second`.
LadderCert search_ladder_pair_first(const Graph& aq4, const LadderCert& second);

Decomposition decompose_n1_2(int n);  // n >= 4
Decomposition decompose_n1_3(int n);  // n >= 4
Decomposition decompose_n1_4(int n);  // n >= 5

// Any valid split with 2 <= n1 <= n2; callers wanting the larger side first
// swap the returned pair (the CLI does this for requested n1 > n2).
Decomposition decompose(int n, int n1);

// On-disk bundle: H.edges, K.edges, certH.cert, certK.cert, meta.  Both
// witness slots are variants so a swapped bundle (n1 > n2) round-trips.
struct Bundle {
  int n = 0, n1 = 0, n2 = 0;
  Graph h, k;
  PancyclicWitness cert_h;
  PancyclicWitness cert_k;
  std::vector<std::string> trace;
};

Bundle bundle_from(const Decomposition& d, bool swap_sides);
void write_bundle(const Bundle& b, const std::filesystem::path& dir);
Bundle read_bundle(const std::filesystem::path& dir);

std::string to_meta_text(const Bundle& b);

}  // namespace augcube
