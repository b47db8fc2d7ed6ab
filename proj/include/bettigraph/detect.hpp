#ifndef BETTIGRAPH_DETECT_HPP
#define BETTIGRAPH_DETECT_HPP

#include <optional>
#include <vector>

#include "bettigraph/betti.hpp"
#include "bettigraph/field.hpp"
#include "bettigraph/graph.hpp"

namespace bettigraph {

/// Combinatorial embedding backing a positive detector verdict.
struct Certificate {
  enum class Kind {
    Complete,     // K_m on a vertex set
    Bipartite,    // K_{r,s} with the queried bipartition (X, Y)
    Multipartite, // K_{2,...,2,a,b} with t two-blocks, a >= b
  };

  Kind kind = Kind::Complete;
  // Complete: one block. Bipartite: {X, Y}. Multipartite: blocks sorted by
  // size descending, then by mask.
  std::vector<VertexSet> parts;
  int t = 0;
  int a = 0;
  int b = 0;

  std::vector<int> block_sizes() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct DetectionResult {
  bool verdict = false;
  std::optional<Certificate> certificate;  // present when verdict is true
  std::optional<VertexSet> failing_degree; // first violated multidegree
};

// True iff every pair of S is an edge of g. |S| >= 2 required.
bool oracle_contains_km_at(const Graph& g, VertexSet s);

// Searches for a partition of W into blocks with the given size multiset
// such that every cross-block pair is an edge of g. Blocks are discovered
// in a fixed order (the block of the lowest unassigned vertex is chosen
// among candidate subsets in ascending mask order, larger sizes first), so
// the first witness is canonical. Sum of sizes must equal |W|.
std::optional<std::vector<VertexSet>> oracle_contains_multipartite_at(
    const Graph& g, VertexSet w, std::vector<int> sizes);

// First-syzygy detector for K_m at S: for m >= 3 every triple inside S must
// carry a first syzygy of multiplicity 2; for m = 2 the edge itself is
// checked. The verdict is asserted against oracle_contains_km_at.
DetectionResult detect_km_syzygy(const Graph& g, VertexSet s);

// First-syzygy detector for K_{r,s} at (X, Y): every triple of X u Y that
// meets both sides must carry a first syzygy. A positive verdict is
// classified into a certificate: K_{r,s} on (X, Y) itself first, then
// K_{2,...,2, r-t, s-t} for ascending t >= 1, where any block with three or
// more vertices must lie inside X or inside Y. The verdict is asserted to
// agree with certificate existence.
DetectionResult detect_krs_syzygy(const Graph& g, VertexSet x, VertexSet y);

/// The pattern graph H of a dominance or equality query.
struct SubgraphSpec {
  enum class Kind { Complete, Multipartite } kind = Kind::Complete;
  VertexSet clique;        // Complete
  PartitionSpec partition; // Multipartite

  static SubgraphSpec complete_on(VertexSet s);
  static SubgraphSpec multipartite_on(PartitionSpec spec);

  VertexSet support() const;
  std::vector<std::pair<int, int>> pattern_edges() const;
};

// True iff beta_{i,alpha}(H) <= beta_{i,alpha}(G) for every i and every
// squarefree alpha with supp(alpha) inside V(H); H values come from the
// closed forms, G values from Hochster. Asserted to agree with plain edge
// containment of H in G.
bool check_full_betti_dominance(const Graph& g, const SubgraphSpec& h,
                                FieldSpec f);

// Given that S spans a clique of g, checks beta_{i,alpha}(G) =
// beta_{i,alpha}(K_|S|) for every alpha supported inside S. Rejects inputs
// whose S is not a clique.
bool check_km_equality(const Graph& g, VertexSet s, FieldSpec f);

struct ScanWitness {
  VertexSet support; // the 6-subset W
  enum class Kind { K33, K222 } kind = Kind::K33;
  Certificate certificate;

  friend bool operator==(const ScanWitness&, const ScanWitness&) = default;
};

// For every 6-subset W and each of its 10 balanced bipartitions, runs the
// K_{3,3} first-syzygy detector; one witness per W, preferring K_{3,3} over
// K_{2,2,2}. Empty for n < 6. The default is the parallel sweep.
std::vector<ScanWitness> k33_k222_scan(const Graph& g);
std::vector<ScanWitness> k33_k222_scan_serial(const Graph& g);

struct KuratowskiReport {
  RelabeledGraph smoothed;
  // Witness supports in the labels of the smoothed graph.
  std::vector<VertexSet> k5;
  std::vector<ScanWitness> k33;
};

// Smooths all degree-2 vertices, then scans 5-subsets for K_5 and 6-subsets
// for K_{3,3}. Finds K_5/K_{3,3} subgraphs of the smoothed graph only, not
// every homeomorphic subgraph, so it is a demonstrator rather than a
// planarity test.
KuratowskiReport kuratowski_desk_scan(const Graph& g, int max_n = 16);

} // namespace bettigraph

#endif
