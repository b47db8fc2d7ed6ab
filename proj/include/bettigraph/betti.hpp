#ifndef BETTIGRAPH_BETTI_HPP
#define BETTIGRAPH_BETTI_HPP

#include <map>
#include <utility>
#include <vector>

#include "bettigraph/field.hpp"
#include "bettigraph/graph.hpp"

namespace bettigraph {

/// Sparse table of multigraded Betti numbers: (homological index i,
/// squarefree multidegree alpha) -> positive count. Absent means zero.
class BettiTable {
 public:
  using Entries = std::map<std::pair<int, Mask>, long long>;

  explicit BettiTable(int n = 0) : n_(n) {}

  int ambient_vertices() const { return n_; }
  long long at(int i, VertexSet alpha) const;
  void add(int i, VertexSet alpha, long long value);
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_;
  Entries entries_;
};

/// Aggregation by total degree: (i, j) -> sum of entries with |alpha| = j.
using GradedRow = std::map<std::pair<int, int>, long long>;

struct BettiOptions {
  // Full-table sweeps walk 2^n supports; refuse beyond this cap unless the
  // caller raises it explicitly.
  int max_n = 16;
};

// beta_{i,W}(I(G)) for i = 0..|W|-2 via Hochster's formula:
// beta_{i,W} = dim H~_{|W|-i-2} of the restricted independence complex.
// Empty vector when |W| < 2.
std::vector<long long> multigraded_betti_at(const Graph& g, VertexSet w,
                                            FieldSpec f);

// Every nonzero entry over all supports W. The default runs the sweep in
// parallel; the serial variant is the reference the tests compare against.
BettiTable betti_table(const Graph& g, FieldSpec f, const BettiOptions& opt = {});
BettiTable betti_table_serial(const Graph& g, FieldSpec f,
                              const BettiOptions& opt = {});

GradedRow graded_from_multigraded(const BettiTable& t);

// beta_{i,alpha}(K_m) = i+1 exactly at squarefree |alpha| = i+2.
BettiTable closed_form_complete(int m);

// beta_{i,alpha} = c_alpha - 1 at |alpha| = i+2, where c_alpha counts the
// parts meeting supp(alpha); zero when c_alpha < 2.
BettiTable closed_form_multipartite(const PartitionSpec& spec);

// First syzygies in a triple degree: |T| must be 3; returns the number of
// connected components of the complement restricted to T, minus one. Equals
// multigraded_betti_at(g, T, f)[1] for every field f.
int first_syzygy_triple(const Graph& g, VertexSet t);

} // namespace bettigraph

#endif
