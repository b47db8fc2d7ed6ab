#ifndef BETTIGRAPH_GRAPH_HPP
#define BETTIGRAPH_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace bettigraph {

// Vertex labels are 1..n and vertex v occupies bit v of a Mask, so one
// machine word covers every supported graph.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 63;

constexpr Mask vertex_bit(int v) { return Mask{1} << v; }

// Mask holding all of 1..n.
constexpr Mask full_mask(int n) { return ((Mask{1} << n) - 1) << 1; }

/// A set of vertex labels, stored as a bit-mask.
struct VertexSet {
  Mask mask = 0;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) mask |= vertex_bit(v);
  }
  static constexpr VertexSet from_mask(Mask m) {
    VertexSet s;
    s.mask = m;
    return s;
  }

  bool contains(int v) const { return (mask >> v) & 1; }
  int size() const { return std::popcount(mask); }
  bool empty() const { return mask == 0; }
  bool subset_of(VertexSet other) const { return (mask & ~other.mask) == 0; }
  bool intersects(VertexSet other) const { return (mask & other.mask) != 0; }

  int min_vertex() const;            // 0 when empty
  std::vector<int> vertices() const; // ascending

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
};

/// Simple undirected graph on vertices 1..n with bit-mask adjacency rows.
/// Values are immutable once built; every operation below returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::from_mask(full_mask(n_)); }
  Mask neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return std::popcount(neighbors(v)); }
  bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1; }

  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const; // sorted, u < v

  // Construction-phase mutation; validates labels and rejects loops.
  void add_edge(int u, int v);

  // Adjacency symmetry, looplessness, and bit range; throws std::logic_error.
  void check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> adj_; // index 0 unused
};

/// Ordered list of pairwise-disjoint non-empty vertex blocks X_1, ..., X_l.
struct PartitionSpec {
  std::vector<VertexSet> parts;

  // Consecutive blocks 1..r1, r1+1..r1+r2, ... for the given sizes.
  static PartitionSpec consecutive(const std::vector<int>& sizes);

  VertexSet support() const;
  std::vector<int> sizes() const;
  void validate() const; // throws std::invalid_argument
};

/// A graph together with the original label of each of its vertices
/// (old_label[v] for v = 1..n', entry 0 unused). Returned by operations
/// that delete or renumber vertices.
struct RelabeledGraph {
  Graph graph;
  std::vector<int> old_label;

  // Map a set of current labels back to original labels.
  VertexSet to_old(VertexSet current) const;
  // Map a set of original labels to current labels; vertices that were
  // deleted are dropped.
  VertexSet to_new(VertexSet original) const;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph complete(int m);
Graph complete_multipartite(const std::vector<int>& sizes);

// Induced subgraph on W, relabeled 1..|W| preserving label order.
RelabeledGraph induced(const Graph& g, VertexSet w);

Graph complement(const Graph& g);

// Replace edge uv by a path u - (n+1) - v.
Graph subdivide(const Graph& g, int u, int v);

// Repeatedly suppress unprotected degree-2 vertices: delete z and keep a
// single edge between its two neighbors (added if absent). Candidates are
// scanned in ascending label order and the scan restarts after each
// deletion; labels are compacted once at the fixed point.
RelabeledGraph smooth(const Graph& g, VertexSet protected_vertices);

} // namespace bettigraph

#endif
