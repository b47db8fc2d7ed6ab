#ifndef BETTIGRAPH_TESTS_HELPERS_HPP
#define BETTIGRAPH_TESTS_HELPERS_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "bettigraph/complex.hpp"
#include "bettigraph/graph.hpp"

namespace testutil {

using namespace bettigraph;

// Platform-independent Bernoulli draw (distributions differ across stdlibs).
inline bool chance(std::mt19937_64& rng, double p) {
  return rng() < static_cast<std::uint64_t>(
                     p * static_cast<double>(
                             std::numeric_limits<std::uint64_t>::max()));
}

inline int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (chance(rng, p)) g.add_edge(u, v);
  return g;
}

inline VertexSet random_subset(std::mt19937_64& rng, int n) {
  return VertexSet::from_mask(rng() & full_mask(n));
}

// The graph on n vertices whose edge set is selected by `edge_bits` over the
// pairs (1,2), (1,3), (2,3), (1,4), ... ; drives exhaustive sweeps.
inline Graph graph_from_edge_bits(int n, std::uint64_t edge_bits) {
  Graph g(n);
  int bit = 0;
  for (int v = 2; v <= n; ++v)
    for (int u = 1; u < v; ++u, ++bit)
      if ((edge_bits >> bit) & 1) g.add_edge(u, v);
  return g;
}

// Independent connected-component count of a complex's 1-skeleton,
// via union-find; oracle for dim H~_0 = components - 1.
inline int component_count(const RestrictedComplex& c) {
  std::vector<int> verts = c.ground.vertices();
  std::vector<int> parent(verts.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
    return x;
  };
  auto index_of = [&](int v) {
    for (size_t i = 0; i < verts.size(); ++i)
      if (verts[i] == v) return static_cast<int>(i);
    return -1;
  };
  if (c.faces.size() > 2)
    for (Mask e : c.faces[2]) {
      auto vs = VertexSet::from_mask(e).vertices();
      int a = find(index_of(vs[0]));
      int b = find(index_of(vs[1]));
      if (a != b) parent[static_cast<size_t>(a)] = b;
    }
  int count = 0;
  for (size_t i = 0; i < verts.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
  return count;
}

} // namespace testutil

#endif
