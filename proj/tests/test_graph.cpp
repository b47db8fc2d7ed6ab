#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bettigraph/graph.hpp"
#include "helpers.hpp"

using namespace bettigraph;
using testutil::random_graph;

namespace {

Graph p6() {
  return build_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}});
}

} // namespace

TEST_CASE("build_graph basics") {
  Graph g = p6();
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 5);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(6, 1));
  CHECK_FALSE(g.has_edge(1, 3));
  g.check_invariants();

  Graph empty = build_graph(3, {});
  CHECK(empty.edge_count() == 0);

  Graph dup = build_graph(4, {{1, 2}, {1, 2}, {3, 4}});
  CHECK(dup.edge_count() == 2);

  CHECK_THROWS_AS(build_graph(4, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(4, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(4, {{1, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(64, {}), std::invalid_argument);
}

TEST_CASE("complete graphs") {
  CHECK(complete(5).edge_count() == 10);
  CHECK(complete(1).edge_count() == 0);
  Graph k3 = complete(3);
  CHECK(k3.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("complete multipartite graphs") {
  Graph k33 = complete_multipartite({3, 3});
  CHECK(k33.edge_count() == 9);
  Graph k222 = complete_multipartite({2, 2, 2});
  CHECK(k222.edge_count() == 12);
  CHECK_FALSE(k222.has_edge(1, 2));
  CHECK(k222.has_edge(1, 3));
  Graph one_part = complete_multipartite({4});
  CHECK(one_part.vertex_count() == 4);
  CHECK(one_part.edge_count() == 0);
  CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);

  // Bipartite case: exactly the cross-block pairs.
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= 3; ++s) {
      Graph krs = complete_multipartite({r, s});
      for (int u = 1; u <= r + s; ++u)
        for (int v = u + 1; v <= r + s; ++v)
          CHECK(krs.has_edge(u, v) == (u <= r && v > r));
    }
}

TEST_CASE("induced subgraphs") {
  Graph g = p6();
  RelabeledGraph sub = induced(g, {1, 2, 3});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(sub.old_label == std::vector<int>{0, 1, 2, 3});

  RelabeledGraph all = induced(g, g.vertices());
  CHECK(all.graph == g);

  RelabeledGraph side = induced(complete_multipartite({3, 3}), {1, 2, 3});
  CHECK(side.graph.edge_count() == 0);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = testutil::pick(rng, 1, 10);
    Graph h = random_graph(rng, n, 0.5);
    VertexSet w = testutil::random_subset(rng, n);
    if (w.empty()) continue;
    RelabeledGraph ind = induced(h, w);
    ind.graph.check_invariants();
    // Edge set is exactly the filtered one.
    int filtered = 0;
    for (auto [u, v] : h.edges())
      if (w.contains(u) && w.contains(v)) ++filtered;
    CHECK(ind.graph.edge_count() == filtered);
    for (auto [u, v] : ind.graph.edges())
      CHECK(h.has_edge(ind.old_label[static_cast<size_t>(u)],
                       ind.old_label[static_cast<size_t>(v)]));
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)).edge_count() == 0);
  CHECK(complement(build_graph(3, {})) == complete(3));
  CHECK(complement(p6()).edge_count() == 10);

  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    int n = testutil::pick(rng, 1, 12);
    Graph g = random_graph(rng, n, 0.5);
    Graph cc = complement(complement(g));
    CHECK(cc == g);
    complement(g).check_invariants();
  }
}

TEST_CASE("subdivide") {
  Graph k3 = complete(3);
  Graph sub = subdivide(k3, 2, 3);
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.edges() ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});

  Graph k5sub = subdivide(complete(5), 1, 2);
  CHECK(k5sub.vertex_count() == 6);
  CHECK(k5sub.edge_count() == 11);

  Graph one_edge = build_graph(2, {{1, 2}});
  Graph path = subdivide(one_edge, 1, 2);
  CHECK(path.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});

  CHECK_THROWS_AS(subdivide(p6(), 1, 3), std::invalid_argument);
}

TEST_CASE("smooth") {
  // Inverse of a subdivision.
  Graph k5 = complete(5);
  RelabeledGraph back = smooth(subdivide(k5, 1, 2), VertexSet{});
  CHECK(back.graph == k5);
  CHECK(back.old_label == std::vector<int>{0, 1, 2, 3, 4, 5});

  // Everything protected: unchanged.
  Graph g = p6();
  RelabeledGraph frozen = smooth(g, g.vertices());
  CHECK(frozen.graph == g);

  // z = 2 goes first (neighbors 1,3; edge 13 present), leaving the triangle
  // 1-3-4, which keeps smoothing down to a single edge.
  Graph tri_plus = build_graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}});
  RelabeledGraph smoothed = smooth(tri_plus, VertexSet{});
  CHECK(smoothed.graph.vertex_count() == 2);
  CHECK(smoothed.graph.edge_count() == 1);

  // Fixed point has no unprotected degree-2 vertex.
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    int n = testutil::pick(rng, 1, 10);
    Graph h = random_graph(rng, n, 0.4);
    RelabeledGraph sm = smooth(h, VertexSet{});
    sm.graph.check_invariants();
    for (int v = 1; v <= sm.graph.vertex_count(); ++v)
      CHECK(sm.graph.degree(v) != 2);
  }
}

TEST_CASE("smooth inverts subdivision for min-degree-3 graphs") {
  std::mt19937_64 rng(14);
  int done = 0;
  while (done < 60) {
    int n = testutil::pick(rng, 4, 10);
    Graph g = random_graph(rng, n, 0.7);
    int min_deg = n;
    for (int v = 1; v <= n; ++v) min_deg = std::min(min_deg, g.degree(v));
    if (min_deg < 3) continue;
    ++done;
    for (auto [u, v] : g.edges()) {
      RelabeledGraph back = smooth(subdivide(g, u, v), VertexSet{});
      CHECK(back.graph == g);
    }
  }
}

TEST_CASE("partition spec") {
  PartitionSpec spec = PartitionSpec::consecutive({2, 2, 2});
  CHECK(spec.parts.size() == 3);
  CHECK(spec.parts[1] == VertexSet{3, 4});
  CHECK(spec.support() == VertexSet::from_mask(full_mask(6)));
  CHECK(spec.sizes() == std::vector<int>{2, 2, 2});

  PartitionSpec bad;
  bad.parts = {VertexSet{1, 2}, VertexSet{2, 3}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  PartitionSpec empty;
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("relabeled graph maps") {
  RelabeledGraph sub = induced(p6(), {2, 4, 5});
  CHECK(sub.to_old(VertexSet{1, 3}) == VertexSet{2, 5});
  CHECK(sub.to_new(VertexSet{2, 5}) == VertexSet{1, 3});
  CHECK(sub.to_new(VertexSet{1, 2}) == VertexSet{1}); // 1 was deleted
}

TEST_CASE("graph invariants after random operations") {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 100; ++it) {
    int n = testutil::pick(rng, 2, 12);
    Graph g = random_graph(rng, n, 0.5);
    g.check_invariants();
    complement(g).check_invariants();
    auto es = g.edges();
    if (!es.empty() && n < kMaxVertices) {
      auto [u, v] = es[static_cast<size_t>(
          testutil::pick(rng, 0, static_cast<int>(es.size()) - 1))];
      subdivide(g, u, v).check_invariants();
    }
  }
}
