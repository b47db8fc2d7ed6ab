#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bettigraph/betti.hpp"
#include "bettigraph/detect.hpp"
#include "bettigraph/graph.hpp"
#include "helpers.hpp"

using namespace bettigraph;
using testutil::graph_from_edge_bits;
using testutil::random_graph;

namespace {

Graph p6() {
  return build_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}});
}

const FieldSpec kF2{};
const FieldSpec kQ = FieldSpec::rationals();

// All disjoint (X, Y) pairs of given sizes inside 1..n.
std::vector<std::pair<VertexSet, VertexSet>> side_pairs(int n, int r, int s) {
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (Mask x = 0; x <= full_mask(n); ++x) {
    if ((x & 1) || std::popcount(x) != r || (x & ~full_mask(n))) continue;
    for (Mask y = 0; y <= full_mask(n); ++y) {
      if ((y & 1) || std::popcount(y) != s || (y & ~full_mask(n))) continue;
      if (x & y) continue;
      out.emplace_back(VertexSet::from_mask(x), VertexSet::from_mask(y));
    }
  }
  return out;
}

} // namespace

TEST_CASE("km oracle") {
  CHECK(oracle_contains_km_at(complete(6), {1, 2, 4, 5, 6}));
  CHECK_FALSE(oracle_contains_km_at(p6(), {1, 2, 3}));
  CHECK(oracle_contains_km_at(complete_multipartite({2, 2, 2}), {1, 3, 5}));
  CHECK_THROWS_AS(oracle_contains_km_at(p6(), {1}), std::invalid_argument);
}

TEST_CASE("multipartite oracle") {
  Graph k222 = complete_multipartite({2, 2, 2});
  CHECK_FALSE(
      oracle_contains_multipartite_at(k222, k222.vertices(), {3, 3}).has_value());
  auto canonical =
      oracle_contains_multipartite_at(k222, k222.vertices(), {2, 2, 2});
  REQUIRE(canonical.has_value());
  CHECK(*canonical == std::vector<VertexSet>{{1, 2}, {3, 4}, {5, 6}});

  Graph c4 = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  auto bip = oracle_contains_multipartite_at(c4, c4.vertices(), {2, 2});
  REQUIRE(bip.has_value());
  CHECK(*bip == std::vector<VertexSet>{{1, 3}, {2, 4}});

  CHECK_THROWS_AS(
      oracle_contains_multipartite_at(k222, k222.vertices(), {3, 2}),
      std::invalid_argument);
  CHECK_THROWS_AS(oracle_contains_multipartite_at(k222, {1, 2}, {2, 0}),
                  std::invalid_argument);
}

TEST_CASE("detect_km on fixtures") {
  DetectionResult hit = detect_km_syzygy(complete(6), {1, 2, 3, 4, 5});
  CHECK(hit.verdict);
  REQUIRE(hit.certificate.has_value());
  CHECK(hit.certificate->kind == Certificate::Kind::Complete);
  CHECK(hit.certificate->parts == std::vector<VertexSet>{{1, 2, 3, 4, 5}});

  DetectionResult miss = detect_km_syzygy(p6(), {1, 2, 3});
  CHECK_FALSE(miss.verdict);
  REQUIRE(miss.failing_degree.has_value());
  CHECK(*miss.failing_degree == VertexSet{1, 2, 3});

  DetectionResult intra =
      detect_km_syzygy(complete_multipartite({2, 2, 2}), {1, 2, 3});
  CHECK_FALSE(intra.verdict);

  // m = 2 reduces to the edge test.
  CHECK(detect_km_syzygy(p6(), {1, 2}).verdict);
  DetectionResult non_edge = detect_km_syzygy(p6(), {1, 3});
  CHECK_FALSE(non_edge.verdict);
  CHECK(*non_edge.failing_degree == VertexSet{1, 3});

  CHECK_THROWS_AS(detect_km_syzygy(p6(), {1}), std::invalid_argument);
}

TEST_CASE("detect_km matches the oracle on every 4-vertex graph") {
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    Graph g = graph_from_edge_bits(4, bits);
    for (Mask s = 0; s <= full_mask(4); s += 2) {
      if (std::popcount(s) < 2) continue;
      VertexSet set = VertexSet::from_mask(s);
      CHECK(detect_km_syzygy(g, set).verdict == oracle_contains_km_at(g, set));
    }
  }
}

TEST_CASE("detect_krs on fixtures") {
  Graph k222 = complete_multipartite({2, 2, 2});
  DetectionResult r = detect_krs_syzygy(k222, {1, 3, 5}, {2, 4, 6});
  CHECK(r.verdict);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->kind == Certificate::Kind::Multipartite);
  CHECK(r.certificate->block_sizes() == std::vector<int>{2, 2, 2});
  CHECK(r.certificate->parts == std::vector<VertexSet>{{1, 2}, {3, 4}, {5, 6}});

  Graph c4 = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  DetectionResult bip = detect_krs_syzygy(c4, {1, 3}, {2, 4});
  CHECK(bip.verdict);
  CHECK(bip.certificate->kind == Certificate::Kind::Bipartite);
  CHECK(bip.certificate->parts == std::vector<VertexSet>{{1, 3}, {2, 4}});

  DetectionResult miss = detect_krs_syzygy(p6(), {1, 3}, {2, 4});
  CHECK_FALSE(miss.verdict);
  REQUIRE(miss.failing_degree.has_value());
  CHECK(*miss.failing_degree == VertexSet{1, 2, 4});

  CHECK_THROWS_AS(detect_krs_syzygy(p6(), {1, 2}, {2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(detect_krs_syzygy(p6(), VertexSet{}, {1, 2}),
                  std::invalid_argument);
}

TEST_CASE("detect_krs verdict equals beta_1 dominance of K_{r,s}") {
  // The verdict is defined through triple degrees; cross-check it against
  // the raw Hochster values it stands for.
  std::mt19937_64 rng(41);
  for (int it = 0; it < 150; ++it) {
    int n = testutil::pick(rng, 4, 7);
    Graph g = random_graph(rng, n, 0.55);
    auto pairs = side_pairs(n, 2, 2);
    auto [x, y] = pairs[rng() % pairs.size()];
    bool dominated = true;
    Mask w = x.mask | y.mask;
    for (Mask a = w; a != 0 && dominated; a = (a - 1) & w) {
      if (std::popcount(a) != 3) continue;
      VertexSet t = VertexSet::from_mask(a);
      if (t.subset_of(x) || t.subset_of(y)) continue;
      if (multigraded_betti_at(g, t, kF2)[1] < 1) dominated = false;
    }
    CHECK(detect_krs_syzygy(g, x, y).verdict == dominated);
  }
}

TEST_CASE("detect_krs matches partition certificates exhaustively for (2,2)") {
  // For r = s = 2 no block can reach three vertices, so the side
  // constraint is vacuous and plain size partitions decide containment:
  // K_{2,2} anywhere on W, or K_{2,1,1}.
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    Graph g = graph_from_edge_bits(4, bits);
    for (auto [x, y] : side_pairs(4, 2, 2)) {
      bool has_cert =
          oracle_contains_multipartite_at(g, VertexSet::from_mask(x.mask | y.mask),
                                          {2, 2})
              .has_value() ||
          oracle_contains_multipartite_at(g, VertexSet::from_mask(x.mask | y.mask),
                                          {2, 1, 1})
              .has_value();
      CHECK(detect_krs_syzygy(g, x, y).verdict == has_cert);
    }
  }
}

TEST_CASE("empty a,b blocks are required: K_{2,2} as K_{2x2,0,0}") {
  // On the 4-cycle with sides {1,2} / {3,4}, neither the queried K_{2,2}
  // nor any K_{2,1,1} embeds, yet the verdict holds via the matched pairs
  // {1,3} / {2,4}. Dropping a = b = 0 certificates would break the equivalence.
  Graph c4 = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  DetectionResult res = detect_krs_syzygy(c4, {1, 2}, {3, 4});
  CHECK(res.verdict);
  REQUIRE(res.certificate.has_value());
  CHECK(res.certificate->kind == Certificate::Kind::Multipartite);
  CHECK(res.certificate->t == 2);
  CHECK(res.certificate->a == 0);
  CHECK(res.certificate->b == 0);
  CHECK(res.certificate->parts == std::vector<VertexSet>{{1, 3}, {2, 4}});
}

TEST_CASE("size-only partitions overshoot the syzygy criterion for (3,3)") {
  // K6 minus {12, 24, 35}: the sizes-{3,3} partition {1,2,4}/{3,5,6} has
  // every cross pair present, yet beta_1 vanishes at {1,2,4}, so the
  // detector must say no. Blocks of size >= 3 have to stay inside one side.
  Graph g(6);
  for (int u = 1; u <= 6; ++u)
    for (int v = u + 1; v <= 6; ++v) g.add_edge(u, v);
  Graph bad = build_graph(6, [&] {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
      if (!((u == 1 && v == 2) || (u == 2 && v == 4) || (u == 3 && v == 5)))
        edges.push_back({u, v});
    return edges;
  }());

  CHECK(multigraded_betti_at(bad, {1, 2, 4}, kF2)[1] == 0);
  CHECK(oracle_contains_multipartite_at(bad, bad.vertices(), {3, 3}).has_value());

  DetectionResult res = detect_krs_syzygy(bad, {1, 2, 3}, {4, 5, 6});
  CHECK_FALSE(res.verdict);
  CHECK(*res.failing_degree == VertexSet{1, 2, 4});
}

TEST_CASE("detect_krs sampled against sided certificates for (2,3) and (3,3)") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 400; ++it) {
    int n = testutil::pick(rng, 6, 8);
    Graph g = random_graph(rng, n, it % 2 == 0 ? 0.5 : 0.75);
    int r = it % 2 == 0 ? 2 : 3;
    int s = 3;
    auto pairs = side_pairs(n, r, s);
    auto [x, y] = pairs[rng() % pairs.size()];
    // detect_krs_syzygy itself asserts verdict == certificate existence and
    // throws std::logic_error on disagreement.
    CHECK_NOTHROW(detect_krs_syzygy(g, x, y));
  }
}

TEST_CASE("full Betti dominance characterizes containment") {
  CHECK(check_full_betti_dominance(
      complete(5), SubgraphSpec::complete_on({1, 2, 3, 4, 5}), kF2));
  CHECK_FALSE(check_full_betti_dominance(
      p6(), SubgraphSpec::complete_on(VertexSet::from_mask(full_mask(6))), kF2));

  Graph fig2 = complete_multipartite({3, 3});
  fig2.add_edge(1, 2);
  CHECK(check_full_betti_dominance(
      fig2, SubgraphSpec::multipartite_on(PartitionSpec::consecutive({3, 3})),
      kF2));

  std::mt19937_64 rng(43);
  for (int it = 0; it < 40; ++it) {
    int n = testutil::pick(rng, 3, 8);
    Graph g = random_graph(rng, n, 0.6);
    VertexSet s = testutil::random_subset(rng, n);
    if (s.size() < 2) continue;
    for (FieldSpec f : {kF2, kQ}) {
      bool dom = check_full_betti_dominance(g, SubgraphSpec::complete_on(s), f);
      CHECK(dom == oracle_contains_km_at(g, s));
    }
  }

  // Multipartite patterns on random vertex subsets; the dominance check
  // itself asserts agreement with edge containment, so it must not throw.
  for (int it = 0; it < 40; ++it) {
    int n = testutil::pick(rng, 3, 8);
    Graph g = random_graph(rng, n, 0.6);
    VertexSet w = testutil::random_subset(rng, n);
    std::vector<int> verts = w.vertices();
    if (verts.size() < 2) continue;
    PartitionSpec spec;
    VertexSet part;
    for (size_t i = 0; i < verts.size(); ++i) {
      part.mask |= vertex_bit(verts[i]);
      if (testutil::chance(rng, 0.5) || i + 1 == verts.size()) {
        spec.parts.push_back(part);
        part = VertexSet{};
      }
    }
    if (spec.parts.size() < 2) continue;
    SubgraphSpec h = SubgraphSpec::multipartite_on(spec);
    bool contained = true;
    for (auto [u, v] : h.pattern_edges())
      if (!g.has_edge(u, v)) contained = false;
    for (FieldSpec f : {kF2, kQ})
      CHECK(check_full_betti_dominance(g, h, f) == contained);
  }
}

TEST_CASE("km equality holds below clique supports") {
  CHECK(check_km_equality(complete(6), {1, 2, 4, 5, 6}, kF2));
  CHECK(check_km_equality(complete_multipartite({2, 2, 2}), {1, 3, 5}, kF2));
  Graph k4_plus(5);
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) k4_plus.add_edge(u, v);
  CHECK(check_km_equality(k4_plus, {1, 2, 3, 4}, kF2));
  CHECK(check_km_equality(k4_plus, {1, 2, 3, 4}, kQ));

  CHECK_THROWS_AS(check_km_equality(p6(), {1, 2, 3}, kF2),
                  std::invalid_argument);

  std::mt19937_64 rng(44);
  int done = 0;
  while (done < 25) {
    int n = testutil::pick(rng, 3, 8);
    Graph g = random_graph(rng, n, 0.7);
    VertexSet s = testutil::random_subset(rng, n);
    if (s.size() < 2 || !oracle_contains_km_at(g, s)) continue;
    ++done;
    CHECK(check_km_equality(g, s, kF2));
  }
}

TEST_CASE("k33/k222 scan fixtures") {
  Graph k222 = complete_multipartite({2, 2, 2});
  auto witnesses = k33_k222_scan(k222);
  REQUIRE(witnesses.size() == 1);
  CHECK(witnesses[0].kind == ScanWitness::Kind::K222);
  CHECK(witnesses[0].support == k222.vertices());
  CHECK(witnesses[0].certificate.block_sizes() == std::vector<int>{2, 2, 2});

  Graph fig2 = complete_multipartite({3, 3});
  fig2.add_edge(1, 2);
  auto fig2_witnesses = k33_k222_scan(fig2);
  REQUIRE(fig2_witnesses.size() == 1);
  CHECK(fig2_witnesses[0].kind == ScanWitness::Kind::K33);

  CHECK(k33_k222_scan(p6()).empty());
  CHECK(k33_k222_scan(complete(5)).empty()); // n < 6
}

TEST_CASE("scan is monotone under edge addition") {
  std::mt19937_64 rng(45);
  for (int it = 0; it < 15; ++it) {
    int n = testutil::pick(rng, 6, 8);
    Graph g = random_graph(rng, n, 0.6);
    Graph bigger = g;
    bool added = false;
    for (int u = 1; u <= n && !added; ++u)
      for (int v = u + 1; v <= n && !added; ++v)
        if (!g.has_edge(u, v)) {
          bigger.add_edge(u, v);
          added = true;
        }
    if (!added) continue;
    auto before = k33_k222_scan(g);
    auto after = k33_k222_scan(bigger);
    for (const ScanWitness& w : before) {
      bool still_there = false;
      for (const ScanWitness& w2 : after)
        if (w2.support == w.support) still_there = true;
      CHECK(still_there);
    }
  }
}

TEST_CASE("scan parallel kernel agrees with the serial reference") {
  std::mt19937_64 rng(46);
  for (int it = 0; it < 10; ++it) {
    int n = testutil::pick(rng, 6, 9);
    Graph g = random_graph(rng, n, 0.55);
    CHECK(k33_k222_scan(g) == k33_k222_scan_serial(g));
  }
}

TEST_CASE("kuratowski desk scan") {
  Graph k5sub = subdivide(complete(5), 2, 4);
  KuratowskiReport rep = kuratowski_desk_scan(k5sub);
  CHECK(rep.smoothed.graph == complete(5));
  REQUIRE(rep.k5.size() == 1);
  CHECK(rep.k5[0] == VertexSet{1, 2, 3, 4, 5});
  CHECK(rep.k33.empty());

  // C8 smooths itself away.
  Graph c8 = build_graph(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                             {7, 8}, {1, 8}});
  KuratowskiReport c8rep = kuratowski_desk_scan(c8);
  CHECK(c8rep.k5.empty());
  CHECK(c8rep.k33.empty());

  // K33 with every edge subdivided once.
  Graph k33 = complete_multipartite({3, 3});
  Graph sub = k33;
  for (auto [u, v] : k33.edges()) sub = subdivide(sub, u, v);
  CHECK(sub.vertex_count() == 15);
  KuratowskiReport k33rep = kuratowski_desk_scan(sub);
  CHECK(k33rep.smoothed.graph == k33);
  REQUIRE(k33rep.k33.size() == 1);
  CHECK(k33rep.k33[0].kind == ScanWitness::Kind::K33);
  CHECK(k33rep.k5.empty());

  CHECK_THROWS_AS(kuratowski_desk_scan(Graph(18), 16), std::invalid_argument);
}
