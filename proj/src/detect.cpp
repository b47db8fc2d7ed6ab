#include "bettigraph/detect.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bettigraph {

namespace {

// k-subsets of the ground mask in ascending mask order (Gosper's hack over
// compacted bit positions).
std::vector<Mask> k_subsets(Mask ground, int k) {
  std::vector<int> pos = VertexSet::from_mask(ground).vertices();
  int m = static_cast<int>(pos.size());
  std::vector<Mask> out;
  if (k < 0 || k > m) return out;
  if (k == 0) return {Mask{0}};
  std::uint64_t c = (std::uint64_t{1} << k) - 1;
  while (c < (std::uint64_t{1} << m)) {
    Mask expanded = 0;
    for (std::uint64_t rest = c; rest != 0; rest &= rest - 1)
      expanded |= vertex_bit(pos[static_cast<size_t>(std::countr_zero(rest))]);
    out.push_back(expanded);
    std::uint64_t u = c & (~c + 1);
    std::uint64_t y = c + u;
    c = y | (((c ^ y) / u) >> 2);
  }
  return out;
}

// Every pair between the block and the rest of W must be an edge.
bool block_valid(const Graph& g, Mask w_all, Mask block) {
  Mask others = w_all & ~block;
  for (Mask m = block; m != 0; m &= m - 1)
    if ((others & ~g.neighbors(std::countr_zero(m))) != 0) return false;
  return true;
}

using BlockPredicate = std::function<bool(Mask)>;

// Assign the lowest remaining vertex to a block of some still-unused size
// (larger sizes first, block contents in ascending mask order) and recurse.
bool find_partition(const Graph& g, Mask w_all, Mask remaining,
                    const std::vector<int>& sizes_left,
                    const BlockPredicate& extra_ok,
                    std::vector<VertexSet>& out) {
  if (remaining == 0) return true;
  int v = std::countr_zero(remaining);
  Mask pool = remaining & ~vertex_bit(v);
  int prev_size = -1;
  for (size_t idx = 0; idx < sizes_left.size(); ++idx) {
    int s = sizes_left[idx];
    if (s == prev_size) continue;
    prev_size = s;
    std::vector<int> rest_sizes;
    rest_sizes.reserve(sizes_left.size() - 1);
    for (size_t j = 0; j < sizes_left.size(); ++j)
      if (j != idx) rest_sizes.push_back(sizes_left[j]);
    for (Mask tail : k_subsets(pool, s - 1)) {
      Mask block = vertex_bit(v) | tail;
      if (!block_valid(g, w_all, block)) continue;
      if (extra_ok && !extra_ok(block)) continue;
      out.push_back(VertexSet::from_mask(block));
      if (find_partition(g, w_all, remaining & ~block, rest_sizes, extra_ok, out))
        return true;
      out.pop_back();
    }
  }
  return false;
}

std::optional<std::vector<VertexSet>> search_partition(
    const Graph& g, VertexSet w, std::vector<int> sizes,
    const BlockPredicate& extra_ok) {
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  std::vector<VertexSet> blocks;
  if (find_partition(g, w.mask, w.mask, sizes, extra_ok, blocks))
    return blocks;
  return std::nullopt;
}

bool all_cross_edges(const Graph& g, VertexSet x, VertexSet y) {
  for (int u : x.vertices())
    if ((y.mask & ~g.neighbors(u)) != 0) return false;
  return true;
}

std::vector<VertexSet> sorted_blocks(std::vector<VertexSet> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.mask < b.mask;
  });
  return blocks;
}

} // namespace

std::vector<int> Certificate::block_sizes() const {
  std::vector<int> out;
  out.reserve(parts.size());
  for (const VertexSet& p : parts) out.push_back(p.size());
  return out;
}

bool oracle_contains_km_at(const Graph& g, VertexSet s) {
  if (s.size() < 2)
    throw std::invalid_argument("oracle_contains_km_at: |S| must be >= 2");
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("oracle_contains_km_at: S out of range");
  for (int v : s.vertices())
    if (((s.mask & ~vertex_bit(v)) & ~g.neighbors(v)) != 0) return false;
  return true;
}

std::optional<std::vector<VertexSet>> oracle_contains_multipartite_at(
    const Graph& g, VertexSet w, std::vector<int> sizes) {
  if (!w.subset_of(g.vertices()))
    throw std::invalid_argument("oracle_contains_multipartite_at: W out of range");
  int total = 0;
  for (int s : sizes) {
    if (s < 1)
      throw std::invalid_argument(
          "oracle_contains_multipartite_at: sizes must be >= 1");
    total += s;
  }
  if (total != w.size())
    throw std::invalid_argument(
        "oracle_contains_multipartite_at: sizes do not sum to |W|");
  return search_partition(g, w, std::move(sizes), nullptr);
}

DetectionResult detect_km_syzygy(const Graph& g, VertexSet s) {
  int m = s.size();
  if (m < 2) throw std::invalid_argument("detect_km_syzygy: |S| must be >= 2");
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("detect_km_syzygy: S out of range");

  DetectionResult res;
  res.verdict = true;
  std::vector<int> v = s.vertices();
  if (m == 2) {
    if (!g.has_edge(v[0], v[1])) {
      res.verdict = false;
      res.failing_degree = s;
    }
  } else {
    // Triples in ascending mask order: largest vertex outermost.
    for (size_t c = 2; c < v.size() && res.verdict; ++c)
      for (size_t b = 1; b < c && res.verdict; ++b)
        for (size_t a = 0; a < b && res.verdict; ++a) {
          VertexSet t{v[a], v[b], v[c]};
          if (first_syzygy_triple(g, t) < 2) {
            res.verdict = false;
            res.failing_degree = t;
          }
        }
  }

  bool oracle = oracle_contains_km_at(g, s);
  if (res.verdict != oracle)
    throw std::logic_error(
        "detect_km_syzygy: syzygy criterion disagrees with the clique oracle");
  if (res.verdict)
    res.certificate = Certificate{Certificate::Kind::Complete, {s}, 0, 0, 0};
  return res;
}

DetectionResult detect_krs_syzygy(const Graph& g, VertexSet x, VertexSet y) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("detect_krs_syzygy: sides must be non-empty");
  if (x.intersects(y))
    throw std::invalid_argument("detect_krs_syzygy: X and Y overlap");
  VertexSet w = VertexSet::from_mask(x.mask | y.mask);
  if (!w.subset_of(g.vertices()))
    throw std::invalid_argument("detect_krs_syzygy: vertices out of range");

  DetectionResult res;
  res.verdict = true;
  std::vector<int> v = w.vertices();
  for (size_t c = 2; c < v.size() && res.verdict; ++c)
    for (size_t b = 1; b < c && res.verdict; ++b)
      for (size_t a = 0; a < b && res.verdict; ++a) {
        VertexSet t{v[a], v[b], v[c]};
        if (t.subset_of(x) || t.subset_of(y)) continue;
        if (first_syzygy_triple(g, t) < 1) {
          res.verdict = false;
          res.failing_degree = t;
        }
      }

  // Certificate ladder: the queried bipartition, then two-blocks absorbing
  // matched pairs. Blocks of size >= 3 must stay inside one side; otherwise
  // they could swallow a triple the verdict quantifies over.
  int r = x.size();
  int s = y.size();
  std::optional<Certificate> cert;
  if (all_cross_edges(g, x, y))
    cert = Certificate{Certificate::Kind::Bipartite, {x, y}, 0, r, s};
  std::set<std::vector<int>> tried;
  BlockPredicate inside_one_side = [&](Mask block) {
    if (std::popcount(block) < 3) return true;
    return VertexSet::from_mask(block).subset_of(x) ||
           VertexSet::from_mask(block).subset_of(y);
  };
  for (int t = 1; !cert && t <= std::min(r, s); ++t) {
    std::vector<int> sizes(static_cast<size_t>(t), 2);
    if (r - t > 0) sizes.push_back(r - t);
    if (s - t > 0) sizes.push_back(s - t);
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    if (!tried.insert(sizes).second) continue;
    if (auto blocks = search_partition(g, w, sizes, inside_one_side)) {
      Certificate c;
      c.kind = Certificate::Kind::Multipartite;
      c.parts = sorted_blocks(std::move(*blocks));
      c.t = t;
      c.a = std::max(r - t, s - t);
      c.b = std::min(r - t, s - t);
      cert = std::move(c);
    }
  }

  if (res.verdict != cert.has_value())
    throw std::logic_error(
        "detect_krs_syzygy: syzygy criterion disagrees with the certificate "
        "search");
  if (res.verdict) res.certificate = std::move(cert);
  return res;
}

SubgraphSpec SubgraphSpec::complete_on(VertexSet s) {
  if (s.size() < 1)
    throw std::invalid_argument("SubgraphSpec: empty clique");
  SubgraphSpec h;
  h.kind = Kind::Complete;
  h.clique = s;
  return h;
}

SubgraphSpec SubgraphSpec::multipartite_on(PartitionSpec spec) {
  spec.validate();
  SubgraphSpec h;
  h.kind = Kind::Multipartite;
  h.partition = std::move(spec);
  return h;
}

VertexSet SubgraphSpec::support() const {
  return kind == Kind::Complete ? clique : partition.support();
}

std::vector<std::pair<int, int>> SubgraphSpec::pattern_edges() const {
  std::vector<std::pair<int, int>> out;
  if (kind == Kind::Complete) {
    std::vector<int> v = clique.vertices();
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j) out.emplace_back(v[i], v[j]);
  } else {
    for (size_t i = 0; i < partition.parts.size(); ++i)
      for (size_t j = i + 1; j < partition.parts.size(); ++j)
        for (int u : partition.parts[i].vertices())
          for (int v : partition.parts[j].vertices())
            out.emplace_back(std::min(u, v), std::max(u, v));
  }
  return out;
}

bool check_full_betti_dominance(const Graph& g, const SubgraphSpec& h,
                                FieldSpec f) {
  VertexSet vh = h.support();
  if (!vh.subset_of(g.vertices()))
    throw std::invalid_argument(
        "check_full_betti_dominance: H's vertices out of range");

  // H has a linear resolution, so its only nonzero entries sit at
  // i = |alpha| - 2 with supp(alpha) inside V(H).
  bool dominated = true;
  VertexSet witness;
  for (Mask a = vh.mask; a != 0 && dominated; a = (a - 1) & vh.mask) {
    int size = std::popcount(a);
    if (size < 2) continue;
    long long h_value = 0;
    if (h.kind == SubgraphSpec::Kind::Complete) {
      h_value = size - 1;
    } else {
      int met = 0;
      for (const VertexSet& part : h.partition.parts)
        if ((part.mask & a) != 0) ++met;
      h_value = met >= 2 ? met - 1 : 0;
    }
    if (h_value == 0) continue;
    std::vector<long long> bs = multigraded_betti_at(g, VertexSet::from_mask(a), f);
    if (bs[static_cast<size_t>(size - 2)] < h_value) {
      dominated = false;
      witness = VertexSet::from_mask(a);
    }
  }

  bool contained = true;
  for (auto [u, v] : h.pattern_edges())
    if (!g.has_edge(u, v)) {
      contained = false;
      break;
    }
  if (dominated != contained)
    throw std::logic_error(
        "check_full_betti_dominance: dominance disagrees with edge "
        "containment");
  return dominated;
}

bool check_km_equality(const Graph& g, VertexSet s, FieldSpec f) {
  if (!oracle_contains_km_at(g, s))
    throw std::invalid_argument("check_km_equality: S is not a clique of G");
  for (Mask a = s.mask; a != 0; a = (a - 1) & s.mask) {
    int size = std::popcount(a);
    if (size < 2) continue;
    std::vector<long long> bs = multigraded_betti_at(g, VertexSet::from_mask(a), f);
    for (int i = 0; i <= size - 2; ++i) {
      long long expected = i == size - 2 ? size - 1 : 0;
      if (bs[static_cast<size_t>(i)] != expected) return false;
    }
  }
  return true;
}

namespace {

std::optional<ScanWitness> scan_support(const Graph& g, Mask w_mask) {
  VertexSet w = VertexSet::from_mask(w_mask);
  std::vector<int> v = w.vertices();
  std::optional<Certificate> k33;
  std::optional<Certificate> k222;
  // The 10 balanced bipartitions: v[0] stays on the X side.
  for (size_t j = 1; j < 5 && !k33; ++j)
    for (size_t k = j + 1; k < 6 && !k33; ++k) {
      VertexSet x{v[0], v[j], v[k]};
      VertexSet y = VertexSet::from_mask(w.mask & ~x.mask);
      DetectionResult res = detect_krs_syzygy(g, x, y);
      if (!res.verdict) continue;
      if (res.certificate->kind == Certificate::Kind::Bipartite)
        k33 = res.certificate;
      else if (!k222)
        k222 = res.certificate;
    }
  if (k33) return ScanWitness{w, ScanWitness::Kind::K33, std::move(*k33)};
  if (k222) {
    if (k222->block_sizes() != std::vector<int>{2, 2, 2})
      throw std::logic_error("k33_k222_scan: unexpected certificate shape");
    return ScanWitness{w, ScanWitness::Kind::K222, std::move(*k222)};
  }
  return std::nullopt;
}

} // namespace

std::vector<ScanWitness> k33_k222_scan_serial(const Graph& g) {
  std::vector<ScanWitness> out;
  if (g.vertex_count() < 6) return out;
  for (Mask w : k_subsets(g.vertices().mask, 6))
    if (auto witness = scan_support(g, w)) out.push_back(std::move(*witness));
  return out;
}

std::vector<ScanWitness> k33_k222_scan(const Graph& g) {
  std::vector<ScanWitness> out;
  if (g.vertex_count() < 6) return out;
  std::vector<Mask> supports = k_subsets(g.vertices().mask, 6);
  std::vector<std::vector<ScanWitness>> buckets;
#ifdef _OPENMP
  buckets.resize(static_cast<size_t>(omp_get_max_threads()));
#else
  buckets.resize(1);
#endif
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 32)
#endif
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(supports.size());
       ++idx) {
#ifdef _OPENMP
    auto& bucket = buckets[static_cast<size_t>(omp_get_thread_num())];
#else
    auto& bucket = buckets[0];
#endif
    if (auto witness = scan_support(g, supports[static_cast<size_t>(idx)]))
      bucket.push_back(std::move(*witness));
  }
  for (auto& bucket : buckets)
    for (auto& witness : bucket) out.push_back(std::move(witness));
  std::sort(out.begin(), out.end(), [](const ScanWitness& a, const ScanWitness& b) {
    return a.support.mask < b.support.mask;
  });
  return out;
}

KuratowskiReport kuratowski_desk_scan(const Graph& g, int max_n) {
  if (g.vertex_count() > max_n)
    throw std::invalid_argument(
        "kuratowski_desk_scan: n exceeds the configured cap " +
        std::to_string(max_n));
  KuratowskiReport report;
  report.smoothed = smooth(g, VertexSet{});
  const Graph& h = report.smoothed.graph;
  for (Mask s : k_subsets(h.vertices().mask, 5))
    if (detect_km_syzygy(h, VertexSet::from_mask(s)).verdict)
      report.k5.push_back(VertexSet::from_mask(s));
  for (ScanWitness& witness : k33_k222_scan(h))
    if (witness.kind == ScanWitness::Kind::K33)
      report.k33.push_back(std::move(witness));
  return report;
}

} // namespace bettigraph
