#include "bettigraph/betti.hpp"

#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bettigraph/complex.hpp"

namespace bettigraph {

namespace {

bool is_independent(const Graph& g, Mask w) {
  for (Mask m = w; m != 0; m &= m - 1)
    if ((g.neighbors(std::countr_zero(m)) & w) != 0) return false;
  return true;
}

struct Entry {
  int i;
  Mask alpha;
  long long value;
};

void betti_entries_for_support(const Graph& g, Mask w, FieldSpec f,
                               std::vector<Entry>& out) {
  int size = std::popcount(w);
  if (size < 2) return;
  // An independent support carries a full simplex, which is acyclic.
  if (is_independent(g, w)) return;
  RestrictedComplex c = restricted_independence_complex(g, VertexSet::from_mask(w));
  std::vector<long long> dims = reduced_homology_dims(c, f);
  for (int i = 0; i <= size - 2; ++i) {
    int k = size - i - 2;
    if (k < static_cast<int>(dims.size()) && dims[static_cast<size_t>(k)] != 0)
      out.push_back({i, w, dims[static_cast<size_t>(k)]});
  }
}

void check_table_cap(const Graph& g, const BettiOptions& opt) {
  // 2^n supports make anything beyond the high twenties hopeless no matter
  // what cap the caller asks for.
  constexpr int kHardCap = 28;
  int cap = opt.max_n < kHardCap ? opt.max_n : kHardCap;
  if (g.vertex_count() > cap)
    throw std::invalid_argument(
        "betti_table: n = " + std::to_string(g.vertex_count()) +
        " exceeds the full-table cap " + std::to_string(cap) +
        "; query single supports with multigraded_betti_at or raise the cap");
}

} // namespace

long long BettiTable::at(int i, VertexSet alpha) const {
  auto it = entries_.find({i, alpha.mask});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, VertexSet alpha, long long value) {
  if (value <= 0) throw std::invalid_argument("BettiTable: value must be > 0");
  entries_[{i, alpha.mask}] += value;
}

std::vector<long long> multigraded_betti_at(const Graph& g, VertexSet w,
                                            FieldSpec f) {
  if (!w.subset_of(g.vertices()))
    throw std::invalid_argument("multigraded_betti_at: W out of range");
  int size = w.size();
  if (size < 2) return {};
  std::vector<long long> betti(static_cast<size_t>(size) - 1, 0);
  RestrictedComplex c = restricted_independence_complex(g, w);
  std::vector<long long> dims = reduced_homology_dims(c, f);
  for (int i = 0; i <= size - 2; ++i) {
    int k = size - i - 2;
    if (k < static_cast<int>(dims.size()))
      betti[static_cast<size_t>(i)] = dims[static_cast<size_t>(k)];
  }
  return betti;
}

BettiTable betti_table_serial(const Graph& g, FieldSpec f,
                              const BettiOptions& opt) {
  check_table_cap(g, opt);
  int n = g.vertex_count();
  BettiTable t(n);
  std::vector<Entry> entries;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    betti_entries_for_support(g, s << 1, f, entries);
  for (const Entry& e : entries) t.add(e.i, VertexSet::from_mask(e.alpha), e.value);
  return t;
}

BettiTable betti_table(const Graph& g, FieldSpec f, const BettiOptions& opt) {
  check_table_cap(g, opt);
  int n = g.vertex_count();
  BettiTable t(n);
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<std::vector<Entry>> buckets;
#ifdef _OPENMP
  buckets.resize(static_cast<size_t>(omp_get_max_threads()));
#else
  buckets.resize(1);
#endif
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (std::int64_t s = 0; s < count; ++s) {
#ifdef _OPENMP
    auto& bucket = buckets[static_cast<size_t>(omp_get_thread_num())];
#else
    auto& bucket = buckets[0];
#endif
    betti_entries_for_support(g, static_cast<Mask>(s) << 1, f, bucket);
  }
  // The table is keyed by (i, alpha), so the merge order does not matter.
  for (const auto& bucket : buckets)
    for (const Entry& e : bucket) t.add(e.i, VertexSet::from_mask(e.alpha), e.value);
  return t;
}

GradedRow graded_from_multigraded(const BettiTable& t) {
  GradedRow row;
  for (const auto& [key, value] : t.entries())
    row[{key.first, std::popcount(key.second)}] += value;
  return row;
}

BettiTable closed_form_complete(int m) {
  BettiTable t(m < 0 ? 0 : m);
  if (m < 2) return t;
  Mask all = full_mask(m);
  for (Mask s = all; s != 0; s = (s - 1) & all) {
    int size = std::popcount(s);
    if (size >= 2) t.add(size - 2, VertexSet::from_mask(s), size - 1);
  }
  return t;
}

BettiTable closed_form_multipartite(const PartitionSpec& spec) {
  spec.validate();
  VertexSet support = spec.support();
  int n = 63 - std::countl_zero(support.mask);
  BettiTable t(n);
  if (spec.parts.size() < 2) return t;
  for (Mask s = support.mask; s != 0; s = (s - 1) & support.mask) {
    int size = std::popcount(s);
    if (size < 2) continue;
    int met = 0;
    for (const VertexSet& part : spec.parts)
      if ((part.mask & s) != 0) ++met;
    if (met >= 2) t.add(size - 2, VertexSet::from_mask(s), met - 1);
  }
  return t;
}

int first_syzygy_triple(const Graph& g, VertexSet t) {
  if (t.size() != 3)
    throw std::invalid_argument("first_syzygy_triple: |T| must be 3");
  if (!t.subset_of(g.vertices()))
    throw std::invalid_argument("first_syzygy_triple: T out of range");
  std::vector<int> v = t.vertices();
  int edges = static_cast<int>(g.has_edge(v[0], v[1])) +
              static_cast<int>(g.has_edge(v[0], v[2])) +
              static_cast<int>(g.has_edge(v[1], v[2]));
  // Components of the complement on three vertices are determined by how
  // many of the three pairs are non-edges there.
  int complement_edges = 3 - edges;
  int components = complement_edges == 0 ? 3 : complement_edges == 1 ? 2 : 1;
  return components - 1;
}

} // namespace bettigraph
