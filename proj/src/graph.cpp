#include "bettigraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bettigraph {

namespace {

void check_label(int v, int n, const char* what) {
  if (v < 1 || v > n)
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(v) + " out of range 1.." +
                                std::to_string(n));
}

void check_vertex_count(int n, const char* what) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument(std::string(what) + ": vertex count " +
                                std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxVertices));
}

} // namespace

int VertexSet::min_vertex() const {
  return mask == 0 ? 0 : std::countr_zero(mask);
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(size()));
  for (Mask m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1, 0) {
  check_vertex_count(n, "Graph");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 1; v <= n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (Mask m = adj_[static_cast<size_t>(u)] >> u >> 1; m != 0; m &= m - 1)
      out.emplace_back(u, u + 1 + std::countr_zero(m));
  return out;
}

void Graph::add_edge(int u, int v) {
  check_label(u, n_, "add_edge");
  check_label(v, n_, "add_edge");
  if (u == v)
    throw std::invalid_argument("add_edge: loop at vertex " +
                                std::to_string(u));
  adj_[static_cast<size_t>(u)] |= vertex_bit(v);
  adj_[static_cast<size_t>(v)] |= vertex_bit(u);
}

void Graph::check_invariants() const {
  Mask full = full_mask(n_);
  for (int u = 1; u <= n_; ++u) {
    Mask row = adj_[static_cast<size_t>(u)];
    if ((row & ~full) != 0)
      throw std::logic_error("Graph: adjacency row uses bits outside 1..n");
    if ((row >> u) & 1) throw std::logic_error("Graph: loop");
    for (Mask m = row; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      if (!has_edge(v, u)) throw std::logic_error("Graph: asymmetric edge");
    }
  }
}

PartitionSpec PartitionSpec::consecutive(const std::vector<int>& sizes) {
  PartitionSpec spec;
  int next = 1;
  for (int r : sizes) {
    if (r < 1)
      throw std::invalid_argument("PartitionSpec: part size must be >= 1");
    Mask part = 0;
    for (int i = 0; i < r; ++i) part |= vertex_bit(next++);
    spec.parts.push_back(VertexSet::from_mask(part));
  }
  spec.validate();
  return spec;
}

VertexSet PartitionSpec::support() const {
  Mask m = 0;
  for (const VertexSet& p : parts) m |= p.mask;
  return VertexSet::from_mask(m);
}

std::vector<int> PartitionSpec::sizes() const {
  std::vector<int> out;
  out.reserve(parts.size());
  for (const VertexSet& p : parts) out.push_back(p.size());
  return out;
}

void PartitionSpec::validate() const {
  if (parts.empty())
    throw std::invalid_argument("PartitionSpec: no parts");
  Mask seen = 0;
  for (const VertexSet& p : parts) {
    if (p.empty()) throw std::invalid_argument("PartitionSpec: empty part");
    if ((seen & p.mask) != 0)
      throw std::invalid_argument("PartitionSpec: parts overlap");
    seen |= p.mask;
  }
}

VertexSet RelabeledGraph::to_old(VertexSet current) const {
  Mask out = 0;
  for (int v : current.vertices()) out |= vertex_bit(old_label[static_cast<size_t>(v)]);
  return VertexSet::from_mask(out);
}

VertexSet RelabeledGraph::to_new(VertexSet original) const {
  Mask out = 0;
  for (int v = 1; v < static_cast<int>(old_label.size()); ++v)
    if (original.contains(old_label[static_cast<size_t>(v)])) out |= vertex_bit(v);
  return VertexSet::from_mask(out);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complete(int m) {
  Graph g(m);
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty())
    throw std::invalid_argument("complete_multipartite: empty size list");
  PartitionSpec spec = PartitionSpec::consecutive(sizes);
  int n = spec.support().size();
  Graph g(n);
  for (size_t i = 0; i < spec.parts.size(); ++i)
    for (size_t j = i + 1; j < spec.parts.size(); ++j)
      for (int u : spec.parts[i].vertices())
        for (int v : spec.parts[j].vertices()) g.add_edge(u, v);
  return g;
}

RelabeledGraph induced(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices()))
    throw std::invalid_argument("induced: W not within the vertex set");
  std::vector<int> old_label{0};
  for (int v : w.vertices()) old_label.push_back(v);
  int m = w.size();
  if (m == 0) return {Graph{}, std::move(old_label)};
  Graph h(m);
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v)
      if (g.has_edge(old_label[static_cast<size_t>(u)], old_label[static_cast<size_t>(v)]))
        h.add_edge(u, v);
  return {std::move(h), std::move(old_label)};
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph h(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

Graph subdivide(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("subdivide: " + std::to_string(u) + "-" +
                                std::to_string(v) + " is not an edge");
  int n = g.vertex_count();
  check_vertex_count(n + 1, "subdivide");
  Graph h(n + 1);
  for (auto [a, b] : g.edges())
    if (!(a == std::min(u, v) && b == std::max(u, v))) h.add_edge(a, b);
  h.add_edge(u, n + 1);
  h.add_edge(n + 1, v);
  return h;
}

RelabeledGraph smooth(const Graph& g, VertexSet protected_vertices) {
  int n = g.vertex_count();
  std::vector<Mask> adj(static_cast<size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
  Mask alive = full_mask(n);

  for (;;) {
    int z = 0;
    for (int v = 1; v <= n; ++v) {
      if (!((alive >> v) & 1) || protected_vertices.contains(v)) continue;
      if (std::popcount(adj[static_cast<size_t>(v)]) == 2) {
        z = v;
        break;
      }
    }
    if (z == 0) break;
    Mask nb = adj[static_cast<size_t>(z)];
    int x = std::countr_zero(nb);
    int y = std::countr_zero(nb & (nb - 1));
    adj[static_cast<size_t>(x)] &= ~vertex_bit(z);
    adj[static_cast<size_t>(y)] &= ~vertex_bit(z);
    adj[static_cast<size_t>(z)] = 0;
    adj[static_cast<size_t>(x)] |= vertex_bit(y);
    adj[static_cast<size_t>(y)] |= vertex_bit(x);
    alive &= ~vertex_bit(z);
  }

  std::vector<int> old_label{0};
  for (int v = 1; v <= n; ++v)
    if ((alive >> v) & 1) old_label.push_back(v);
  int m = static_cast<int>(old_label.size()) - 1;
  if (m == 0) return {Graph{}, std::move(old_label)};
  Graph h(m);
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v)
      if ((adj[static_cast<size_t>(old_label[static_cast<size_t>(u)])] >>
           old_label[static_cast<size_t>(v)]) & 1)
        h.add_edge(u, v);
  return {std::move(h), std::move(old_label)};
}

} // namespace bettigraph
