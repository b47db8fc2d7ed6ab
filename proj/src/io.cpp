#include "bettigraph/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bettigraph {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::invalid_argument("edge list, line " + std::to_string(line) + ": " +
                              what);
}

} // namespace

EdgeListDocument parse_edge_list(std::string_view text) {
  EdgeListDocument doc;
  bool have_n = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (size_t hash = line.find('#'); hash != std::string::npos) {
      doc.comments.push_back(line.substr(hash));
      line.erase(hash);
    }
    std::istringstream fields(line);
    if (!have_n) {
      int n = 0;
      if (!(fields >> n)) {
        if (fields.eof()) continue; // blank or comment-only line
        parse_fail(line_no, "expected vertex count");
      }
      std::string extra;
      if (fields >> extra) parse_fail(line_no, "trailing text after vertex count");
      if (n < 1 || n > kMaxVertices)
        parse_fail(line_no, "vertex count " + std::to_string(n) +
                                " outside 1.." + std::to_string(kMaxVertices));
      doc.n = n;
      have_n = true;
      continue;
    }
    int u = 0, v = 0;
    if (!(fields >> u)) {
      if (fields.eof()) continue;
      parse_fail(line_no, "malformed edge line");
    }
    if (!(fields >> v)) parse_fail(line_no, "malformed edge line");
    std::string extra;
    if (fields >> extra) parse_fail(line_no, "trailing text after edge");
    if (u < 1 || u > doc.n || v < 1 || v > doc.n)
      parse_fail(line_no, "vertex out of range 1.." + std::to_string(doc.n));
    if (u == v) parse_fail(line_no, "loop at vertex " + std::to_string(u));
    doc.edges.emplace_back(u, v);
  }
  if (!have_n) throw std::invalid_argument("edge list: missing vertex count");
  return doc;
}

std::string serialize_edge_list(const EdgeListDocument& doc) {
  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : doc.edges) edges.insert({std::min(u, v), std::max(u, v)});
  std::ostringstream out;
  out << doc.n << "\n";
  for (auto [u, v] : edges) out << u << " " << v << "\n";
  return out.str();
}

std::string monomial(VertexSet alpha) {
  std::string out;
  for (int v : alpha.vertices()) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string render_graded(const BettiTable& t) {
  GradedRow row = graded_from_multigraded(t);
  if (row.empty()) return "0 (zero ideal)\n";
  int max_i = 0, min_j = 0, max_j = 0;
  bool first = true;
  for (const auto& [key, value] : row) {
    max_i = std::max(max_i, key.first);
    min_j = first ? key.second : std::min(min_j, key.second);
    max_j = std::max(max_j, key.second);
    first = false;
  }
  std::ostringstream out;
  out << "j\\i";
  for (int i = 0; i <= max_i; ++i) out << "\t" << i;
  out << "\n";
  for (int j = min_j; j <= max_j; ++j) {
    out << j;
    for (int i = 0; i <= max_i; ++i) {
      auto it = row.find({i, j});
      out << "\t";
      if (it == row.end())
        out << ".";
      else
        out << it->second;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_multigraded(const BettiTable& t) {
  if (t.empty()) return "0 (zero ideal)\n";
  std::ostringstream out;
  for (const auto& [key, value] : t.entries())
    out << key.first << "\t" << monomial(VertexSet::from_mask(key.second)) << "\t" << value
        << "\n";
  return out.str();
}

} // namespace

nlohmann::json betti_entries_json(const BettiTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : t.entries())
    entries.push_back({{"i", key.first},
                       {"alpha", vertex_list_json(VertexSet::from_mask(key.second))},
                       {"value", value}});
  return entries;
}

std::string render_betti(const BettiTable& t, RenderMode mode,
                         RenderFormat format) {
  if (format == RenderFormat::Table)
    return mode == RenderMode::Graded ? render_graded(t) : render_multigraded(t);
  nlohmann::json doc{{"n", t.ambient_vertices()},
                     {"entries", betti_entries_json(t)}};
  return doc.dump(2) + "\n";
}

nlohmann::json vertex_list_json(VertexSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : s.vertices()) out.push_back(v);
  return out;
}

nlohmann::json certificate_json(const Certificate& c) {
  nlohmann::json parts = nlohmann::json::array();
  for (const VertexSet& p : c.parts) parts.push_back(vertex_list_json(p));
  std::string kind;
  switch (c.kind) {
    case Certificate::Kind::Complete: kind = "complete"; break;
    case Certificate::Kind::Bipartite: kind = "bipartite"; break;
    case Certificate::Kind::Multipartite: kind = "multipartite"; break;
  }
  nlohmann::json out{{"kind", kind}, {"parts", parts}};
  if (c.kind == Certificate::Kind::Multipartite) {
    out["t"] = c.t;
    out["a"] = c.a;
    out["b"] = c.b;
  }
  return out;
}

nlohmann::json scan_witness_json(const ScanWitness& w,
                                 const RelabeledGraph* label_source) {
  VertexSet support = w.support;
  if (label_source != nullptr) support = label_source->to_old(support);
  nlohmann::json out{
      {"kind", w.kind == ScanWitness::Kind::K33 ? "K33" : "K222"},
      {"vertices", vertex_list_json(support)},
      {"certificate", certificate_json(w.certificate)}};
  return out;
}

} // namespace bettigraph
