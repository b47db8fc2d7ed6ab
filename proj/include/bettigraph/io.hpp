#ifndef BETTIGRAPH_IO_HPP
#define BETTIGRAPH_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bettigraph/betti.hpp"
#include "bettigraph/detect.hpp"
#include "bettigraph/graph.hpp"

namespace bettigraph {

/// Parsed edge-list input: a header line with n, then one "u v" line per
/// edge; `#` starts a comment. Comments are kept for echoing.
struct EdgeListDocument {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> comments;

  Graph to_graph() const { return build_graph(n, edges); }
};

// Throws std::invalid_argument naming the offending line.
EdgeListDocument parse_edge_list(std::string_view text);

// Canonical form: header, then the sorted, de-duplicated edge set.
std::string serialize_edge_list(const EdgeListDocument& doc);

// "x1*x4*x5*x6" with ascending indices.
std::string monomial(VertexSet alpha);

enum class RenderMode { Multigraded, Graded };
enum class RenderFormat { Table, Json };

// Text rendering of a Betti table. Graded mode prints the j-by-i table,
// multigraded mode one "i  monomial  value" line per entry. Json renders
// the entries payload embedded into CLI reports ({"n", "entries"}); the
// entries are always multigraded, the single source of truth.
std::string render_betti(const BettiTable& t, RenderMode mode,
                         RenderFormat format);

nlohmann::json betti_entries_json(const BettiTable& t);
nlohmann::json vertex_list_json(VertexSet s);
nlohmann::json certificate_json(const Certificate& c);
nlohmann::json scan_witness_json(const ScanWitness& w,
                                 const RelabeledGraph* label_source = nullptr);

} // namespace bettigraph

#endif
