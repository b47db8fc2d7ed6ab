#include "bettigraph/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bettigraph/betti.hpp"
#include "bettigraph/detect.hpp"
#include "bettigraph/field.hpp"
#include "bettigraph/graph.hpp"
#include "bettigraph/io.hpp"

namespace bettigraph {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(flag) + ": bad entry '" + item +
                                  "'");
    }
  }
  if (out.empty())
    throw std::invalid_argument(std::string(flag) + ": empty list");
  return out;
}

VertexSet parse_vertex_set(const std::string& text, const char* flag) {
  VertexSet s;
  for (int v : parse_int_list(text, flag)) {
    if (v < 1 || v > kMaxVertices)
      throw std::invalid_argument(std::string(flag) + ": vertex " +
                                  std::to_string(v) + " outside 1.." +
                                  std::to_string(kMaxVertices));
    s.mask |= vertex_bit(v);
  }
  return s;
}

Graph load_graph(const std::string& input, std::istream& in) {
  std::string text;
  if (input == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(input);
    if (!file) throw std::invalid_argument("cannot open input '" + input + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return parse_edge_list(text).to_graph();
}

struct ReportBuilder {
  nlohmann::json doc;

  ReportBuilder(const std::string& command, FieldSpec field, int n) {
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["field"] = field.characteristic;
    doc["n"] = n;
  }

  void emit(std::ostream& out) const { out << doc.dump(2) << "\n"; }
};

std::string vertex_csv(VertexSet s) {
  std::string out;
  for (int v : s.vertices()) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

std::string describe_certificate(const Certificate& c) {
  std::ostringstream out;
  switch (c.kind) {
    case Certificate::Kind::Complete:
      out << "K" << c.parts[0].size() << " on {";
      break;
    case Certificate::Kind::Bipartite:
      out << "K" << c.parts[0].size() << "," << c.parts[1].size() << " on {";
      break;
    case Certificate::Kind::Multipartite: {
      out << "K";
      std::vector<int> sizes = c.block_sizes();
      for (size_t i = 0; i < sizes.size(); ++i)
        out << (i ? "," : "") << sizes[i];
      out << " (t=" << c.t << ", a=" << c.a << ", b=" << c.b << ") on {";
      break;
    }
  }
  bool first_part = true;
  for (const VertexSet& p : c.parts) {
    if (!first_part) out << " | ";
    first_part = false;
    bool first = true;
    for (int v : p.vertices()) {
      if (!first) out << ",";
      first = false;
      out << v;
    }
  }
  out << "}";
  return out.str();
}

int report_detection(const DetectionResult& res, const std::string& command,
                     FieldSpec field, int n, RenderFormat format,
                     std::ostream& out) {
  if (format == RenderFormat::Json) {
    ReportBuilder report(command, field, n);
    report.doc["verdict"] = res.verdict;
    if (res.certificate) {
      report.doc["witnesses"] = nlohmann::json::array();
      report.doc["witnesses"].push_back(certificate_json(*res.certificate));
    }
    if (res.failing_degree)
      report.doc["failing_degree"] = vertex_list_json(*res.failing_degree);
    report.emit(out);
  } else {
    out << "verdict: " << (res.verdict ? "true" : "false") << "\n";
    if (res.certificate)
      out << "certificate: " << describe_certificate(*res.certificate) << "\n";
    if (res.failing_degree)
      out << "failing degree: " << monomial(*res.failing_degree) << "\n";
  }
  return res.verdict ? kExitOk : kExitNegative;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err, std::istream& in) {
  CLI::App app{"Multigraded Betti numbers of graph edge ideals and "
               "syzygy-based subgraph detection"};
  app.fallthrough();

  std::string input = "-";
  std::int64_t field_value = 2;
  std::string format_name = "table";
  int max_n = 16;
  app.add_option("--input", input, "edge-list file, or - for stdin");
  app.add_option("--field", field_value,
                 "coefficient field characteristic: 0 (rationals) or a prime");
  app.add_option("--format", format_name, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--max-n", max_n, "cap for full-table and scan sweeps");

  auto* cmd_betti = app.add_subcommand("betti", "full Betti table");
  std::string mode_name = "graded";
  cmd_betti->add_option("--mode", mode_name, "table layout")
      ->check(CLI::IsMember({"graded", "multigraded"}));

  auto* cmd_betti_at =
      app.add_subcommand("betti-at", "Betti numbers at one multidegree");
  std::string support_arg;
  cmd_betti_at->add_option("--support", support_arg, "vertex list, e.g. 1,4,5")
      ->required();

  auto* cmd_detect_km =
      app.add_subcommand("detect-km", "first-syzygy K_m detector");
  std::string vertices_arg;
  cmd_detect_km->add_option("--vertices", vertices_arg, "clique vertex list")
      ->required();

  auto* cmd_detect_krs =
      app.add_subcommand("detect-krs", "first-syzygy K_{r,s} detector");
  std::string x_arg, y_arg;
  cmd_detect_krs->add_option("--x", x_arg, "X side vertex list")->required();
  cmd_detect_krs->add_option("--y", y_arg, "Y side vertex list")->required();

  auto* cmd_scan_k33 =
      app.add_subcommand("scan-k33", "K_{3,3} / K_{2,2,2} sweep over 6-subsets");

  auto* cmd_scan_kuratowski = app.add_subcommand(
      "scan-kuratowski", "smooth, then scan for K_5 and K_{3,3}");

  auto* cmd_smooth =
      app.add_subcommand("smooth", "suppress degree-2 vertices");
  std::string protect_arg;
  cmd_smooth->add_option("--protect", protect_arg,
                         "vertices exempt from smoothing");

  auto* cmd_oracle =
      app.add_subcommand("oracle", "brute-force containment oracles");
  std::string oracle_kind;
  std::string at_arg;
  std::string sizes_arg;
  cmd_oracle->add_option("--kind", oracle_kind, "km or multipartite")
      ->required()
      ->check(CLI::IsMember({"km", "multipartite"}));
  cmd_oracle->add_option("--at", at_arg, "vertex list")->required();
  cmd_oracle->add_option("--sizes", sizes_arg, "part sizes (multipartite)");

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitError;
  }

  try {
    FieldSpec field = FieldSpec::parse(field_value);
    RenderFormat format =
        format_name == "json" ? RenderFormat::Json : RenderFormat::Table;
    Graph g = load_graph(input, in);
    int n = g.vertex_count();

    if (cmd_betti->parsed()) {
      BettiTable t = betti_table(g, field, BettiOptions{max_n});
      if (format == RenderFormat::Json) {
        ReportBuilder report("betti", field, n);
        report.doc["entries"] = betti_entries_json(t);
        report.emit(out);
      } else {
        RenderMode mode = mode_name == "multigraded" ? RenderMode::Multigraded
                                                     : RenderMode::Graded;
        out << render_betti(t, mode, RenderFormat::Table);
      }
      return kExitOk;
    }

    if (cmd_betti_at->parsed()) {
      VertexSet w = parse_vertex_set(support_arg, "--support");
      std::vector<long long> betti = multigraded_betti_at(g, w, field);
      BettiTable t(n);
      for (size_t i = 0; i < betti.size(); ++i)
        if (betti[i] != 0) t.add(static_cast<int>(i), w, betti[i]);
      if (format == RenderFormat::Json) {
        ReportBuilder report("betti-at", field, n);
        report.doc["entries"] = betti_entries_json(t);
        report.emit(out);
      } else {
        out << render_betti(t, RenderMode::Multigraded, RenderFormat::Table);
      }
      return kExitOk;
    }

    if (cmd_detect_km->parsed()) {
      VertexSet s = parse_vertex_set(vertices_arg, "--vertices");
      DetectionResult res = detect_km_syzygy(g, s);
      return report_detection(res, "detect-km", field, n, format, out);
    }

    if (cmd_detect_krs->parsed()) {
      VertexSet x = parse_vertex_set(x_arg, "--x");
      VertexSet y = parse_vertex_set(y_arg, "--y");
      DetectionResult res = detect_krs_syzygy(g, x, y);
      return report_detection(res, "detect-krs", field, n, format, out);
    }

    if (cmd_scan_k33->parsed()) {
      if (n > max_n)
        throw std::invalid_argument("scan-k33: n exceeds --max-n " +
                                    std::to_string(max_n));
      std::vector<ScanWitness> witnesses = k33_k222_scan(g);
      if (format == RenderFormat::Json) {
        ReportBuilder report("scan-k33", field, n);
        report.doc["witnesses"] = nlohmann::json::array();
        for (const ScanWitness& w : witnesses)
          report.doc["witnesses"].push_back(scan_witness_json(w));
        report.emit(out);
      } else {
        for (const ScanWitness& w : witnesses)
          out << "witness: W={" << vertex_csv(w.support) << "} kind="
              << (w.kind == ScanWitness::Kind::K33 ? "K33" : "K222") << "\n";
        if (witnesses.empty()) out << "no witness\n";
      }
      return witnesses.empty() ? kExitNegative : kExitOk;
    }

    if (cmd_scan_kuratowski->parsed()) {
      KuratowskiReport report = kuratowski_desk_scan(g, max_n);
      bool found = !report.k5.empty() || !report.k33.empty();
      if (format == RenderFormat::Json) {
        ReportBuilder json_report("scan-kuratowski", field, n);
        json_report.doc["smoothed_n"] = report.smoothed.graph.vertex_count();
        json_report.doc["witnesses"] = nlohmann::json::array();
        for (const VertexSet& s : report.k5)
          json_report.doc["witnesses"].push_back(
              {{"kind", "K5"},
               {"vertices", vertex_list_json(report.smoothed.to_old(s))}});
        for (const ScanWitness& w : report.k33)
          json_report.doc["witnesses"].push_back(
              scan_witness_json(w, &report.smoothed));
        json_report.emit(out);
      } else {
        out << "smoothed graph: " << report.smoothed.graph.vertex_count()
            << " vertices, " << report.smoothed.graph.edge_count()
            << " edges\n";
        for (const VertexSet& s : report.k5)
          out << "witness: K5 on {" << vertex_csv(report.smoothed.to_old(s))
              << "}\n";
        for (const ScanWitness& w : report.k33)
          out << "witness: K33 on {"
              << vertex_csv(report.smoothed.to_old(w.support)) << "}\n";
        if (!found) out << "no witness\n";
      }
      return found ? kExitOk : kExitNegative;
    }

    if (cmd_smooth->parsed()) {
      VertexSet protect;
      if (!protect_arg.empty())
        protect = parse_vertex_set(protect_arg, "--protect");
      RelabeledGraph smoothed = smooth(g, protect);
      if (format == RenderFormat::Json) {
        ReportBuilder report("smooth", field, n);
        report.doc["smoothed_n"] = smoothed.graph.vertex_count();
        report.doc["edges"] = nlohmann::json::array();
        for (auto [u, v] : smoothed.graph.edges())
          report.doc["edges"].push_back({u, v});
        report.doc["old_labels"] = nlohmann::json::array();
        for (int v = 1; v <= smoothed.graph.vertex_count(); ++v)
          report.doc["old_labels"].push_back(smoothed.old_label[static_cast<size_t>(v)]);
        report.emit(out);
      } else {
        EdgeListDocument doc{smoothed.graph.vertex_count(),
                             smoothed.graph.edges(),
                             {}};
        out << serialize_edge_list(doc);
        for (int v = 1; v <= smoothed.graph.vertex_count(); ++v)
          out << "# vertex " << v << " was "
              << smoothed.old_label[static_cast<size_t>(v)] << "\n";
      }
      return kExitOk;
    }

    if (cmd_oracle->parsed()) {
      VertexSet at = parse_vertex_set(at_arg, "--at");
      if (oracle_kind == "km") {
        bool found = oracle_contains_km_at(g, at);
        if (format == RenderFormat::Json) {
          ReportBuilder report("oracle", field, n);
          report.doc["verdict"] = found;
          report.emit(out);
        } else {
          out << "verdict: " << (found ? "true" : "false") << "\n";
        }
        return found ? kExitOk : kExitNegative;
      }
      if (sizes_arg.empty())
        throw std::invalid_argument("oracle: --sizes required for multipartite");
      std::vector<int> sizes = parse_int_list(sizes_arg, "--sizes");
      auto partition = oracle_contains_multipartite_at(g, at, sizes);
      if (format == RenderFormat::Json) {
        ReportBuilder report("oracle", field, n);
        report.doc["verdict"] = partition.has_value();
        if (partition) {
          report.doc["witnesses"] = nlohmann::json::array();
          nlohmann::json parts = nlohmann::json::array();
          for (const VertexSet& p : *partition)
            parts.push_back(vertex_list_json(p));
          report.doc["witnesses"].push_back({{"kind", "partition"},
                                             {"parts", parts}});
        }
        report.emit(out);
      } else {
        out << "verdict: " << (partition ? "true" : "false") << "\n";
        if (partition) {
          out << "partition:";
          for (const VertexSet& p : *partition)
            out << " {" << vertex_csv(p) << "}";
          out << "\n";
        }
      }
      return partition ? kExitOk : kExitNegative;
    }

    err << "unknown subcommand\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

} // namespace bettigraph
