#include "arrowlab/io.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "arrowlab/errors.hpp"

namespace arrowlab {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) parsed.fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!parsed.fields.empty() && parsed.fields[0].front() != '#') out.push_back(parsed);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::size_t number(const Line& line, std::size_t field) {
  if (field >= line.fields.size()) throw ParseError("missing field", line.number, 1);
  std::string_view s = line.fields[field];
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected a non-negative integer, found '" + std::string(s) + "'",
                     line.number, field + 1);
  }
  return value;
}

void expect_fields(const Line& line, std::size_t count) {
  if (line.fields.size() != count) {
    throw ParseError("expected " + std::to_string(count) + " fields on '" +
                         std::string(line.fields[0]) + "' line",
                     line.number, 1);
  }
}

bool looks_like_json(std::string_view text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  return i != std::string_view::npos && text[i] == '{';
}

Graph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON graph: ") + e.what(), 1, e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
      !doc["n"].is_number_unsigned() || !doc["edges"].is_array()) {
    throw ParseError("JSON graph needs an unsigned 'n' and an 'edges' array", 1, 1);
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned()) {
      throw ParseError("JSON edge must be a pair of unsigned integers", 1, 1);
    }
    const auto u = pair[0].get<Vertex>();
    const auto v = pair[1].get<Vertex>();
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

MarkedGraph parse_text(std::string_view text, bool keep_marks) {
  std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError("missing 'p graph' header", 1, 1);
  const Line& header = lines[0];
  if (header.fields[0] != "p" || header.fields.size() != 4 || header.fields[1] != "graph") {
    throw ParseError("expected 'p graph <n> <m>' header", header.number, 1);
  }
  const std::size_t n = number(header, 2);
  const std::size_t m = number(header, 3);

  std::vector<Edge> edges;
  struct EdgeMark {
    std::string label;
    Vertex a, b;
    std::size_t line;
  };
  struct VertexMark {
    std::string label;
    Vertex v;
    std::size_t line;
  };
  std::vector<EdgeMark> edge_marks;
  std::vector<VertexMark> vertex_marks;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::string_view kind = line.fields[0];
    if (kind == "e") {
      expect_fields(line, 3);
      const auto u = static_cast<Vertex>(number(line, 1));
      const auto v = static_cast<Vertex>(number(line, 2));
      if (u == v) throw ParseError("self-loop", line.number, 1);
      if (u >= n || v >= n) throw ParseError("endpoint out of range", line.number, 1);
      edges.emplace_back(u, v);
    } else if (kind == "me") {
      expect_fields(line, 4);
      edge_marks.push_back({std::string(line.fields[1]), static_cast<Vertex>(number(line, 2)),
                            static_cast<Vertex>(number(line, 3)), line.number});
    } else if (kind == "mv") {
      expect_fields(line, 3);
      vertex_marks.push_back(
          {std::string(line.fields[1]), static_cast<Vertex>(number(line, 2)), line.number});
    } else if (kind == "p") {
      throw ParseError("duplicate header", line.number, 1);
    } else {
      throw ParseError("unknown line type '" + std::string(kind) + "'", line.number, 1);
    }
  }
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     header.number, 1);
  }
  Graph g;
  try {
    g = Graph(n, edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), header.number, 1);
  }
  MarkedGraph out(std::move(g));
  if (!keep_marks) return out;
  for (const auto& mark : edge_marks) {
    if (out.has_edge_mark(mark.label)) throw ParseError("duplicate edge mark", mark.line, 2);
    if (!out.graph().adjacent(mark.a, mark.b)) {
      throw ParseError("marked edge '" + mark.label + "' is not an edge", mark.line, 3);
    }
    out.mark_edge(mark.label, mark.a, mark.b);
  }
  for (const auto& mark : vertex_marks) {
    if (out.has_vertex_mark(mark.label)) throw ParseError("duplicate vertex mark", mark.line, 2);
    if (mark.v >= n) throw ParseError("marked vertex out of range", mark.line, 3);
    out.mark_vertex(mark.label, mark.v);
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  if (looks_like_json(text)) return parse_json(text);
  return parse_text(text, false).graph();
}

MarkedGraph parse_marked_graph(std::string_view text) {
  if (looks_like_json(text)) return MarkedGraph(parse_json(text));
  return parse_text(text, true);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string write_marked_graph(const MarkedGraph& m) {
  std::ostringstream out;
  out << write_graph(m.graph());
  for (const auto& [label, e] : m.marked_edges()) {
    out << "me " << label << ' ' << e.first << ' ' << e.second << '\n';
  }
  for (const auto& [label, v] : m.marked_vertices()) out << "mv " << label << ' ' << v << '\n';
  return out.str();
}

std::string write_graph_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump();
}

PartialColoring parse_partial_coloring(std::string_view text, std::size_t edge_count) {
  PartialColoring out(edge_count);
  for (const Line& line : split_lines(text)) {
    if (line.fields[0] != "c") {
      throw ParseError("unknown line type '" + std::string(line.fields[0]) + "'", line.number, 1);
    }
    expect_fields(line, 3);
    const std::size_t index = number(line, 1);
    const std::size_t color = number(line, 2);
    if (index >= edge_count) throw ParseError("edge index out of range", line.number, 2);
    if (color > 1) throw ParseError("colour must be 0 or 1", line.number, 3);
    if (out[index]) throw ParseError("edge coloured twice", line.number, 2);
    out[index] = static_cast<Color>(color);
  }
  return out;
}

EdgeColoring parse_coloring(std::string_view text, std::size_t edge_count) {
  PartialColoring partial = parse_partial_coloring(text, edge_count);
  EdgeColoring out(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) {
    if (!partial[i]) throw InvalidArgument("colouring misses edge " + std::to_string(i));
    out[i] = *partial[i];
  }
  return out;
}

std::string write_coloring(const EdgeColoring& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += "c " + std::to_string(i) + ' ' + (c[i] == Color::kRed ? '0' : '1') + '\n';
  }
  return out;
}

std::string coloring_string(const EdgeColoring& c) {
  std::string out;
  out.reserve(c.size());
  for (Color x : c) out.push_back(x == Color::kRed ? 'R' : 'B');
  return out;
}

}  // namespace arrowlab
