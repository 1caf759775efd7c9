#include "apx/io.hpp"

#include <fstream>
#include <sstream>

#include "apx/errors.hpp"

namespace apx {

namespace {

Graph graph_from_pairs(const std::vector<std::pair<long long, long long>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
      throw ParseError("node label out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InvalidGraph("loop at node " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (edges.empty()) throw ParseError("graph has no edges");
  return Graph::from_edges(edges);
}

}  // namespace

Graph parse_graph_text(std::istream& in) {
  std::vector<std::pair<long long, long long>> pairs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) {
      ls.clear();
      std::string rest;
      if (ls >> rest) throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
      continue;
    }
    std::string extra;
    if (!(ls >> v) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    pairs.emplace_back(u, v);
  }
  return graph_from_pairs(pairs);
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_text(in);
}

Graph parse_graph_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw ParseError("expected {\"edges\": [[u, v], ...]}");
  std::vector<std::pair<long long, long long>> pairs;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError("edge entries must be [u, v] integer pairs");
    pairs.emplace_back(item[0].get<long long>(), item[1].get<long long>());
  }
  return graph_from_pairs(pairs);
}

Graph parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

ContractionEdge parse_edge_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("edge must be K1,K2: '" + text + "'");
  const auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
      throw ParseError("edge must be K1,K2: '" + text + "'");
    return std::stoi(s);
  };
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const ExactVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const DirectedEdge& d) { return Json::array({d.from, d.to}); }

Json to_json(const std::vector<DirectedEdge>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(to_json(d));
  return out;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  return {{"nodes", g.node_count()}, {"edges", edges}};
}

Json to_json(const FacetCertificate& f) {
  return {{"normal", to_json(f.normal)}, {"support", to_json(f.support)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string directed_dot(const std::vector<DirectedEdge>& edges, const ContractionEdge& e,
                         int node_count, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  node [shape=circle];\n";
  for (int v = 0; v < node_count; ++v) out << "  " << v << ";\n";
  for (const auto& d : edges) {
    out << "  " << d.from << " -> " << d.to;
    if (e.matches(d)) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string undirected_dot(const std::vector<Edge>& edges, const ContractionEdge& e,
                           int node_count, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n  node [shape=circle];\n";
  for (int v = 0; v < node_count; ++v) out << "  " << v << ";\n";
  for (const auto& edge : edges) {
    out << "  " << edge.u << " -- " << edge.v;
    if (e.matches(edge)) out << " [color=\"red:red\", penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace apx
