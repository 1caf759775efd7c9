#pragma once

// Graph ingestion, JSON serialization of results, and DOT export.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "apx/exactlin.hpp"
#include "apx/graph.hpp"
#include "apx/polytope.hpp"
#include "apx/subdivision.hpp"

namespace apx {

/// Object keys come out sorted, so equal values serialize identically.
using Json = nlohmann::json;

/// One "u v" pair per line. Blank lines and text after '#' are ignored.
/// Throws ParseError (malformed lines) or InvalidGraph (loops, repeats).
Graph parse_graph_text(std::istream& in);
Graph parse_graph_text(const std::string& text);
/// {"edges": [[u, v], ...]}; throws ParseError or InvalidGraph.
Graph parse_graph_json(const std::string& text);
/// JSON when the first non-blank character is '{', text otherwise.
Graph parse_graph(const std::string& text);
/// Throws ParseError when the file cannot be read.
Graph read_graph_file(const std::string& path);

/// "K1,K2" with non-negative integers; throws ParseError.
ContractionEdge parse_edge_arg(const std::string& text);

Json to_json(const Rational& q);
Json to_json(const ExactVector& v);
Json to_json(const DirectedEdge& d);
Json to_json(const std::vector<DirectedEdge>& ds);
Json to_json(const Graph& g);
Json to_json(const FacetCertificate& f);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

/// Directed cell subgraph on nodes 0..node_count-1; the contracted pair is
/// drawn as a red 2-cycle.
std::string directed_dot(const std::vector<DirectedEdge>& edges, const ContractionEdge& e,
                         int node_count, const std::string& name = "cell");
/// Undirected subgraph with the contracted edge drawn doubled in red.
std::string undirected_dot(const std::vector<Edge>& edges, const ContractionEdge& e,
                           int node_count, const std::string& name = "cell");

}  // namespace apx
