#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "apx/cell_analysis.hpp"
#include "apx/errors.hpp"
#include "apx/io.hpp"
#include "apx/polytope.hpp"
#include "apx/subdivision.hpp"
#include "apx/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::string input;
  std::string edge;
  std::string json_path;
  std::string dot_dir;
  std::string method = "subdivision";
  std::string level = "fast";
  bool parallel = false;
};

void emit(const apx::Json& j, const std::string& path) {
  const auto text = apx::dump(j);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw apx::ParseError("cannot write " + path);
  out << text;
}

int cmd_facets(const RunConfig& cfg) {
  const auto g = apx::read_graph_file(cfg.input);
  const auto config = apx::PointConfiguration::build(g);
  const auto facets = apx::enumerate_facets(config);
  apx::Json list = apx::Json::array();
  for (const auto& f : facets) list.push_back(apx::to_json(f));
  emit({{"graph", apx::to_json(g)}, {"count", facets.size()}, {"facets", list}}, cfg.json_path);
  return kOk;
}

int cmd_subdivide(const RunConfig& cfg) {
  const auto g = apx::read_graph_file(cfg.input);
  const auto e = apx::parse_edge_arg(cfg.edge);
  const auto cells = apx::edge_contraction_subdivision(g, e);
  const auto config = apx::PointConfiguration::build(g);
  const auto corr = apx::facet_correspondence(g, e, cells);

  apx::Json list = apx::Json::array();
  apx::BigInt total = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const auto vol = apx::normalized_volume(config.points_of(c.points));
    total += vol;
    list.push_back({{"points", apx::to_json(c.points)},
                    {"gamma", apx::to_json(c.gamma)},
                    {"h", apx::to_json(c.h)},
                    {"corank", apx::subset_corank(c.points, e)},
                    {"simplicial", apx::is_simplicial(c, g.dimension())},
                    {"nvol", vol.str()},
                    {"facet_image", apx::to_json(corr.facets[corr.image[i]])}});
  }
  emit({{"graph", apx::to_json(g)},
        {"edge", apx::Json::array({e.k1, e.k2})},
        {"contracted_graph", apx::to_json(corr.contraction.graph)},
        {"cell_count", cells.size()},
        {"total_nvol", total.str()},
        {"cells", list}},
       cfg.json_path);

  if (!cfg.dot_dir.empty()) {
    std::filesystem::create_directories(cfg.dot_dir);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto name = "cell_" + std::to_string(i);
      std::ofstream out(std::filesystem::path(cfg.dot_dir) / (name + ".dot"));
      if (!out) throw apx::ParseError("cannot write into " + cfg.dot_dir);
      out << apx::directed_dot(apx::cell_subgraphs(cells[i].points).directed, e, g.node_count(), name);
    }
  }
  return kOk;
}

int cmd_volume(const RunConfig& cfg) {
  const auto g = apx::read_graph_file(cfg.input);
  const auto config = apx::PointConfiguration::build(g);
  apx::BigInt vol = 0;
  apx::Json j = {{"graph", apx::to_json(g)}, {"method", cfg.method}};
  if (cfg.method == "triangulation") {
    vol = apx::normalized_volume(config);
  } else {
    // Sum over the cells of the subdivision for the given (or first) edge.
    const auto e = cfg.edge.empty() ? apx::ContractionEdge{g.edges().front().u, g.edges().front().v}
                                    : apx::parse_edge_arg(cfg.edge);
    for (const auto& c : apx::edge_contraction_subdivision(g, e))
      vol += apx::normalized_volume(config.points_of(c.points));
    j["edge"] = apx::Json::array({e.k1, e.k2});
  }
  j["nvol"] = vol.str();
  emit(j, cfg.json_path);
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto g = apx::read_graph_file(cfg.input);
  const auto e = apx::parse_edge_arg(cfg.edge);
  const auto level = apx::parse_level(cfg.level);
  const auto report = apx::verify_all(g, e, level, cfg.parallel);
  emit(apx::to_json(report), cfg.json_path);
  if (!report.passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) std::cerr << "FAILED " << c.name << ": " << c.witness << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge contraction subdivisions of adjacency polytopes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* facets = app.add_subcommand("facets", "Enumerate facets of the adjacency polytope");
  facets->add_option("file", cfg.input, "Graph file")->required();
  facets->add_option("--json", cfg.json_path, "Write JSON here instead of stdout");

  auto* subdivide = app.add_subcommand("subdivide", "Edge contraction subdivision report");
  subdivide->add_option("file", cfg.input, "Graph file")->required();
  subdivide->add_option("--edge", cfg.edge, "Contracted edge K1,K2")->required();
  subdivide->add_option("--json", cfg.json_path, "Write JSON here instead of stdout");
  subdivide->add_option("--dot", cfg.dot_dir, "Directory for one DOT file per cell");

  auto* volume = app.add_subcommand("volume", "Normalized volume of the adjacency polytope");
  volume->add_option("file", cfg.input, "Graph file")->required();
  volume->add_option("--method", cfg.method, "subdivision or triangulation")
      ->check(CLI::IsMember({"subdivision", "triangulation"}));
  volume->add_option("--edge", cfg.edge, "Edge for the subdivision method (default: first edge)");
  volume->add_option("--json", cfg.json_path, "Write JSON here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run the full theorem suite");
  verify->add_option("file", cfg.input, "Graph file")->required();
  verify->add_option("--edge", cfg.edge, "Contracted edge K1,K2")->required();
  verify->add_option("--level", cfg.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_flag("--parallel", cfg.parallel, "Check cells on several threads (APX_THREADS caps)");
  verify->add_option("--json", cfg.json_path, "Write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kInputError;
  }

  try {
    if (*facets) return cmd_facets(cfg);
    if (*subdivide) return cmd_subdivide(cfg);
    if (*volume) return cmd_volume(cfg);
    return cmd_verify(cfg);
  } catch (const apx::ParseError& ex) {
    std::cerr << ex.what() << "\n";
    return kInputError;
  } catch (const apx::InvalidGraph& ex) {
    std::cerr << ex.what() << "\n";
    return kInputError;
  } catch (const apx::EdgeNotInGraph& ex) {
    std::cerr << ex.what() << "\n";
    return kInputError;
  } catch (const apx::DisconnectedGraph& ex) {
    std::cerr << ex.what() << "\n";
    return kInputError;
  } catch (const apx::Error& ex) {
    std::cerr << ex.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kInputError;
  }
}
