#include "apx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "apx/cell_analysis.hpp"
#include "apx/errors.hpp"
#include "apx/matroid.hpp"
#include "apx/polytope.hpp"
#include "apx/subdivision.hpp"

namespace apx {

VerifyLevel parse_level(const std::string& text) {
  if (text == "fast") return VerifyLevel::kFast;
  if (text == "full") return VerifyLevel::kFull;
  throw ParseError("level must be fast or full: '" + text + "'");
}

std::string to_string(VerifyLevel level) { return level == VerifyLevel::kFast ? "fast" : "full"; }

std::size_t thread_budget() {
  if (const char* env = std::getenv("APX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, bool parallel, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = parallel ? std::min(thread_budget(), n) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string cell_name(std::size_t index, const Cell& cell) {
  std::string s = "cell " + std::to_string(index) + " {";
  for (std::size_t i = 0; i < cell.points.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(cell.points[i].from) + "," + std::to_string(cell.points[i].to) + ")";
  }
  return s + "}";
}

// Accumulates pass/fail over instances of one check.
class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::string& witness) {
    ++result_.checked;
    if (ok) return;
    ++result_.failures;
    result_.passed = false;
    if (result_.witness.empty()) result_.witness = witness;
  }
  CheckResult done() const { return result_; }

 private:
  CheckResult result_;
};

CheckResult skipped(const std::string& name) {
  CheckResult r;
  r.name = name;
  r.skipped = true;
  return r;
}

struct CellOutcome {
  CellCheck lift;
  std::optional<CellInvariantReport> properties;
  std::optional<SignatureResult> signature;
  std::optional<MorphismReport> morphism;
  BigInt volume = 0;
  std::string error;
};

}  // namespace

VerificationReport verify_all(const Graph& g, const ContractionEdge& e, VerifyLevel level,
                              bool parallel) {
  g.require_edge(e);
  VerificationReport report;
  report.graph = g;
  report.edge = e;
  report.level = level;

  const auto config = PointConfiguration::build(g);
  const auto cells = edge_contraction_subdivision(g, e);
  report.cell_count = cells.size();
  const int dim = g.dimension();
  const bool full = level == VerifyLevel::kFull;

  std::vector<CellOutcome> outcomes(cells.size());
  parallel_for(cells.size(), parallel, [&](std::size_t i) {
    auto& out = outcomes[i];
    out.lift = check_cell(config, e, cells[i]);
    try {
      out.volume = normalized_volume(config.points_of(cells[i].points));
      out.properties = verify_cell_properties(g, e, cells[i]);
      if (out.properties->corank == 1)
        out.signature = signature_of_corank1(cells[i].points, e);
      if (full && cells[i].points.size() - 1 <= kMaxGroundSize)
        out.morphism = morphism_report(cells[i], e, dim);
    } catch (const Error& ex) {
      out.error = ex.what();
    }
  });

  Tally facets("polytope_facets");
  for (const auto& f : enumerate_facets(config))
    facets.record(validate_facet(config, f), "invalid facet certificate");
  report.checks.push_back(facets.done());

  Tally special_edge("special_edge_in_every_cell");
  Tally lift_normal("lift_normal_symmetric_h_zero");
  Tally lower_face("lower_face_certificate");
  Tally properties("cell_subgraph_properties");
  Tally corank("corank_equals_cyclomatic");
  Tally shape("simplicial_iff_tree_circuit_iff_cycle");
  Tally volumes("closed_form_volumes");
  Tally signatures("corank1_signatures");
  Tally morphism("matroid_morphism");
  BigInt total = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& out = outcomes[i];
    const auto name = cell_name(i, cells[i]);
    total += out.volume;
    special_edge.record(out.lift.contains_pair, name);
    lift_normal.record(out.lift.gamma_equal && out.lift.h_zero, name);
    lower_face.record(out.lift.support_values && out.lift.strict_outside && out.lift.full_dimensional,
                      name);
    if (!out.error.empty() || !out.properties) {
      const auto witness = name + ": " + out.error;
      properties.record(false, witness);
      corank.record(false, witness);
      shape.record(false, witness);
      volumes.record(false, witness);
      continue;
    }
    const auto& p = *out.properties;
    properties.record(p.properties_hold(), name);
    corank.record(p.corank_is_cyclomatic, name);
    shape.record(p.simplicial_iff_tree && p.circuit_iff_cycle, name);
    if (p.closed_form_volume) volumes.record(p.volume_matches, name);
    if (out.signature)
      signatures.record(out.signature->computed == out.signature->closed_form &&
                            out.signature->pair_opposite,
                        name);
    if (out.morphism) morphism.record(out.morphism->passed(), name + " " + out.morphism->first_violation);
  }
  report.checks.push_back(special_edge.done());
  report.checks.push_back(lift_normal.done());
  report.checks.push_back(lower_face.done());
  report.checks.push_back(properties.done());
  report.checks.push_back(corank.done());
  report.checks.push_back(shape.done());
  report.checks.push_back(volumes.done());
  report.checks.push_back(signatures.done());
  report.checks.push_back(full ? morphism.done() : skipped("matroid_morphism"));

  report.polytope_volume = normalized_volume(config);
  Tally volume_sum("volume_sum");
  volume_sum.record(total == report.polytope_volume,
                    "cells sum to " + total.str() + ", polytope " + report.polytope_volume.str());
  report.checks.push_back(volume_sum.done());

  Tally facet_corr("facet_correspondence");
  Tally transfer("simpliciality_transfer");
  try {
    const auto corr = facet_correspondence(g, e, cells);
    facet_corr.record(true, "");
    const int contracted_dim = corr.contraction.graph.dimension();
    for (std::size_t i = 0; i < cells.size(); ++i)
      transfer.record(check_simpliciality_transfer(cells[i], dim, corr.facets[corr.image[i]],
                                                   contracted_dim),
                      cell_name(i, cells[i]));
  } catch (const Error& ex) {
    facet_corr.record(false, ex.what());
  }
  report.checks.push_back(facet_corr.done());

  Tally product("product_correspondence");
  try {
    const auto parts = decompose_at_edge(g, e);
    const auto pc = product_correspondence(g, parts, e, cells);
    product.record(pc.image.size() == pc.first.facets.size() * pc.second.facets.size(),
                   "cell count differs from the facet product");
    for (std::size_t i = 0; i < cells.size(); ++i)
      transfer.record(check_simpliciality_transfer(cells[i], dim, pc, i), cell_name(i, cells[i]));
  } catch (const Error& ex) {
    product.record(false, ex.what());
  }
  report.checks.push_back(product.done());
  report.checks.push_back(transfer.done());

  Tally special("special_graphs");
  const auto sg = classify_special_graphs(g, e, cells);
  special.record(sg.holds, to_string(sg.kind) + ": " + std::to_string(sg.violations) + " violating cells");
  report.checks.push_back(special.done());

  if (full) {
    Tally max_rank("max_corank");
    try {
      const auto mc = max_corank(cells, e);
      const int bcr = balanced_circuit_rank(g, e);
      max_rank.record(mc.corank == bcr, "max corank " + std::to_string(mc.corank) +
                                            ", balanced circuit rank " + std::to_string(bcr));
      const auto tree = max_balanced_tree(g, e);
      const auto witness = complete_basis(g, e, build_alternating_basis(g, e, tree));
      const bool found = std::find(cells.begin(), cells.end(), witness) != cells.end();
      max_rank.record(found && subset_corank(witness.points, e) == bcr,
                      "alternating basis completion does not attain the rank");
    } catch (const Error& ex) {
      max_rank.record(false, ex.what());
    }
    report.checks.push_back(max_rank.done());
  } else {
    report.checks.push_back(skipped("max_corank"));
  }

  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::object();
  for (const auto& c : report.checks) {
    Json item = {{"passed", c.passed}, {"checked", c.checked}, {"failures", c.failures}};
    if (c.skipped) item["skipped"] = true;
    if (!c.witness.empty()) item["witness"] = c.witness;
    checks[c.name] = item;
  }
  return {{"graph", to_json(report.graph)},
          {"edge", Json::array({report.edge.k1, report.edge.k2})},
          {"level", to_string(report.level)},
          {"cell_count", report.cell_count},
          {"polytope_nvol", report.polytope_volume.str()},
          {"passed", report.passed()},
          {"checks", checks}};
}

}  // namespace apx
