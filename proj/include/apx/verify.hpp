#pragma once

// The end-to-end theorem suite behind `apx verify`.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "apx/graph.hpp"
#include "apx/io.hpp"

namespace apx {

enum class VerifyLevel { kFast, kFull };

/// "fast" or "full"; throws ParseError otherwise.
VerifyLevel parse_level(const std::string& text);
std::string to_string(VerifyLevel level);

/// Worker count: APX_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_budget();

/// Runs body(0..n-1). With parallel = false, or a budget of one thread, runs
/// in order on the calling thread. The first exception thrown is rethrown.
void parallel_for(std::size_t n, bool parallel, const std::function<void(std::size_t)>& body);

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// First failing instance, empty when all passed.
  std::string witness;
};

struct VerificationReport {
  Graph graph;
  ContractionEdge edge;
  VerifyLevel level = VerifyLevel::kFast;
  std::size_t cell_count = 0;
  BigInt polytope_volume = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Throws EdgeNotInGraph or DisconnectedGraph; every other failure is
/// recorded in the report. The fast level skips balanced circuit rank and
/// the exhaustive matroid check.
VerificationReport verify_all(const Graph& g, const ContractionEdge& e, VerifyLevel level,
                              bool parallel = false);

Json to_json(const VerificationReport& report);

}  // namespace apx
