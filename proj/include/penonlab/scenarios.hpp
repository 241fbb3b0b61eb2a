#pragma once

// Scenario runner binding the modules into the named verifications, with
// machine-readable reports and stable exit codes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "penonlab/glob.hpp"
#include "penonlab/report.hpp"

namespace penonlab::verify {

struct RunConfig {
  int K = 5;                     // symmetry-candidate window
  std::uint64_t seed = 1729;     // randomized checks
  int pasting_cap = 7;           // pasting oracle assertion cap (nodes)
  int pasting_universe_cap = 7;  // closure intermediates cap
  int braid_pairs = 500;
  int braid_max_strands = 4;
  int braid_max_len = 12;
  std::optional<glob::Mode> mode_override;
  std::optional<glob::Presentation> input;  // replaces the built-in D
};

// Fixed execution and report order.
extern const std::vector<std::string> kScenarioNames;

Report run_scenario(const std::string& name, const RunConfig& config);
Report run_all(const RunConfig& config);

// 0: all checks pass; 1: a mathematical check failed (witness attached);
// 2: input or configuration error.
int exit_code(const Report& r);

}  // namespace penonlab::verify
