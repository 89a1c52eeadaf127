#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace banach_ortho {

// One property of a verification suite. Every check inside a property is
// normalized to a violation ratio: measured quantity divided by its bound
// (or bound divided by measured floor); a trial fails when the ratio
// exceeds 1, and max_violation records the worst ratio seen.
struct PropertyResult {
  std::string id;
  int trials = 0;
  int failures = 0;
  double max_violation = 0.0;
  nlohmann::json counterexample;  // first failing instance, null otherwise
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyResult> properties;
  int total_failures = 0;
};

// Suites: basic, symmetry, direction, preserver, hilbert, all.
const std::vector<std::string>& suite_names();

// Runs the named suite. `trials` is the per-property instance count; a few
// properties pin smaller counts (noted in their ids' documentation).
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, uint64_t seed, int trials);

// Deterministic serialization: wall time is deliberately not measured here
// so reports are byte-identical for identical inputs ("wall_time_ms": null).
nlohmann::json suite_report_to_json(const SuiteReport& report);

}  // namespace banach_ortho
