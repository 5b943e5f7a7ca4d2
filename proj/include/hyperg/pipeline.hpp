#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperg/expectation.hpp"
#include "hyperg/group.hpp"
#include "hyperg/json_io.hpp"

namespace hyperg {

/// Exit codes shared by run_pipeline and the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitPreconditionFailed = 3;

/// A fully resolved instance: a validated group, a validated expectation,
/// and the knobs every randomized check consumes.
struct InstanceSpec {
  std::string name;
  GroupTable group;
  std::vector<std::string> element_names;  // optional, for labeling only
  ConditionalExpectation expectation;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  int samples = 256;
  std::vector<std::string> checks;  // stage names to require; empty = all
};

/// Stage names accepted in InstanceSpec::checks, in execution order.
std::vector<std::string> pipeline_stage_names();

struct PipelineResult {
  int exit_code = kExitPass;
  Json report;
};

/**
 * Runs the full verification pipeline: expectation gates, construction,
 * hypergroup axioms (primal and dual), the Haar cross-check, representation
 * axioms, the complete-positivity certificate and the submultiplicativity
 * report. The JSON report is deterministic for a fixed spec and seed
 * (no timings, fixed key order). Exit code 0 only when every requested stage
 * passes; 3 when a construction gate fails (the report names the stage).
 */
PipelineResult run_pipeline(const InstanceSpec& spec);

}  // namespace hyperg
