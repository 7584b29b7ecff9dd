#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "slit/step_set.hpp"

namespace slit {

// Parameters of a cross-validation sweep. Everything is deterministic given
// the seed; random weight sets are derived from it per (alpha, beta).
struct SweepConfig {
  int max_alpha = 2;
  int max_beta = 2;
  int max_w = 4;
  bool random_weights = false;
  std::uint64_t seed = 0;
  int random_sets = 3;
  BigRational t0 = BigRational(BigInt(1), BigInt(10));
  double numeric_tolerance = 1e-8;
  int closed_form_max_w = 4;
  // Test hook: negates one skew-route value so failure reporting and the
  // nonzero exit path can be exercised end to end.
  bool inject_fault = false;
};

struct SweepFailure {
  std::string check;
  int alpha = 0, beta = 0, w = 0, u = 0, v = 0;
  int weight_set = 0;  // 0 = unit, 1.. = seeded random
  std::string detail;
};

struct SweepReport {
  SweepConfig config;
  long route_instances = 0;
  long strip_instances = 0;
  long linear_system_instances = 0;
  long numeric_instances = 0;
  long closed_form_instances = 0;
  long degenerate_skipped = 0;
  double max_rel_error = 0.0;
  std::vector<SweepFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Unit weights followed by `count` seeded random positive rational weight
// sets (numerators and denominators in [1, 5]).
std::vector<WeightedStepSet> seeded_weight_sets(int alpha, int beta, std::uint64_t seed,
                                                int count);

// Runs route equivalence, the strip-expansion cross-check, the linear-system
// certificate, and the numeric root-based validation over the configured
// grid. Deterministic given the config.
SweepReport run_verification_sweep(const SweepConfig& config);

nlohmann::json sweep_report_to_json(const SweepReport& report);
std::string sweep_summary(const SweepReport& report);

}  // namespace slit
