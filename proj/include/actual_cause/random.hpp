#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "actual_cause/formula.hpp"
#include "actual_cause/model.hpp"

namespace actual_cause {

struct RandomModelParams {
  std::size_t endogenous = 4;
  /// Endogenous ranges have between 2 and max_range values.
  std::size_t max_range = 3;
  std::size_t max_parents = 2;
  std::size_t exogenous = 1;
};

/// Generates a valid model from `seed`. Variables X1..Xn are ordered by a
/// random permutation; each equation is a lookup table (nested if-chain)
/// over every exogenous variable and its parents.
[[nodiscard]] CausalModel random_model(const RandomModelParams& params, std::uint64_t seed);

struct RandomInstance {
  std::uint64_t seed;
  CausalModel model;
  /// (sink = actual value), the sink being last in the generation order.
  Matrix phi;
};

[[nodiscard]] RandomInstance random_instance(const RandomModelParams& params, std::uint64_t seed);

/// Outcome of the seeded property sweep.
struct PropertyFinding {
  std::uint64_t seed;
  std::string check;
  std::string detail;
};

struct PropertySummary {
  std::size_t models = 0;
  std::size_t hp_in_putative_pass = 0;
  std::size_t fixed_points_checked = 0;
  std::size_t fixed_point_principles_pass = 0;
  std::size_t oracle_pass = 0;
  std::size_t models_with_fixed_point = 0;
  std::size_t models_with_unique_fixed_point = 0;
  double seconds = 0;
  std::vector<PropertyFinding> findings;

  [[nodiscard]] bool clean() const { return findings.empty(); }
};

struct PropertyOptions {
  bool check_hp_in_putative = true;
  bool check_fixed_points = true;
  bool check_oracle = true;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Runs the checks on models seeded seed, seed+1, ... seed+count-1.
[[nodiscard]] PropertySummary property_suite(std::size_t count, const RandomModelParams& params,
                                             std::uint64_t seed, const PropertyOptions& options = {});

}  // namespace actual_cause
