#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "actual_cause/meta.hpp"
#include "actual_cause/random.hpp"
#include "actual_cause/theories.hpp"

/// JSON rendering of analysis results. Values are strings ("1", "-3/4"),
/// variable sets are arrays of names in declaration order, and object keys
/// keep insertion order so output is byte-stable.
namespace actual_cause::report {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json value(const Value& v);
/// Inverse of value(); throws Error on malformed input.
[[nodiscard]] Value parse_value(const Json& j);
[[nodiscard]] Json var_set(const Signature& sig, VarSet vars);

[[nodiscard]] Json solution(const CausalModel& model, std::span<const Value> values);
[[nodiscard]] Json provenance(const CausalModel& model, const Provenance& p);
[[nodiscard]] Json changes(const CausalModel& model, const std::vector<VariableChange>& list);

[[nodiscard]] Json butfor(const CausalModel& model, const std::vector<ButForCause>& causes);
[[nodiscard]] Json complex_causes(const CausalModel& model, const std::vector<ComplexCause>& causes);
[[nodiscard]] Json causes(const CausalModel& model, const Matrix& phi, const CausalTheory& theory,
                          const SearchLimits& limits);
[[nodiscard]] Json classification(const CausalModel& model, const Classification& c);
[[nodiscard]] Json principle(const CausalModel& model, const Matrix& phi, const PrincipleReport& r);
[[nodiscard]] Json fixed_points(const CausalModel& model, const FixedPointResult& r);
[[nodiscard]] Json property_summary(const PropertySummary& s, const RandomModelParams& params, std::size_t count,
                                    std::uint64_t seed);

/// Top-level document: tool, version, command, model, formula, payload,
/// warnings.
[[nodiscard]] Json envelope(const std::string& command, const std::string& model_id, const std::string& formula,
                            Json payload, const std::vector<std::string>& warnings = {});

}  // namespace actual_cause::report
