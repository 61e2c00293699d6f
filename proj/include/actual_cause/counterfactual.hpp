#pragma once

#include <optional>
#include <vector>

#include "actual_cause/model.hpp"

namespace actual_cause {

/// How a member of the counterfactual space was reached: the variables in
/// `set_vars` received `set_values` (aligned with ascending index order),
/// and `frozen_vars` were held at their actual values.
struct Provenance {
  VarSet set_vars;
  std::vector<Value> set_values;
  VarSet frozen_vars;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// The compound intervention [A := v, B := actual] described by `p`.
[[nodiscard]] Assignment to_assignment(const CausalModel& model, const Provenance& p);
[[nodiscard]] Overrides to_overrides(const CausalModel& model, const Provenance& p);

struct CounterfactualMember {
  Provenance provenance;
  CausalModel model;
};

/// Stream over the counterfactual space of `model` relative to `x`:
/// every model obtained by setting some subset of `x` to arbitrary
/// in-range values while freezing some subset of the complement at actual
/// values. Order: subsets of x (size, then lexicographic), value tuples in
/// range order, then subsets of the complement. Distinct provenances may
/// produce identical models.
class CounterfactualSpace {
public:
  CounterfactualSpace(const CausalModel& model, VarSet x);

  /// Advances to the next provenance; returns false when exhausted.
  bool next(Provenance& out);

  /// Convenience wrapper that also materializes the model.
  std::optional<CounterfactualMember> next_member();

private:
  bool next_setting();

  const CausalModel* model_;
  VarSet x_;
  VarSet complement_;
  SubsetEnumerator set_subsets_;
  std::optional<SubsetEnumerator> frozen_subsets_;
  std::vector<std::size_t> set_list_;
  std::vector<std::size_t> digits_;
  VarSet current_set_;
  bool have_setting_ = false;
};

[[nodiscard]] CounterfactualSpace counterfactual_space(const CausalModel& model, VarSet x);

/// Number of provenance triples in the space (not deduplicated).
[[nodiscard]] std::size_t counterfactual_space_size(const CausalModel& model, VarSet x);

/// Solution deltas: variables whose value in `counterfactual` differs from
/// `actual`, in declaration order.
struct VariableChange {
  std::size_t var;
  Value before;
  Value after;

  friend bool operator==(const VariableChange&, const VariableChange&) = default;
};

[[nodiscard]] std::vector<VariableChange> changed_variables(std::span<const Value> actual,
                                                            std::span<const Value> counterfactual,
                                                            VarSet among);

}  // namespace actual_cause
