#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "actual_cause/expr.hpp"
#include "actual_cause/rational.hpp"
#include "actual_cause/var_set.hpp"

namespace actual_cause {

struct VariableDecl {
  std::string name;
  /// Declaration order is the canonical range order.
  std::vector<Value> range;

  friend bool operator==(const VariableDecl&, const VariableDecl&) = default;
};

/// Exogenous and endogenous variables with their finite ranges.
class Signature {
public:
  Signature() = default;
  Signature(std::vector<VariableDecl> exogenous, std::vector<VariableDecl> endogenous);

  [[nodiscard]] const std::vector<VariableDecl>& exogenous() const { return exo_; }
  [[nodiscard]] const std::vector<VariableDecl>& endogenous() const { return endo_; }
  [[nodiscard]] std::size_t endo_count() const { return endo_.size(); }
  [[nodiscard]] std::size_t exo_count() const { return exo_.size(); }

  [[nodiscard]] std::optional<VarRef> find(std::string_view name) const;
  [[nodiscard]] std::optional<std::size_t> find_endogenous(std::string_view name) const;
  [[nodiscard]] const VariableDecl& decl(VarRef ref) const;
  [[nodiscard]] const std::string& name(std::size_t endo_index) const { return endo_[endo_index].name; }
  [[nodiscard]] const std::vector<Value>& range(std::size_t endo_index) const { return endo_[endo_index].range; }
  [[nodiscard]] bool in_range(VarRef ref, const Value& v) const;

  /// "{0, 1/2, 1}"
  [[nodiscard]] std::string range_text(VarRef ref) const;
  /// "{J1, J2, B}" in declaration order.
  [[nodiscard]] std::string set_text(VarSet vars) const;

  friend bool operator==(const Signature&, const Signature&) = default;

private:
  std::vector<VariableDecl> exo_;
  std::vector<VariableDecl> endo_;
};

enum class DiagnosticCode {
  Lexical,
  Syntax,
  Duplicate,
  UnknownName,
  Range,
  Cycle,
  Totality,
  MissingContext,
  EmptyRange,
  Capacity,
  NestedIntervention,
  ExogenousTarget,
};

[[nodiscard]] std::string_view code_name(DiagnosticCode code);

/// One violated model invariant.
struct ModelIssue {
  DiagnosticCode code;
  /// Offending variables; for cycles, every member of the cycle.
  std::vector<std::string> variables;
  std::string message;
  /// Argument tuple that witnesses a totality failure.
  std::vector<std::pair<std::string, Value>> witness;
};

struct Binding {
  std::size_t var;
  Value value;

  friend bool operator==(const Binding&, const Binding&) = default;
};

/// Ordered, duplicate-free mapping from endogenous variables to values.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::vector<Binding> entries);

  /// Resolves names against `sig`; throws UnknownVariableError,
  /// ExogenousTargetError or RangeError.
  static Assignment from_names(const Signature& sig, const std::vector<std::pair<std::string, Value>>& entries);

  [[nodiscard]] const std::vector<Binding>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] std::optional<Value> find(std::size_t var) const;
  [[nodiscard]] VarSet vars() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

private:
  std::vector<Binding> entries_;
};

using Solution = std::vector<Value>;

/// Dense per-variable intervention: engaged entries replace the equation.
using Overrides = std::vector<std::optional<Value>>;

/// A finite structural causal model. Immutable; derived data (dependency
/// graph, diagnostics, solution) is computed on construction.
class CausalModel {
public:
  CausalModel(std::string id, Signature signature, std::vector<Expr> functions, std::vector<Value> context);

  [[nodiscard]] const std::string& id() const { return id_; }
  [[nodiscard]] const Signature& signature() const { return *signature_; }
  [[nodiscard]] std::size_t endo_count() const { return functions_.size(); }
  [[nodiscard]] const Expr& function(std::size_t var) const { return functions_[var]; }
  [[nodiscard]] const std::vector<Expr>& functions() const { return functions_; }
  [[nodiscard]] std::span<const Value> context() const { return context_; }
  /// Variables whose equation was replaced by an intervention.
  [[nodiscard]] VarSet frozen() const { return frozen_; }
  /// Endogenous parents (syntactic occurrence in the body).
  [[nodiscard]] VarSet parents(std::size_t var) const { return parents_[var]; }
  /// Empty when the dependency graph is cyclic.
  [[nodiscard]] std::span<const std::size_t> topological_order() const { return order_; }
  [[nodiscard]] std::span<const ModelIssue> issues() const { return issues_; }
  [[nodiscard]] bool valid() const { return issues_.empty(); }
  [[nodiscard]] VarSet all_vars() const { return VarSet::all(endo_count()); }

  /// The unique solution. Throws InvalidModelError on invalid models.
  [[nodiscard]] const Solution& solution() const;

  /// Solves the model with `overrides` applied on top of its equations,
  /// writing into `out` (size endo_count()). Requires a valid model.
  void solve_into(const Overrides& overrides, std::span<Value> out) const;

  friend bool operator==(const CausalModel& a, const CausalModel& b);

private:
  friend CausalModel intervene(const CausalModel& model, const Assignment& assignment);
  CausalModel(const CausalModel& base, const Assignment& assignment);

  void derive_structure();
  void check_signature_and_context();
  void check_totality();
  void solve_actual();

  std::string id_;
  std::shared_ptr<const Signature> signature_;
  std::vector<Expr> functions_;
  std::vector<Value> context_;
  VarSet frozen_;
  std::vector<VarSet> parents_;
  std::vector<std::size_t> order_;
  std::vector<ModelIssue> issues_;
  Solution solution_;
};

/// Empty iff every model invariant holds, including exhaustive totality of
/// every equation over its argument ranges.
[[nodiscard]] std::vector<ModelIssue> validate(const CausalModel& model);

[[nodiscard]] Solution solve(const CausalModel& model);

/// Replaces the equation of each assigned variable by a constant. Later
/// interventions overwrite earlier ones. Throws UnknownVariableError or
/// RangeError.
[[nodiscard]] CausalModel intervene(const CausalModel& model, const Assignment& assignment);

}  // namespace actual_cause
