#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "actual_cause/formula.hpp"
#include "actual_cause/model.hpp"

namespace actual_cause {

/// Bound on exhaustive searches. Every quantifier in this library is
/// exponential in the number of endogenous variables.
struct SearchLimits {
  std::size_t max_vars = 12;
  bool force = false;
};

/// Throws ResourceGuardError when `model` exceeds `limits`.
void enforce_limits(const CausalModel& model, const SearchLimits& limits, std::string_view operation);

/// Thread-safe sink for non-fatal messages emitted while a theory answers.
class WarningLog {
public:
  void add(std::string message);
  [[nodiscard]] std::vector<std::string> snapshot() const;

private:
  mutable std::mutex mutex_;
  std::vector<std::string> messages_;
};

/// A map from (model, basic formula) to a set of endogenous variables.
/// Whatever the underlying rule, the answer is empty when the model does not
/// satisfy the formula, and never mentions undeclared variables.
class CausalTheory {
public:
  using CauseFn = std::function<VarSet(const CausalModel&, const Matrix&)>;

  CausalTheory(std::string name, CauseFn fn, std::shared_ptr<WarningLog> warnings = nullptr);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] VarSet causes(const CausalModel& model, const Matrix& phi) const;
  [[nodiscard]] VarSet operator()(const CausalModel& model, const Matrix& phi) const { return causes(model, phi); }
  [[nodiscard]] std::vector<std::string> warnings() const;

private:
  std::string name_;
  CauseFn fn_;
  std::shared_ptr<WarningLog> warnings_;
};

struct ButForCause {
  std::size_t var;
  /// Smallest value in range order that falsifies the formula.
  Value flipping_value;
};

/// X is a but-for cause iff M |= phi and M |= [X := x] not phi for some x.
[[nodiscard]] std::vector<ButForCause> butfor_causes(const CausalModel& model, const Matrix& phi);
[[nodiscard]] VarSet butfor_set(const CausalModel& model, const Matrix& phi);

/// But-for causes among `candidates` in the model `base` applied to `model`,
/// whose solution is `solved`. Used by the counterfactual quantifiers.
[[nodiscard]] VarSet butfor_set_under(const CausalModel& model, const Matrix& phi, const Overrides& base,
                                      std::span<const Value> solved, VarSet candidates);

/// Smallest flipping value of `var` under `base`, if any.
[[nodiscard]] std::optional<Value> flipping_value_under(const CausalModel& model, const Matrix& phi,
                                                        const Overrides& base, std::size_t var);

/// AC2 witness: setting for the cause variables (ascending index order) and
/// a disjoint set of variables held at their actual values.
struct HpWitness {
  std::vector<Value> setting;
  VarSet fixed;
  std::vector<Value> fixed_values;

  friend bool operator==(const HpWitness&, const HpWitness&) = default;
};

struct ComplexCause {
  VarSet variables;
  std::vector<HpWitness> witnesses;
};

struct HpOptions {
  bool all_witnesses = false;
  SearchLimits limits;
};

/// All inclusion-minimal sets satisfying AC1 and AC2, in size-then-
/// lexicographic order. Witnesses are searched by fixed set (size, then
/// lexicographic) and then by setting in range order; only the first is
/// kept unless `all_witnesses` is set.
[[nodiscard]] std::vector<ComplexCause> hp_complex_causes(const CausalModel& model, const Matrix& phi,
                                                          const HpOptions& options = {});

/// Union of all complex causes.
[[nodiscard]] VarSet hp_causes(const CausalModel& model, const Matrix& phi, const SearchLimits& limits = {});

[[nodiscard]] CausalTheory butfor_theory();
[[nodiscard]] CausalTheory hp_theory(SearchLimits limits = {});

struct TableEntry {
  std::string model_id;
  std::string formula;
  std::vector<std::string> causes;
};

/// A theory given by explicit lookup. Entries are validated against the
/// supplied models (entries for other model ids are ignored). Queries for an
/// unknown model id throw UnknownModelError; a missing key answers the empty
/// set and records a warning.
[[nodiscard]] CausalTheory table_theory(std::string name, const std::vector<TableEntry>& entries,
                                        const std::vector<const CausalModel*>& models);

/// Theories by name. Built-ins are "butfor" and "hp".
class TheoryRegistry {
public:
  static TheoryRegistry with_builtins(SearchLimits limits = {});

  void add(CausalTheory theory);
  [[nodiscard]] const CausalTheory* find(std::string_view name) const;
  [[nodiscard]] std::vector<std::string> names() const;

private:
  std::map<std::string, CausalTheory, std::less<>> theories_;
};

}  // namespace actual_cause
