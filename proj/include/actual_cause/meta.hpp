#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "actual_cause/counterfactual.hpp"
#include "actual_cause/theories.hpp"

namespace actual_cause {

/// A member of the counterfactual space in which `var` is a but-for cause
/// of the formula while keeping its actual value.
struct PutativeWitness {
  Provenance provenance;
  Value flipping_value;
};

struct PutativeCause {
  std::size_t var;
  /// Witnesses in enumeration order, one per distinct model.
  std::vector<PutativeWitness> witnesses;
};

/// Putative causes relative to `causes`: variables that are but-for causes
/// in some member of the counterfactual space of `causes` and keep their
/// actual value there. Declaration order.
[[nodiscard]] std::vector<PutativeCause> putative_causes(const CausalModel& model, const Matrix& phi, VarSet causes,
                                                         const SearchLimits& limits = {});
[[nodiscard]] VarSet putative_set(const CausalModel& model, const Matrix& phi, VarSet causes,
                                  const SearchLimits& limits = {});

enum class CauseStatus { ButFor, Overdetermining, PutativeUnclassified, Preempted, NonCause };
[[nodiscard]] std::string_view status_name(CauseStatus s);

/// Evidence that a preempted variable is blocked in one of its witnesses:
/// the non-causes that change value there.
struct BlockingEvidence {
  Provenance provenance;
  std::vector<VariableChange> blocked;
};

struct CauseVerdict {
  std::size_t var = 0;
  CauseStatus status = CauseStatus::NonCause;
  /// The variable occurs in the formula itself.
  bool trivial = false;
  std::optional<Value> flipping_value;
  std::vector<PutativeWitness> witnesses;
  std::vector<BlockingEvidence> evidence;
};

struct Classification {
  std::string theory;
  bool formula_holds = true;
  VarSet causes;
  VarSet butfor;
  VarSet putative;
  std::vector<CauseVerdict> verdicts;
};

[[nodiscard]] Classification classify(const CausalModel& model, const Matrix& phi, const CausalTheory& theory,
                                      const SearchLimits& limits = {});

enum class Principle { Presumption, Similarity, Empirical };
[[nodiscard]] std::string_view principle_name(Principle p);
[[nodiscard]] std::optional<Principle> parse_principle(std::string_view name);

enum class ViolationKind {
  /// A non-cause putative cause with a witness in which no non-cause changes.
  UnblockedPreemption,
  /// A but-for cause the theory omits.
  MissingButFor,
  /// A cause of the theory that is not putative.
  NotPutative,
  /// A member of the candidate set without an empirical witness.
  MissingWitness,
  /// A variable outside the candidate set with an empirical witness.
  SpuriousWitness,
};
[[nodiscard]] std::string_view violation_name(ViolationKind k);

struct Counterexample {
  std::size_t var;
  ViolationKind kind;
  /// Counterfactual model exhibiting the violation, when there is one.
  std::optional<Provenance> provenance;
  std::optional<Value> flipping_value;
  /// Variables whose value differs from the actual solution in that model.
  std::vector<VariableChange> changes;
};

/// A variable's witness in the empirical check.
struct Certificate {
  std::size_t var;
  Provenance provenance;
  Value flipping_value;
};

struct PrincipleReport {
  Principle principle = Principle::Presumption;
  std::string theory;
  bool satisfied = true;
  bool formula_holds = true;
  VarSet causes;
  std::optional<Counterexample> counterexample;
  std::vector<Certificate> certificates;
};

/// Every putative non-cause must have, in each witness, some non-cause whose
/// value differs from the actual one.
[[nodiscard]] PrincipleReport check_presumption(const CausalModel& model, const Matrix& phi,
                                                const CausalTheory& theory, const SearchLimits& limits = {});

/// But-for causes must be causes, and causes must be putative.
[[nodiscard]] PrincipleReport check_similarity(const CausalModel& model, const Matrix& phi,
                                               const CausalTheory& theory, const SearchLimits& limits = {});

/// `candidate` is an empirical fixed point: a variable belongs to it iff it
/// is a but-for cause, keeping its actual value, in some member of the
/// counterfactual space of `candidate` in which every other variable keeps
/// its actual value.
[[nodiscard]] PrincipleReport check_empirical(const CausalModel& model, const Matrix& phi, VarSet candidate,
                                              const SearchLimits& limits = {});

/// A formula with the truth value a counterexample claims for it.
struct ReplayQuery {
  Formula formula;
  bool expected;
};

/// Queries that re-derive a counterexample through plain evaluation: the
/// formula holds in the counterfactual model, setting the variable to its
/// flipping value falsifies it, and every reported change is observed.
[[nodiscard]] std::vector<ReplayQuery> replay_queries(const CausalModel& model, const Matrix& phi,
                                                      const Counterexample& cx);

struct FixedPoint {
  VarSet causes;
  std::vector<Certificate> certificates;
};

struct FixedPointResult {
  bool formula_holds = true;
  std::vector<FixedPoint> fixed_points;
};

/// All empirical fixed points in size-then-lexicographic order. When the
/// model does not satisfy the formula the only answer is the empty set.
[[nodiscard]] FixedPointResult find_empirical_fixed_points(const CausalModel& model, const Matrix& phi,
                                                           const SearchLimits& limits = {});

}  // namespace actual_cause
