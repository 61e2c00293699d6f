#pragma once

#include <vector>

#include "actual_cause/formula.hpp"
#include "actual_cause/model.hpp"

/// Unpruned brute-force versions of the cause and principle computations.
/// They share no search code with the main library and exist to cross-check
/// it on small models.
namespace actual_cause::reference {

[[nodiscard]] VarSet butfor(const CausalModel& model, const Matrix& phi);

/// Minimal AC1/AC2 sets, size-then-lexicographic.
[[nodiscard]] std::vector<VarSet> hp_complex_causes(const CausalModel& model, const Matrix& phi);
[[nodiscard]] VarSet hp_causes(const CausalModel& model, const Matrix& phi);

[[nodiscard]] VarSet putative(const CausalModel& model, const Matrix& phi, VarSet causes);

/// Non-causes with a putativeness witness in which every non-cause keeps its
/// actual value. Presumption holds iff this is empty.
[[nodiscard]] VarSet presumption_violators(const CausalModel& model, const Matrix& phi, VarSet causes);

[[nodiscard]] bool is_empirical(const CausalModel& model, const Matrix& phi, VarSet candidate);
[[nodiscard]] std::vector<VarSet> empirical_fixed_points(const CausalModel& model, const Matrix& phi);

}  // namespace actual_cause::reference
