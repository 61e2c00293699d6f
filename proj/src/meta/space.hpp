#pragma once

#include <set>

#include "actual_cause/counterfactual.hpp"
#include "actual_cause/formula.hpp"

namespace actual_cause::detail {

/// Visits each distinct model of the counterfactual space of `x` once, in
/// enumeration order. `fn(provenance, overrides, solution)` returns false to
/// stop early.
template <class Fn>
void for_each_distinct_member(const CausalModel& model, VarSet x, Fn&& fn) {
  CounterfactualSpace space(model, x);
  std::set<Overrides> seen;
  Provenance p;
  Solution sol(model.endo_count());
  while (space.next(p)) {
    Overrides ov = to_overrides(model, p);
    if (!seen.insert(ov).second) continue;
    model.solve_into(ov, sol);
    if (!fn(static_cast<const Provenance&>(p), static_cast<const Overrides&>(ov),
            static_cast<const Solution&>(sol))) {
      return;
    }
  }
}

inline Solution solve_provenance(const CausalModel& model, const Provenance& p) {
  Solution sol(model.endo_count());
  model.solve_into(to_overrides(model, p), sol);
  return sol;
}

}  // namespace actual_cause::detail
