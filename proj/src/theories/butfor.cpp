#include "actual_cause/theories.hpp"

namespace actual_cause {

std::optional<Value> flipping_value_under(const CausalModel& model, const Matrix& phi, const Overrides& base,
                                          std::size_t var) {
  Overrides trial = base;
  Solution scratch(model.endo_count());
  for (const auto& x : model.signature().range(var)) {
    trial[var] = x;
    model.solve_into(trial, scratch);
    if (!holds(*phi, scratch)) return x;
  }
  return std::nullopt;
}

VarSet butfor_set_under(const CausalModel& model, const Matrix& phi, const Overrides& base,
                        std::span<const Value> solved, VarSet candidates) {
  VarSet out;
  if (!holds(*phi, solved)) return out;
  Overrides trial = base;
  Solution scratch(model.endo_count());
  for (auto v : candidates) {
    for (const auto& x : model.signature().range(v)) {
      // Setting a variable to its own value leaves the solution unchanged.
      if (x == solved[v]) continue;
      trial[v] = x;
      model.solve_into(trial, scratch);
      if (!holds(*phi, scratch)) {
        out.insert(v);
        break;
      }
    }
    trial[v] = base[v];
  }
  return out;
}

std::vector<ButForCause> butfor_causes(const CausalModel& model, const Matrix& phi) {
  std::vector<ButForCause> out;
  const auto& actual = model.solution();
  if (!holds(*phi, actual)) return out;
  Overrides none(model.endo_count());
  for (std::size_t v = 0; v < model.endo_count(); ++v) {
    if (auto x = flipping_value_under(model, phi, none, v)) out.push_back({v, *x});
  }
  return out;
}

VarSet butfor_set(const CausalModel& model, const Matrix& phi) {
  Overrides none(model.endo_count());
  return butfor_set_under(model, phi, none, model.solution(), model.all_vars());
}

}  // namespace actual_cause
