#include "actual_cause/counterfactual.hpp"

namespace actual_cause {

Assignment to_assignment(const CausalModel& model, const Provenance& p) {
  std::vector<Binding> out;
  std::size_t i = 0;
  for (auto v : p.set_vars) out.push_back({v, p.set_values[i++]});
  const auto& actual = model.solution();
  for (auto v : p.frozen_vars) out.push_back({v, actual[v]});
  return Assignment(std::move(out));
}

Overrides to_overrides(const CausalModel& model, const Provenance& p) {
  Overrides out(model.endo_count());
  std::size_t i = 0;
  for (auto v : p.set_vars) out[v] = p.set_values[i++];
  const auto& actual = model.solution();
  for (auto v : p.frozen_vars) out[v] = actual[v];
  return out;
}

CounterfactualSpace::CounterfactualSpace(const CausalModel& model, VarSet x)
    : model_(&model), x_(x), complement_(model.all_vars() - x), set_subsets_(x) {}

bool CounterfactualSpace::next_setting() {
  if (have_setting_) {
    // Advance the value odometer within the current subset.
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < model_->signature().range(set_list_[i]).size()) return true;
      digits_[i] = 0;
    }
  }
  if (!set_subsets_.next(current_set_)) return false;
  set_list_ = current_set_.to_vector();
  digits_.assign(set_list_.size(), 0);
  have_setting_ = true;
  return true;
}

bool CounterfactualSpace::next(Provenance& out) {
  VarSet frozen;
  while (!frozen_subsets_ || !frozen_subsets_->next(frozen)) {
    if (!next_setting()) return false;
    frozen_subsets_.emplace(complement_);
  }
  out.set_vars = current_set_;
  out.set_values.clear();
  for (std::size_t i = 0; i < set_list_.size(); ++i) {
    out.set_values.push_back(model_->signature().range(set_list_[i])[digits_[i]]);
  }
  out.frozen_vars = frozen;
  return true;
}

std::optional<CounterfactualMember> CounterfactualSpace::next_member() {
  Provenance p;
  if (!next(p)) return std::nullopt;
  CausalModel m = intervene(*model_, to_assignment(*model_, p));
  return CounterfactualMember{std::move(p), std::move(m)};
}

CounterfactualSpace counterfactual_space(const CausalModel& model, VarSet x) {
  (void)model.solution();  // requires a valid model
  return CounterfactualSpace(model, x);
}

std::size_t counterfactual_space_size(const CausalModel& model, VarSet x) {
  // Sum over subsets A of x of prod |R(a)|, i.e. prod (1 + |R(a)|), times
  // 2^|complement|.
  std::size_t settings = 1;
  for (auto v : x) settings *= 1 + model.signature().range(v).size();
  return settings << (model.endo_count() - x.size());
}

std::vector<VariableChange> changed_variables(std::span<const Value> actual, std::span<const Value> counterfactual,
                                              VarSet among) {
  std::vector<VariableChange> out;
  for (auto v : among) {
    if (actual[v] != counterfactual[v]) out.push_back({v, actual[v], counterfactual[v]});
  }
  return out;
}

}  // namespace actual_cause
