#include "actual_cause/theories.hpp"

namespace actual_cause {
namespace {

/// Searches AC2 witnesses for `cause`: fixed sets disjoint from it, held at
/// actual values, combined with every setting of the cause variables.
std::vector<HpWitness> find_witnesses(const CausalModel& model, const Matrix& phi, VarSet cause, bool all) {
  const auto& actual = model.solution();
  const auto& sig = model.signature();
  const std::vector<std::size_t> members = cause.to_vector();
  std::vector<HpWitness> out;
  Solution scratch(model.endo_count());
  SubsetEnumerator fixed_sets(model.all_vars() - cause);
  VarSet fixed;
  while (fixed_sets.next(fixed)) {
    Overrides ov(model.endo_count());
    for (auto w : fixed) ov[w] = actual[w];
    std::vector<std::size_t> digits(members.size(), 0);
    bool more = true;
    while (more) {
      bool is_actual = true;
      for (std::size_t i = 0; i < members.size(); ++i) {
        ov[members[i]] = sig.range(members[i])[digits[i]];
        is_actual = is_actual && *ov[members[i]] == actual[members[i]];
      }
      if (!is_actual) {
        model.solve_into(ov, scratch);
        if (!holds(*phi, scratch)) {
          HpWitness w;
          for (auto m : members) w.setting.push_back(*ov[m]);
          w.fixed = fixed;
          for (auto f : fixed) w.fixed_values.push_back(actual[f]);
          out.push_back(std::move(w));
          if (!all) return out;
        }
      }
      more = false;
      for (std::size_t i = members.size(); i-- > 0;) {
        if (++digits[i] < sig.range(members[i]).size()) {
          more = true;
          break;
        }
        digits[i] = 0;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<ComplexCause> hp_complex_causes(const CausalModel& model, const Matrix& phi, const HpOptions& options) {
  enforce_limits(model, options.limits, "HP cause search");
  std::vector<ComplexCause> found;
  if (!holds(*phi, model.solution())) return found;
  SubsetEnumerator candidates(model.all_vars());
  VarSet x;
  while (candidates.next(x)) {
    if (x.empty()) continue;
    // Size order guarantees any complex cause inside x was found already;
    // a set containing one cannot be minimal.
    bool dominated = false;
    for (const auto& c : found) {
      if (c.variables.is_subset_of(x)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    auto witnesses = find_witnesses(model, phi, x, options.all_witnesses);
    if (!witnesses.empty()) found.push_back({x, std::move(witnesses)});
  }
  return found;
}

VarSet hp_causes(const CausalModel& model, const Matrix& phi, const SearchLimits& limits) {
  VarSet out;
  for (const auto& c : hp_complex_causes(model, phi, {false, limits})) out = out | c.variables;
  return out;
}

}  // namespace actual_cause
