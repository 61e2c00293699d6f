#include "actual_cause/meta.hpp"
#include "space.hpp"

namespace actual_cause {

std::string_view status_name(CauseStatus s) {
  switch (s) {
    case CauseStatus::ButFor: return "but-for";
    case CauseStatus::Overdetermining: return "overdetermining";
    case CauseStatus::PutativeUnclassified: return "putative-only-unclassified";
    case CauseStatus::Preempted: return "preempted";
    case CauseStatus::NonCause: return "non-cause";
  }
  return "?";
}

std::vector<PutativeCause> putative_causes(const CausalModel& model, const Matrix& phi, VarSet causes,
                                           const SearchLimits& limits) {
  enforce_limits(model, limits, "putative cause search");
  const auto& actual = model.solution();
  std::vector<PutativeCause> out(model.endo_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v].var = v;
  detail::for_each_distinct_member(model, causes, [&](const Provenance& p, const Overrides& ov, const Solution& sol) {
    // But-for causation presupposes that the formula holds in the member.
    if (!holds(*phi, sol)) return true;
    for (std::size_t v = 0; v < model.endo_count(); ++v) {
      if (sol[v] != actual[v]) continue;
      if (auto x = flipping_value_under(model, phi, ov, v)) out[v].witnesses.push_back({p, *x});
    }
    return true;
  });
  std::erase_if(out, [](const PutativeCause& c) { return c.witnesses.empty(); });
  return out;
}

VarSet putative_set(const CausalModel& model, const Matrix& phi, VarSet causes, const SearchLimits& limits) {
  VarSet out;
  for (const auto& c : putative_causes(model, phi, causes, limits)) out.insert(c.var);
  return out;
}

Classification classify(const CausalModel& model, const Matrix& phi, const CausalTheory& theory,
                        const SearchLimits& limits) {
  Classification c;
  c.theory = theory.name();
  const auto& actual = model.solution();
  c.formula_holds = holds(*phi, actual);
  c.causes = theory(model, phi);
  auto butfor = butfor_causes(model, phi);
  for (const auto& b : butfor) c.butfor.insert(b.var);
  auto putative = putative_causes(model, phi, c.causes, limits);
  for (const auto& p : putative) c.putative.insert(p.var);

  const auto in_formula = atom_vars(*phi);
  const VarSet non_causes = model.all_vars() - c.causes;
  std::size_t bf = 0, pc = 0;
  for (std::size_t v = 0; v < model.endo_count(); ++v) {
    CauseVerdict verdict;
    verdict.var = v;
    verdict.status = CauseStatus::NonCause;
    verdict.trivial = in_formula.contains(v);
    if (bf < butfor.size() && butfor[bf].var == v) verdict.flipping_value = butfor[bf++].flipping_value;
    if (pc < putative.size() && putative[pc].var == v) verdict.witnesses = std::move(putative[pc++].witnesses);

    const bool is_cause = c.causes.contains(v);
    const bool is_butfor = c.butfor.contains(v);
    if (is_cause && is_butfor) {
      verdict.status = CauseStatus::ButFor;
    } else if (is_cause) {
      verdict.status = CauseStatus::Overdetermining;
    } else if (is_butfor) {
      verdict.status = CauseStatus::PutativeUnclassified;
    } else if (c.putative.contains(v)) {
      verdict.status = CauseStatus::Preempted;
      for (const auto& w : verdict.witnesses) {
        auto sol = detail::solve_provenance(model, w.provenance);
        verdict.evidence.push_back({w.provenance, changed_variables(actual, sol, non_causes)});
      }
    }
    c.verdicts.push_back(std::move(verdict));
  }
  return c;
}

}  // namespace actual_cause
