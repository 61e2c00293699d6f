#include "actual_cause/errors.hpp"
#include "actual_cause/meta.hpp"
#include "space.hpp"

namespace actual_cause {

std::string_view principle_name(Principle p) {
  switch (p) {
    case Principle::Presumption: return "presumption";
    case Principle::Similarity: return "similarity";
    case Principle::Empirical: return "empirical";
  }
  return "?";
}

std::optional<Principle> parse_principle(std::string_view name) {
  for (auto p : {Principle::Presumption, Principle::Similarity, Principle::Empirical}) {
    if (principle_name(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::UnblockedPreemption: return "unblocked-preemption";
    case ViolationKind::MissingButFor: return "missing-but-for-cause";
    case ViolationKind::NotPutative: return "cause-not-putative";
    case ViolationKind::MissingWitness: return "missing-witness";
    case ViolationKind::SpuriousWitness: return "spurious-witness";
  }
  return "?";
}

PrincipleReport check_presumption(const CausalModel& model, const Matrix& phi, const CausalTheory& theory,
                                  const SearchLimits& limits) {
  PrincipleReport r;
  r.principle = Principle::Presumption;
  r.theory = theory.name();
  const auto& actual = model.solution();
  r.formula_holds = holds(*phi, actual);
  r.causes = theory(model, phi);
  const VarSet non_causes = model.all_vars() - r.causes;
  for (const auto& pc : putative_causes(model, phi, r.causes, limits)) {
    if (r.causes.contains(pc.var)) continue;
    for (const auto& w : pc.witnesses) {
      auto sol = detail::solve_provenance(model, w.provenance);
      if (!changed_variables(actual, sol, non_causes).empty()) continue;
      r.satisfied = false;
      r.counterexample = Counterexample{pc.var, ViolationKind::UnblockedPreemption, w.provenance, w.flipping_value,
                                        changed_variables(actual, sol, model.all_vars())};
      return r;
    }
  }
  return r;
}

PrincipleReport check_similarity(const CausalModel& model, const Matrix& phi, const CausalTheory& theory,
                                 const SearchLimits& limits) {
  PrincipleReport r;
  r.principle = Principle::Similarity;
  r.theory = theory.name();
  r.formula_holds = holds(*phi, model.solution());
  r.causes = theory(model, phi);
  auto butfor = butfor_causes(model, phi);
  const VarSet putative = putative_set(model, phi, r.causes, limits);
  std::size_t bf = 0;
  for (std::size_t v = 0; v < model.endo_count(); ++v) {
    const bool is_butfor = bf < butfor.size() && butfor[bf].var == v;
    if (is_butfor && !r.causes.contains(v)) {
      r.satisfied = false;
      r.counterexample =
          Counterexample{v, ViolationKind::MissingButFor, Provenance{}, butfor[bf].flipping_value, {}};
      return r;
    }
    if (is_butfor) ++bf;
    if (r.causes.contains(v) && !putative.contains(v)) {
      r.satisfied = false;
      r.counterexample = Counterexample{v, ViolationKind::NotPutative, std::nullopt, std::nullopt, {}};
      return r;
    }
  }
  return r;
}

namespace {

/// First empirical witness per variable, or nullopt.
std::vector<std::optional<PutativeWitness>> empirical_witnesses(const CausalModel& model, const Matrix& phi,
                                                                VarSet candidate) {
  const auto& actual = model.solution();
  const std::size_t n = model.endo_count();
  const VarSet outside = model.all_vars() - candidate;
  std::vector<std::optional<PutativeWitness>> found(n);
  std::size_t remaining = n;
  detail::for_each_distinct_member(model, candidate, [&](const Provenance& p, const Overrides& ov,
                                                         const Solution& sol) {
    if (!holds(*phi, sol)) return true;
    for (auto w : outside) {
      if (sol[w] != actual[w]) return true;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (found[v] || sol[v] != actual[v]) continue;
      if (auto x = flipping_value_under(model, phi, ov, v)) {
        found[v] = PutativeWitness{p, *x};
        --remaining;
      }
    }
    return remaining > 0;
  });
  return found;
}

}  // namespace

PrincipleReport check_empirical(const CausalModel& model, const Matrix& phi, VarSet candidate,
                                const SearchLimits& limits) {
  enforce_limits(model, limits, "empirical check");
  if (!candidate.is_subset_of(model.all_vars())) {
    throw UnknownVariableError("candidate cause set mentions variables outside the model");
  }
  PrincipleReport r;
  r.principle = Principle::Empirical;
  r.theory = "candidate";
  const auto& actual = model.solution();
  r.formula_holds = holds(*phi, actual);
  r.causes = candidate;
  auto found = empirical_witnesses(model, phi, candidate);
  for (std::size_t v = 0; v < model.endo_count(); ++v) {
    const bool in = candidate.contains(v);
    if (in && !found[v]) {
      r.satisfied = false;
      r.counterexample = Counterexample{v, ViolationKind::MissingWitness, std::nullopt, std::nullopt, {}};
      break;
    }
    if (!in && found[v]) {
      r.satisfied = false;
      auto sol = detail::solve_provenance(model, found[v]->provenance);
      r.counterexample = Counterexample{v, ViolationKind::SpuriousWitness, found[v]->provenance,
                                        found[v]->flipping_value, changed_variables(actual, sol, model.all_vars())};
      break;
    }
  }
  for (auto v : candidate) {
    if (found[v]) r.certificates.push_back({v, found[v]->provenance, found[v]->flipping_value});
  }
  return r;
}

FixedPointResult find_empirical_fixed_points(const CausalModel& model, const Matrix& phi,
                                             const SearchLimits& limits) {
  enforce_limits(model, limits, "fixed-point enumeration");
  FixedPointResult out;
  if (!holds(*phi, model.solution())) {
    out.formula_holds = false;
    out.fixed_points.push_back({});
    return out;
  }
  SubsetEnumerator candidates(model.all_vars());
  VarSet c;
  while (candidates.next(c)) {
    auto report = check_empirical(model, phi, c, limits);
    if (report.satisfied) out.fixed_points.push_back({c, std::move(report.certificates)});
  }
  return out;
}

}  // namespace actual_cause

namespace actual_cause {

std::vector<ReplayQuery> replay_queries(const CausalModel& model, const Matrix& phi, const Counterexample& cx) {
  std::vector<ReplayQuery> out;
  if (!cx.provenance) return out;
  const Assignment base = to_assignment(model, *cx.provenance);
  out.push_back({Formula{base, phi}, true});
  if (cx.flipping_value) {
    std::vector<Binding> flipped;
    for (const auto& b : base.entries()) {
      if (b.var != cx.var) flipped.push_back(b);
    }
    flipped.push_back({cx.var, *cx.flipping_value});
    out.push_back({Formula{Assignment(std::move(flipped)), phi}, false});
  }
  for (const auto& c : cx.changes) out.push_back({Formula{base, fm::atom(c.var, c.after)}, true});
  return out;
}

}  // namespace actual_cause
