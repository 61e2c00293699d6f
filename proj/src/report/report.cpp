#include "actual_cause/report.hpp"

#include "actual_cause/errors.hpp"
#include "actual_cause/version.hpp"

namespace actual_cause::report {

Json value(const Value& v) { return v.to_string(); }

Value parse_value(const Json& j) {
  if (!j.is_string()) throw Error("expected a rational string, got " + j.dump());
  auto v = Value::parse(j.get<std::string>());
  if (!v) throw Error("malformed rational " + j.dump());
  return *v;
}

Json var_set(const Signature& sig, VarSet vars) {
  Json out = Json::array();
  for (auto v : vars) out.push_back(sig.name(v));
  return out;
}

Json solution(const CausalModel& model, std::span<const Value> values) {
  Json out = Json::object();
  for (std::size_t v = 0; v < values.size(); ++v) out[model.signature().name(v)] = value(values[v]);
  return out;
}

Json provenance(const CausalModel& model, const Provenance& p) {
  const auto& sig = model.signature();
  Json set = Json::object();
  std::size_t i = 0;
  for (auto v : p.set_vars) set[sig.name(v)] = value(p.set_values[i++]);
  Json frozen = Json::object();
  for (auto v : p.frozen_vars) frozen[sig.name(v)] = value(model.solution()[v]);
  return Json{{"set", std::move(set)},
              {"frozen", std::move(frozen)},
              {"intervention", to_string(to_assignment(model, p), sig)}};
}

Json changes(const CausalModel& model, const std::vector<VariableChange>& list) {
  Json out = Json::array();
  for (const auto& c : list) {
    out.push_back({{"variable", model.signature().name(c.var)}, {"actual", value(c.before)}, {"counterfactual", value(c.after)}});
  }
  return out;
}

Json butfor(const CausalModel& model, const std::vector<ButForCause>& causes) {
  Json out = Json::array();
  for (const auto& c : causes) {
    out.push_back({{"variable", model.signature().name(c.var)}, {"flipping_value", value(c.flipping_value)}});
  }
  return out;
}

Json complex_causes(const CausalModel& model, const std::vector<ComplexCause>& causes) {
  const auto& sig = model.signature();
  Json out = Json::array();
  for (const auto& c : causes) {
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses) {
      Json setting = Json::object();
      std::size_t i = 0;
      for (auto v : c.variables) setting[sig.name(v)] = value(w.setting[i++]);
      Json fixed = Json::object();
      i = 0;
      for (auto v : w.fixed) fixed[sig.name(v)] = value(w.fixed_values[i++]);
      witnesses.push_back({{"setting", std::move(setting)}, {"fixed", std::move(fixed)}});
    }
    out.push_back({{"variables", var_set(sig, c.variables)}, {"witnesses", std::move(witnesses)}});
  }
  return out;
}

Json causes(const CausalModel& model, const Matrix& phi, const CausalTheory& theory, const SearchLimits& limits) {
  const auto& sig = model.signature();
  Json out{{"theory", theory.name()}, {"formula_holds", holds(*phi, model.solution())}};
  if (theory.name() == "hp") {
    auto complex = hp_complex_causes(model, phi, {false, limits});
    VarSet all;
    for (const auto& c : complex) all = all | c.variables;
    out["causes"] = var_set(sig, all);
    out["complex_causes"] = complex_causes(model, complex);
  } else if (theory.name() == "butfor") {
    auto list = butfor_causes(model, phi);
    VarSet all;
    for (const auto& c : list) all.insert(c.var);
    out["causes"] = var_set(sig, all);
    out["butfor"] = butfor(model, list);
  } else {
    out["causes"] = var_set(sig, theory(model, phi));
  }
  return out;
}

namespace {

Json witnesses(const CausalModel& model, const std::vector<PutativeWitness>& list) {
  Json out = Json::array();
  for (const auto& w : list) {
    Json p = provenance(model, w.provenance);
    p["flipping_value"] = value(w.flipping_value);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Json classification(const CausalModel& model, const Classification& c) {
  const auto& sig = model.signature();
  Json verdicts = Json::array();
  for (const auto& v : c.verdicts) {
    Json j{{"variable", sig.name(v.var)}, {"status", std::string(status_name(v.status))}, {"trivial", v.trivial}};
    if (v.flipping_value) j["flipping_value"] = value(*v.flipping_value);
    j["witnesses"] = witnesses(model, v.witnesses);
    if (v.status == CauseStatus::Preempted) {
      Json evidence = Json::array();
      for (const auto& e : v.evidence) {
        evidence.push_back({{"intervention", to_string(to_assignment(model, e.provenance), sig)},
                            {"blocked_by", changes(model, e.blocked)}});
      }
      j["blocking_evidence"] = std::move(evidence);
    }
    verdicts.push_back(std::move(j));
  }
  return Json{{"theory", c.theory},
              {"formula_holds", c.formula_holds},
              {"causes", var_set(sig, c.causes)},
              {"butfor", var_set(sig, c.butfor)},
              {"putative", var_set(sig, c.putative)},
              {"verdicts", std::move(verdicts)}};
}

Json principle(const CausalModel& model, const Matrix& phi, const PrincipleReport& r) {
  const auto& sig = model.signature();
  Json out{{"principle", std::string(principle_name(r.principle))},
           {"theory", r.theory},
           {"verdict", r.satisfied ? "satisfied" : "violated"},
           {"formula_holds", r.formula_holds},
           {"causes", var_set(sig, r.causes)}};
  if (r.counterexample) {
    const auto& cx = *r.counterexample;
    Json c{{"variable", sig.name(cx.var)}, {"kind", std::string(violation_name(cx.kind))}};
    if (r.principle == Principle::Empirical) {
      c["direction"] = cx.kind == ViolationKind::MissingWitness ? "=>" : "<=";
    }
    if (cx.provenance) c["provenance"] = provenance(model, *cx.provenance);
    if (cx.flipping_value) c["flipping_value"] = value(*cx.flipping_value);
    c["changes"] = changes(model, cx.changes);
    Json replay = Json::array();
    for (const auto& q : replay_queries(model, phi, cx)) {
      replay.push_back({{"query", to_string(q.formula, sig)}, {"expected", q.expected}});
    }
    c["replay"] = std::move(replay);
    out["counterexample"] = std::move(c);
  } else {
    out["counterexample"] = nullptr;
  }
  if (!r.certificates.empty()) {
    Json certs = Json::array();
    for (const auto& cert : r.certificates) {
      Json p = provenance(model, cert.provenance);
      certs.push_back({{"variable", sig.name(cert.var)},
                       {"intervention", p["intervention"]},
                       {"flipping_value", value(cert.flipping_value)}});
    }
    out["certificates"] = std::move(certs);
  }
  return out;
}

Json fixed_points(const CausalModel& model, const FixedPointResult& r) {
  const auto& sig = model.signature();
  Json list = Json::array();
  for (const auto& fp : r.fixed_points) {
    Json certs = Json::array();
    for (const auto& cert : fp.certificates) {
      certs.push_back({{"variable", sig.name(cert.var)},
                       {"intervention", to_string(to_assignment(model, cert.provenance), sig)},
                       {"flipping_value", value(cert.flipping_value)}});
    }
    list.push_back({{"causes", var_set(sig, fp.causes)}, {"certificates", std::move(certs)}});
  }
  return Json{{"formula_holds", r.formula_holds},
              {"candidates_checked", r.formula_holds ? (std::uint64_t{1} << model.endo_count()) : 0},
              {"fixed_points", std::move(list)}};
}

Json property_summary(const PropertySummary& s, const RandomModelParams& params, std::size_t count,
                      std::uint64_t seed) {
  Json findings = Json::array();
  for (const auto& f : s.findings) findings.push_back({{"seed", f.seed}, {"check", f.check}, {"detail", f.detail}});
  return Json{{"count", count},
              {"seed", seed},
              {"params",
               {{"endogenous", params.endogenous},
                {"max_range", params.max_range},
                {"max_parents", params.max_parents},
                {"exogenous", params.exogenous}}},
              {"hp_within_putative", s.hp_in_putative_pass},
              {"fixed_points_checked", s.fixed_points_checked},
              {"fixed_points_passing_principles", s.fixed_point_principles_pass},
              {"oracle_agreement", s.oracle_pass},
              {"models_with_fixed_point", s.models_with_fixed_point},
              {"models_with_unique_fixed_point", s.models_with_unique_fixed_point},
              {"findings", std::move(findings)}};
}

Json envelope(const std::string& command, const std::string& model_id, const std::string& formula, Json payload,
              const std::vector<std::string>& warnings) {
  Json out{{"tool", "actual-cause"}, {"version", kVersion}, {"command", command}};
  if (!model_id.empty()) out["model"] = model_id;
  if (!formula.empty()) out["formula"] = formula;
  out["payload"] = std::move(payload);
  out["warnings"] = warnings;
  return out;
}

}  // namespace actual_cause::report
