#include <set>

#include "actual_cause/dsl.hpp"
#include "actual_cause/errors.hpp"
#include "actual_cause/theories.hpp"

namespace actual_cause {

void enforce_limits(const CausalModel& model, const SearchLimits& limits, std::string_view operation) {
  if (limits.force || model.endo_count() <= limits.max_vars) return;
  throw ResourceGuardError(std::string(operation) + " refused: model '" + model.id() + "' has " +
                           std::to_string(model.endo_count()) + " endogenous variables (bound " +
                           std::to_string(limits.max_vars) + "); raise the bound or force the search");
}

void WarningLog::add(std::string message) {
  std::lock_guard lock(mutex_);
  messages_.push_back(std::move(message));
}

std::vector<std::string> WarningLog::snapshot() const {
  std::lock_guard lock(mutex_);
  return messages_;
}

CausalTheory::CausalTheory(std::string name, CauseFn fn, std::shared_ptr<WarningLog> warnings)
    : name_(std::move(name)), fn_(std::move(fn)), warnings_(std::move(warnings)) {}

VarSet CausalTheory::causes(const CausalModel& model, const Matrix& phi) const {
  if (!holds(*phi, model.solution())) return {};
  return fn_(model, phi) & model.all_vars();
}

std::vector<std::string> CausalTheory::warnings() const {
  return warnings_ ? warnings_->snapshot() : std::vector<std::string>{};
}

CausalTheory butfor_theory() {
  return CausalTheory("butfor", [](const CausalModel& m, const Matrix& phi) { return butfor_set(m, phi); });
}

CausalTheory hp_theory(SearchLimits limits) {
  return CausalTheory("hp", [limits](const CausalModel& m, const Matrix& phi) { return hp_causes(m, phi, limits); });
}

CausalTheory table_theory(std::string name, const std::vector<TableEntry>& entries,
                          const std::vector<const CausalModel*>& models) {
  std::map<std::string, const CausalModel*> known;
  for (const auto* m : models) known.emplace(m->id(), m);

  std::map<std::pair<std::string, std::string>, VarSet> table;
  for (const auto& e : entries) {
    auto it = known.find(e.model_id);
    if (it == known.end()) continue;
    const Signature& sig = it->second->signature();
    auto parsed = parse_formula(e.formula, sig);
    if (!parsed.ok()) {
      throw Error("table '" + name + "': formula '" + e.formula + "' for model '" + e.model_id +
                  "' is invalid: " + parsed.diagnostics.front().message);
    }
    if (!parsed.value->intervention.empty()) {
      throw Error("table '" + name + "': formula '" + e.formula + "' must not carry an intervention");
    }
    VarSet causes;
    for (const auto& c : e.causes) {
      auto idx = sig.find_endogenous(c);
      if (!idx) {
        throw UnknownVariableError("table '" + name + "': cause '" + c + "' is not an endogenous variable of model '" +
                                   e.model_id + "'");
      }
      causes.insert(*idx);
    }
    auto key = std::make_pair(e.model_id, to_string(*parsed.value->matrix, sig));
    if (!table.emplace(key, causes).second) {
      throw Error("table '" + name + "': duplicate entry for (" + key.first + ", " + key.second + ")");
    }
  }

  auto log = std::make_shared<WarningLog>();
  std::set<std::string> ids;
  for (const auto& [id, _] : known) ids.insert(id);
  auto fn = [table = std::move(table), ids = std::move(ids), log, name](const CausalModel& m,
                                                                        const Matrix& phi) -> VarSet {
    if (!ids.contains(m.id())) {
      throw UnknownModelError("table '" + name + "' has no model '" + m.id() + "'");
    }
    auto key = std::make_pair(m.id(), to_string(*phi, m.signature()));
    auto it = table.find(key);
    if (it == table.end()) {
      log->add("table '" + name + "' has no entry for (" + key.first + ", " + key.second + "); answering {}");
      return {};
    }
    return it->second;
  };
  return CausalTheory(std::move(name), std::move(fn), log);
}

TheoryRegistry TheoryRegistry::with_builtins(SearchLimits limits) {
  TheoryRegistry r;
  r.add(butfor_theory());
  r.add(hp_theory(limits));
  return r;
}

void TheoryRegistry::add(CausalTheory theory) {
  auto name = theory.name();
  theories_.insert_or_assign(std::move(name), std::move(theory));
}

const CausalTheory* TheoryRegistry::find(std::string_view name) const {
  auto it = theories_.find(name);
  return it == theories_.end() ? nullptr : &it->second;
}

std::vector<std::string> TheoryRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : theories_) out.push_back(name);
  return out;
}

}  // namespace actual_cause
