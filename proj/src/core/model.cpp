#include "actual_cause/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "actual_cause/errors.hpp"

namespace actual_cause {
namespace {

// Upper bound on argument tuples enumerated per equation during validation.
constexpr std::size_t kMaxTotalityTuples = 50'000'000;

std::string join_values(const std::vector<Value>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].to_string();
  }
  return out + "}";
}

}  // namespace

// ---------------------------------------------------------------- Signature

Signature::Signature(std::vector<VariableDecl> exogenous, std::vector<VariableDecl> endogenous)
    : exo_(std::move(exogenous)), endo_(std::move(endogenous)) {}

std::optional<VarRef> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < exo_.size(); ++i) {
    if (exo_[i].name == name) return VarRef{VarKind::Exogenous, i};
  }
  if (auto i = find_endogenous(name)) return VarRef{VarKind::Endogenous, *i};
  return std::nullopt;
}

std::optional<std::size_t> Signature::find_endogenous(std::string_view name) const {
  for (std::size_t i = 0; i < endo_.size(); ++i) {
    if (endo_[i].name == name) return i;
  }
  return std::nullopt;
}

const VariableDecl& Signature::decl(VarRef ref) const {
  return ref.kind == VarKind::Exogenous ? exo_.at(ref.index) : endo_.at(ref.index);
}

bool Signature::in_range(VarRef ref, const Value& v) const {
  const auto& range = decl(ref).range;
  return std::find(range.begin(), range.end(), v) != range.end();
}

std::string Signature::range_text(VarRef ref) const { return join_values(decl(ref).range); }

std::string Signature::set_text(VarSet vars) const {
  std::string out = "{";
  bool first = true;
  for (auto v : vars) {
    if (!first) out += ", ";
    first = false;
    out += endo_[v].name;
  }
  return out + "}";
}

std::string_view code_name(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::Lexical: return "lexical";
    case DiagnosticCode::Syntax: return "syntax";
    case DiagnosticCode::Duplicate: return "duplicate";
    case DiagnosticCode::UnknownName: return "unknown-name";
    case DiagnosticCode::Range: return "range";
    case DiagnosticCode::Cycle: return "cycle";
    case DiagnosticCode::Totality: return "totality";
    case DiagnosticCode::MissingContext: return "missing-context";
    case DiagnosticCode::EmptyRange: return "empty-range";
    case DiagnosticCode::Capacity: return "capacity";
    case DiagnosticCode::NestedIntervention: return "nested-intervention";
    case DiagnosticCode::ExogenousTarget: return "exogenous-target";
  }
  return "unknown";
}

// --------------------------------------------------------------- Assignment

Assignment::Assignment(std::vector<Binding> entries) : entries_(std::move(entries)) {
  VarSet seen;
  for (const auto& b : entries_) {
    if (b.var >= VarSet::kCapacity || seen.contains(b.var)) {
      throw Error("assignment lists variable #" + std::to_string(b.var) + " more than once");
    }
    seen.insert(b.var);
  }
}

Assignment Assignment::from_names(const Signature& sig, const std::vector<std::pair<std::string, Value>>& entries) {
  std::vector<Binding> out;
  for (const auto& [name, value] : entries) {
    auto ref = sig.find(name);
    if (!ref) throw UnknownVariableError("unknown variable '" + name + "'");
    if (ref->kind == VarKind::Exogenous) {
      throw ExogenousTargetError("cannot intervene on exogenous variable '" + name + "'");
    }
    if (!sig.in_range(*ref, value)) {
      throw RangeError("value " + value.to_string() + " is outside R(" + name + ") = " + sig.range_text(*ref));
    }
    out.push_back({ref->index, value});
  }
  return Assignment(std::move(out));
}

std::optional<Value> Assignment::find(std::size_t var) const {
  for (const auto& b : entries_) {
    if (b.var == var) return b.value;
  }
  return std::nullopt;
}

VarSet Assignment::vars() const {
  VarSet s;
  for (const auto& b : entries_) s.insert(b.var);
  return s;
}

// -------------------------------------------------------------- CausalModel

CausalModel::CausalModel(std::string id, Signature signature, std::vector<Expr> functions, std::vector<Value> context)
    : id_(std::move(id)),
      signature_(std::make_shared<const Signature>(std::move(signature))),
      functions_(std::move(functions)),
      context_(std::move(context)) {
  check_signature_and_context();
  derive_structure();
  if (issues_.empty()) check_totality();
  if (issues_.empty()) solve_actual();
}

CausalModel::CausalModel(const CausalModel& base, const Assignment& assignment)
    : id_(base.id_),
      signature_(base.signature_),
      functions_(base.functions_),
      context_(base.context_),
      frozen_(base.frozen_) {
  for (const auto& b : assignment.entries()) {
    if (b.var >= functions_.size()) {
      throw UnknownVariableError("unknown endogenous variable #" + std::to_string(b.var));
    }
    VarRef ref{VarKind::Endogenous, b.var};
    if (!signature_->in_range(ref, b.value)) {
      throw RangeError("value " + b.value.to_string() + " is outside R(" + signature_->name(b.var) +
                       ") = " + signature_->range_text(ref));
    }
    functions_[b.var] = ex::lit(b.value);
    frozen_.insert(b.var);
  }
  if (base.valid()) {
    // Constants are in range and unaffected equations were already checked.
    derive_structure();
    if (issues_.empty()) solve_actual();
  } else {
    check_signature_and_context();
    derive_structure();
    if (issues_.empty()) check_totality();
    if (issues_.empty()) solve_actual();
  }
}

void CausalModel::check_signature_and_context() {
  const auto& sig = *signature_;
  std::set<std::string> names;
  auto check_decl = [&](const VariableDecl& d) {
    if (!names.insert(d.name).second) {
      issues_.push_back({DiagnosticCode::Duplicate, {d.name}, "variable '" + d.name + "' is declared twice", {}});
    }
    if (d.range.empty()) {
      issues_.push_back({DiagnosticCode::EmptyRange, {d.name}, "range of '" + d.name + "' is empty", {}});
    }
    for (std::size_t i = 0; i < d.range.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (d.range[i] == d.range[j]) {
          issues_.push_back({DiagnosticCode::Duplicate, {d.name},
                             "range of '" + d.name + "' lists " + d.range[i].to_string() + " twice", {}});
        }
      }
    }
  };
  for (const auto& d : sig.exogenous()) check_decl(d);
  for (const auto& d : sig.endogenous()) check_decl(d);

  if (sig.endo_count() > VarSet::kCapacity) {
    issues_.push_back({DiagnosticCode::Capacity, {},
                       "at most " + std::to_string(VarSet::kCapacity) + " endogenous variables are supported", {}});
  }
  if (functions_.size() != sig.endo_count()) {
    issues_.push_back({DiagnosticCode::Syntax, {}, "expected one structural function per endogenous variable", {}});
  }
  if (context_.size() != sig.exo_count()) {
    issues_.push_back({DiagnosticCode::MissingContext, {},
                       "context assigns " + std::to_string(context_.size()) + " of " +
                           std::to_string(sig.exo_count()) + " exogenous variables",
                       {}});
  } else {
    for (std::size_t i = 0; i < context_.size(); ++i) {
      VarRef ref{VarKind::Exogenous, i};
      if (!sig.in_range(ref, context_[i])) {
        const auto& name = sig.exogenous()[i].name;
        issues_.push_back({DiagnosticCode::Range, {name},
                           "context value " + context_[i].to_string() + " is outside R(" + name +
                               ") = " + sig.range_text(ref),
                           {}});
      }
    }
  }
}

void CausalModel::derive_structure() {
  const auto& sig = *signature_;
  const std::size_t n = std::min(functions_.size(), VarSet::kCapacity);
  parents_.assign(functions_.size(), VarSet{});
  order_.clear();

  bool references_ok = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!functions_[v]) {
      issues_.push_back({DiagnosticCode::Syntax, {sig.name(v)}, "missing structural function", {}});
      references_ok = false;
      continue;
    }
    for_each_var(*functions_[v], [&](VarRef ref) {
      const std::size_t bound = ref.kind == VarKind::Exogenous ? sig.exo_count() : n;
      if (ref.index >= bound) {
        issues_.push_back({DiagnosticCode::UnknownName, {sig.name(v)},
                           "equation of '" + sig.name(v) + "' references an undeclared variable", {}});
        references_ok = false;
        return;
      }
      if (ref.kind == VarKind::Endogenous) parents_[v].insert(ref.index);
    });
  }
  if (!references_ok || n != functions_.size()) return;

  // Kahn's algorithm, smallest declaration index first.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = parents_[v].size();
  VarSet placed;
  while (order_.size() < n) {
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!placed.contains(v) && indegree[v] == 0) {
        next = v;
        break;
      }
    }
    if (next == n) break;
    placed.insert(next);
    order_.push_back(next);
    for (std::size_t w = 0; w < n; ++w) {
      if (parents_[w].contains(next)) --indegree[w];
    }
  }
  if (order_.size() == n) return;

  // Report each strongly connected component on a cycle.
  VarSet remaining = VarSet::all(n) - placed;
  auto reach = [&](std::size_t from) {
    VarSet seen;
    std::vector<std::size_t> stack{from};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : remaining) {
        if (parents_[w].contains(v) && !seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    return seen;
  };
  std::vector<VarSet> reach_of(n);
  for (auto v : remaining) reach_of[v] = reach(v);
  VarSet reported;
  for (auto v : remaining) {
    if (reported.contains(v) || !reach_of[v].contains(v)) continue;
    VarSet component;
    for (auto w : remaining) {
      if (reach_of[v].contains(w) && reach_of[w].contains(v)) component.insert(w);
    }
    reported = reported | component;
    std::vector<std::string> names;
    for (auto w : component) names.push_back(sig.name(w));
    issues_.push_back({DiagnosticCode::Cycle, names, "dependency cycle through " + sig.set_text(component), {}});
  }
  order_.clear();
}

void CausalModel::check_totality() {
  const auto& sig = *signature_;
  const std::size_t n = functions_.size();
  std::vector<Value> exo(sig.exo_count());
  std::vector<Value> endo(n);
  for (std::size_t v = 0; v < n; ++v) {
    // Distinct arguments in signature order: exogenous first, then endogenous.
    std::vector<VarRef> args;
    for_each_var(*functions_[v], [&](VarRef ref) {
      if (std::find(args.begin(), args.end(), ref) == args.end()) args.push_back(ref);
    });
    std::sort(args.begin(), args.end(), [](VarRef a, VarRef b) {
      if (a.kind != b.kind) return a.kind == VarKind::Exogenous;
      return a.index < b.index;
    });

    std::size_t tuples = 1;
    for (auto a : args) {
      tuples *= sig.decl(a).range.size();
      if (tuples > kMaxTotalityTuples) break;
    }
    if (tuples > kMaxTotalityTuples) {
      issues_.push_back({DiagnosticCode::Capacity, {sig.name(v)},
                         "equation of '" + sig.name(v) + "' has too many argument tuples to check exhaustively", {}});
      continue;
    }

    std::vector<std::size_t> digits(args.size(), 0);
    auto advance = [&] {
      // Odometer, last argument fastest.
      for (std::size_t i = args.size(); i-- > 0;) {
        if (++digits[i] < sig.decl(args[i]).range.size()) return true;
        digits[i] = 0;
      }
      return false;
    };
    VarRef target{VarKind::Endogenous, v};
    do {
      for (std::size_t i = 0; i < args.size(); ++i) {
        const Value& val = sig.decl(args[i]).range[digits[i]];
        (args[i].kind == VarKind::Exogenous ? exo : endo)[args[i].index] = val;
      }
      std::string failure;
      try {
        Value out = evaluate_expr(*functions_[v], exo, endo);
        if (!sig.in_range(target, out)) {
          failure = "evaluates to " + out.to_string() + ", outside R(" + sig.name(v) + ") = " + sig.range_text(target);
        }
      } catch (const ArithmeticError& e) {
        failure = std::string("arithmetic fault: ") + e.what();
      }
      if (!failure.empty()) {
        ModelIssue issue{DiagnosticCode::Totality, {sig.name(v)}, {}, {}};
        std::ostringstream at;
        for (std::size_t i = 0; i < args.size(); ++i) {
          const auto& d = sig.decl(args[i]);
          issue.witness.emplace_back(d.name, d.range[digits[i]]);
          at << (i ? ", " : "") << d.name << "=" << d.range[digits[i]];
        }
        issue.message = "equation of '" + sig.name(v) + "' is not total: at (" + at.str() + ") it " + failure;
        issues_.push_back(std::move(issue));
        break;
      }
    } while (advance());
  }
}

void CausalModel::solve_actual() {
  solution_.assign(functions_.size(), Value{});
  for (auto v : order_) solution_[v] = evaluate_expr(*functions_[v], context_, solution_);
}

const Solution& CausalModel::solution() const {
  if (!valid()) {
    throw InvalidModelError("model '" + id_ + "' failed validation: " + issues_.front().message);
  }
  return solution_;
}

void CausalModel::solve_into(const Overrides& overrides, std::span<Value> out) const {
  if (!valid()) {
    throw InvalidModelError("model '" + id_ + "' failed validation: " + issues_.front().message);
  }
  for (auto v : order_) {
    out[v] = overrides[v] ? *overrides[v] : evaluate_expr(*functions_[v], context_, out);
  }
}

bool operator==(const CausalModel& a, const CausalModel& b) {
  if (a.id_ != b.id_ || a.frozen_ != b.frozen_ || a.context_ != b.context_) return false;
  if (a.signature_ != b.signature_ && !(*a.signature_ == *b.signature_)) return false;
  if (a.functions_.size() != b.functions_.size()) return false;
  for (std::size_t i = 0; i < a.functions_.size(); ++i) {
    if (!a.functions_[i] || !b.functions_[i]) {
      if (a.functions_[i] != b.functions_[i]) return false;
      continue;
    }
    if (!structurally_equal(*a.functions_[i], *b.functions_[i])) return false;
  }
  return true;
}

std::vector<ModelIssue> validate(const CausalModel& model) {
  return {model.issues().begin(), model.issues().end()};
}

Solution solve(const CausalModel& model) { return model.solution(); }

CausalModel intervene(const CausalModel& model, const Assignment& assignment) {
  return CausalModel(model, assignment);
}

}  // namespace actual_cause
