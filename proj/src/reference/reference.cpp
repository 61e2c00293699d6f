#include "actual_cause/reference.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace actual_cause::reference {
namespace {

std::vector<std::size_t> members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) out.push_back(i);
  }
  return out;
}

/// Calls fn(bindings) for every assignment of in-range values to `vars`.
void for_each_setting(const Signature& sig, const std::vector<std::size_t>& vars, std::vector<Binding>& prefix,
                      std::size_t i, const std::function<void(const std::vector<Binding>&)>& fn) {
  if (i == vars.size()) {
    fn(prefix);
    return;
  }
  for (const auto& v : sig.range(vars[i])) {
    prefix.push_back({vars[i], v});
    for_each_setting(sig, vars, prefix, i + 1, fn);
    prefix.pop_back();
  }
}

/// Every member of the counterfactual space of x, duplicates included.
void for_each_member(const CausalModel& m, std::uint64_t x, const std::function<void(const CausalModel&)>& fn) {
  const auto& actual = m.solution();
  const std::uint64_t full = m.all_vars().bits();
  const std::uint64_t rest = full & ~x;
  for (std::uint64_t a = 0; a <= x; ++a) {
    if ((a & ~x) != 0) continue;
    std::vector<Binding> prefix;
    for_each_setting(m.signature(), members(a), prefix, 0, [&](const std::vector<Binding>& set) {
      for (std::uint64_t b = 0; b <= rest; ++b) {
        if ((b & ~rest) != 0) continue;
        std::vector<Binding> all = set;
        for (auto w : members(b)) all.push_back({w, actual[w]});
        fn(intervene(m, Assignment(all)));
      }
    });
  }
}

bool is_butfor_in(const CausalModel& m, const Matrix& phi, std::size_t v) {
  if (!evaluate(m, phi)) return false;
  for (const auto& x : m.signature().range(v)) {
    if (!evaluate(m, Formula{Assignment({{v, x}}), fm::negate(phi)})) continue;
    return true;
  }
  return false;
}

bool ac2(const CausalModel& m, const Matrix& phi, std::uint64_t x) {
  const auto& actual = m.solution();
  const std::uint64_t rest = m.all_vars().bits() & ~x;
  bool found = false;
  for (std::uint64_t w = 0; w <= rest && !found; ++w) {
    if ((w & ~rest) != 0) continue;
    std::vector<Binding> prefix;
    for_each_setting(m.signature(), members(x), prefix, 0, [&](const std::vector<Binding>& set) {
      if (found) return;
      std::vector<Binding> all = set;
      for (auto v : members(w)) all.push_back({v, actual[v]});
      if (!evaluate(m, Formula{Assignment(all), phi})) found = true;
    });
  }
  return found;
}

void sort_size_lex(std::vector<VarSet>& sets) { std::sort(sets.begin(), sets.end(), size_lex_less); }

}  // namespace

VarSet butfor(const CausalModel& model, const Matrix& phi) {
  VarSet out;
  for (std::size_t v = 0; v < model.endo_count(); ++v) {
    if (is_butfor_in(model, phi, v)) out.insert(v);
  }
  return out;
}

std::vector<VarSet> hp_complex_causes(const CausalModel& model, const Matrix& phi) {
  std::vector<VarSet> satisfying;
  if (!evaluate(model, phi)) return satisfying;
  const std::uint64_t full = model.all_vars().bits();
  for (std::uint64_t x = 1; x <= full; ++x) {
    if (ac2(model, phi, x)) satisfying.emplace_back(x);
  }
  std::vector<VarSet> minimal;
  for (auto s : satisfying) {
    bool is_minimal = std::none_of(satisfying.begin(), satisfying.end(),
                                   [&](VarSet t) { return t.is_proper_subset_of(s); });
    if (is_minimal) minimal.push_back(s);
  }
  sort_size_lex(minimal);
  return minimal;
}

VarSet hp_causes(const CausalModel& model, const Matrix& phi) {
  VarSet out;
  for (auto s : hp_complex_causes(model, phi)) out = out | s;
  return out;
}

VarSet putative(const CausalModel& model, const Matrix& phi, VarSet causes) {
  const auto& actual = model.solution();
  VarSet out;
  for_each_member(model, causes.bits(), [&](const CausalModel& cf) {
    for (std::size_t v = 0; v < model.endo_count(); ++v) {
      if (cf.solution()[v] == actual[v] && is_butfor_in(cf, phi, v)) out.insert(v);
    }
  });
  return out;
}

VarSet presumption_violators(const CausalModel& model, const Matrix& phi, VarSet causes) {
  const auto& actual = model.solution();
  VarSet out;
  for_each_member(model, causes.bits(), [&](const CausalModel& cf) {
    for (std::size_t w = 0; w < model.endo_count(); ++w) {
      if (!causes.contains(w) && cf.solution()[w] != actual[w]) return;
    }
    for (std::size_t v = 0; v < model.endo_count(); ++v) {
      if (!causes.contains(v) && is_butfor_in(cf, phi, v)) out.insert(v);
    }
  });
  return out;
}

bool is_empirical(const CausalModel& model, const Matrix& phi, VarSet candidate) {
  const auto& actual = model.solution();
  VarSet witnessed;
  for_each_member(model, candidate.bits(), [&](const CausalModel& cf) {
    for (std::size_t w = 0; w < model.endo_count(); ++w) {
      if (!candidate.contains(w) && cf.solution()[w] != actual[w]) return;
    }
    for (std::size_t v = 0; v < model.endo_count(); ++v) {
      if (cf.solution()[v] == actual[v] && is_butfor_in(cf, phi, v)) witnessed.insert(v);
    }
  });
  return witnessed == candidate;
}

std::vector<VarSet> empirical_fixed_points(const CausalModel& model, const Matrix& phi) {
  if (!evaluate(model, phi)) return {VarSet{}};
  std::vector<VarSet> out;
  const std::uint64_t full = model.all_vars().bits();
  for (std::uint64_t c = 0; c <= full; ++c) {
    if (is_empirical(model, phi, VarSet(c))) out.emplace_back(c);
  }
  sort_size_lex(out);
  return out;
}

}  // namespace actual_cause::reference
