#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "actual_cause/meta.hpp"
#include "actual_cause/random.hpp"
#include "actual_cause/reference.hpp"

namespace actual_cause {
namespace {

struct ModelOutcome {
  bool hp_in_putative = true;
  std::size_t fixed_points = 0;
  std::size_t fixed_points_pass = 0;
  bool oracle = true;
  std::vector<PropertyFinding> findings;
};

ModelOutcome check_one(const RandomModelParams& params, std::uint64_t seed, const PropertyOptions& options) {
  ModelOutcome out;
  const RandomInstance inst = random_instance(params, seed);
  const CausalModel& m = inst.model;
  const Signature& sig = m.signature();
  const SearchLimits limits{params.endogenous, true};
  auto note = [&](std::string check, std::string detail) {
    out.findings.push_back({seed, std::move(check), std::move(detail)});
  };

  const VarSet hp = hp_causes(m, inst.phi, limits);

  if (options.check_hp_in_putative) {
    const VarSet putative = putative_set(m, inst.phi, hp, limits);
    if (!hp.is_subset_of(putative)) {
      out.hp_in_putative = false;
      note("hp-in-putative", "hp causes " + sig.set_text(hp) + " not within putative " + sig.set_text(putative) +
                                 " for " + to_string(*inst.phi, sig));
    }
  }

  if (options.check_fixed_points) {
    const auto result = find_empirical_fixed_points(m, inst.phi, limits);
    const std::string formula = to_string(*inst.phi, sig);
    for (const auto& fp : result.fixed_points) {
      ++out.fixed_points;
      std::vector<std::string> names;
      for (auto v : fp.causes) names.push_back(sig.name(v));
      const CausalTheory theory = table_theory("fixed-point", {{m.id(), formula, names}}, {&m});
      const auto similarity = check_similarity(m, inst.phi, theory, limits);
      const auto presumption = check_presumption(m, inst.phi, theory, limits);
      if (similarity.satisfied && presumption.satisfied) {
        ++out.fixed_points_pass;
      } else {
        note("fixed-point-principles", "fixed point " + sig.set_text(fp.causes) + " violates " +
                                           (similarity.satisfied ? "presumption" : "similarity"));
      }
    }
  }

  if (options.check_oracle) {
    auto compare = [&](const char* what, VarSet fast, VarSet slow) {
      if (fast == slow) return;
      out.oracle = false;
      note(std::string("oracle-") + what, "optimized " + sig.set_text(fast) + ", reference " + sig.set_text(slow));
    };
    compare("butfor", butfor_set(m, inst.phi), reference::butfor(m, inst.phi));
    compare("hp", hp, reference::hp_causes(m, inst.phi));
    compare("putative", putative_set(m, inst.phi, hp, limits), reference::putative(m, inst.phi, hp));

    const auto report = check_presumption(m, inst.phi, hp_theory(limits), limits);
    const VarSet violators = reference::presumption_violators(m, inst.phi, hp);
    VarSet reported;
    if (report.counterexample) reported.insert(report.counterexample->var);
    const VarSet first = violators.empty() ? VarSet{} : VarSet{*violators.begin()};
    compare("presumption", reported, first);
  }
  return out;
}

}  // namespace

PropertySummary property_suite(std::size_t count, const RandomModelParams& params, std::uint64_t seed,
                               const PropertyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ModelOutcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        outcomes[i] = check_one(params, seed + i, options);
      } catch (const std::exception& e) {
        outcomes[i].hp_in_putative = outcomes[i].oracle = false;
        outcomes[i].findings.push_back({seed + i, "error", e.what()});
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  PropertySummary s;
  s.models = count;
  for (auto& o : outcomes) {
    s.hp_in_putative_pass += o.hp_in_putative;
    s.fixed_points_checked += o.fixed_points;
    s.fixed_point_principles_pass += o.fixed_points_pass;
    s.oracle_pass += o.oracle;
    s.models_with_fixed_point += o.fixed_points > 0;
    s.models_with_unique_fixed_point += o.fixed_points == 1;
    std::move(o.findings.begin(), o.findings.end(), std::back_inserter(s.findings));
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace actual_cause
