// Acceptance criteria, one line each. Exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "actual_cause/reference.hpp"
#include "support.hpp"

using namespace actual_cause;
using testing::corpus_model;
using testing::vars;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  failures += !o.pass;
  std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", n, o.pass ? "PASS" : "FAIL", title, secs,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

bool replays(const CausalModel& m, const Matrix& phi, const Counterexample& cx) {
  const auto queries = replay_queries(m, phi, cx);
  if (queries.empty()) return false;
  for (const auto& q : queries) {
    if (evaluate(m, testing::formula(m, to_string(q.formula, m.signature()))) != q.expected) return false;
  }
  // The reported deltas are exactly those of the replayed model.
  const auto cf = intervene(m, to_assignment(m, *cx.provenance));
  return changed_variables(m.solution(), cf.solution(), m.all_vars()) == cx.changes;
}

std::string fixed_point_text(const CausalModel& m, const FixedPointResult& r) {
  std::string out;
  for (const auto& fp : r.fixed_points) out += m.signature().set_text(fp.causes);
  return out;
}

const RandomModelParams kSweep{4, 3, 3, 1};
constexpr std::size_t kSweepCount = 500;
constexpr std::uint64_t kSweepSeed = 20240601;

}  // namespace

int main() {
  const auto m1 = corpus_model("m1");
  const auto m2 = corpus_model("m2");
  const auto suzy = corpus_model("suzy");
  const auto antidote = corpus_model("antidote");
  const auto b1 = testing::phi(m1, "(B = 0)");
  const auto b2 = testing::phi(m2, "(B = 0)");
  const auto g = testing::phi(suzy, "(G = 1)");
  const auto ba = testing::phi(antidote, "(B = 0)");
  const auto hp = hp_theory();

  criterion(1, "solutions of m1 and m2", [&] {
    Outcome o;
    const Solution want{Rational(1, 2), Rational(1), Rational(0)};
    o.require(solve(m1) == want, "m1");
    o.require(solve(m2) == want, "m2");
    return o;
  });

  criterion(2, "but-for causes", [&] {
    Outcome o;
    o.require(butfor_set(m1, b1) == vars(m1, {"B"}), "m1");
    o.require(butfor_set(m2, b2) == vars(m2, {"J2", "B"}), "m2");
    o.require(butfor_set(antidote, ba) == vars(antidote, {"J2", "J3", "B"}), "antidote");
    o.require(butfor_set(suzy, g).is_subset_of(atom_vars(*g)), "suzy has a non-trivial but-for cause");
    return o;
  });

  criterion(3, "HP causes", [&] {
    Outcome o;
    o.require(hp_causes(m1, b1) == vars(m1, {"J1", "J2", "B"}), "m1");
    o.require(!hp_causes(m2, b2).contains(0), "J1 in HP(m2)");
    bool s_found = false;
    for (const auto& c : hp_complex_causes(suzy, g, {true, {}})) {
      if (c.variables != vars(suzy, {"S"})) continue;
      for (const auto& w : c.witnesses) s_found = s_found || w.fixed == vars(suzy, {"H_B"});
    }
    o.require(s_found, "{S} with W = {H_B} in suzy");
    o.require(!hp_causes(antidote, ba).contains(0), "J1 in HP(antidote)");
    return o;
  });

  criterion(4, "preempted causes", [&] {
    Outcome o;
    o.require(classify(m2, b2, hp).verdicts[0].status == CauseStatus::Preempted, "J1 in m2");
    o.require(classify(suzy, g, hp).verdicts[1].status == CauseStatus::Preempted, "B in suzy");
    return o;
  });

  criterion(5, "presumption under HP", [&] {
    Outcome o;
    const auto r2 = check_presumption(m2, b2, hp);
    o.require(!r2.satisfied && r2.counterexample && r2.counterexample->var == 0, "m2 not violated at J1");
    if (r2.counterexample) o.require(replays(m2, b2, *r2.counterexample), "m2 counterexample does not replay");
    const auto ra = check_presumption(antidote, ba, hp);
    o.require(!ra.satisfied && ra.counterexample && ra.counterexample->var == 0, "antidote not violated at J1");
    if (ra.counterexample) o.require(replays(antidote, ba, *ra.counterexample), "antidote counterexample does not replay");
    o.require(check_presumption(suzy, g, hp).satisfied, "suzy violated");
    return o;
  });

  criterion(6, "empirical fixed points", [&] {
    Outcome o;
    o.require(fixed_point_text(m2, find_empirical_fixed_points(m2, b2)) == "{J1, J2, B}", "m2");
    o.require(fixed_point_text(suzy, find_empirical_fixed_points(suzy, g)) == "{S, H_S, G}", "suzy");
    o.require(fixed_point_text(antidote, find_empirical_fixed_points(antidote, ba)) == "{J1, J2, J3, B}", "antidote");
    const auto r = check_empirical(m2, b2, vars(m2, {"J2", "B"}));
    o.require(!r.satisfied && r.counterexample && r.counterexample->var == 0 &&
                  r.counterexample->kind == ViolationKind::SpuriousWitness,
              "{J2, B} in m2 does not fail at J1 in direction <=");
    return o;
  });

  PropertySummary sweep;
  criterion(7, "HP within putative(HP) on 500 random models", [&] {
    Outcome o;
    sweep = property_suite(kSweepCount, kSweep, kSweepSeed, {true, true, false, 0});
    o.require(sweep.models >= 500, "fewer than 500 models");
    o.require(sweep.hp_in_putative_pass == sweep.models,
              std::to_string(sweep.models - sweep.hp_in_putative_pass) + " violations");
    o.require(sweep.seconds <= 60, "over the 60 s budget");
    for (const auto& f : sweep.findings) {
      if (f.check == "hp-in-putative") o.require(false, "seed " + std::to_string(f.seed) + ": " + f.detail);
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(sweep.hp_in_putative_pass) + "/" +
                std::to_string(sweep.models) + " models";
    return o;
  });

  criterion(8, "fixed points satisfy similarity and presumption on the same sweep", [&] {
    Outcome o;
    o.require(sweep.fixed_point_principles_pass == sweep.fixed_points_checked,
              std::to_string(sweep.fixed_points_checked - sweep.fixed_point_principles_pass) + " violations");
    o.require(sweep.seconds <= 120, "over the 120 s budget");
    for (const auto& f : sweep.findings) {
      if (f.check != "hp-in-putative") o.require(false, "seed " + std::to_string(f.seed) + ": " + f.detail);
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(sweep.fixed_points_checked) +
                " fixed points checked, " + std::to_string(sweep.models_with_fixed_point) + "/" +
                std::to_string(sweep.models) + " models have one";
    return o;
  });

  criterion(9, "optimized and reference implementations agree on 200 random models", [&] {
    Outcome o;
    const auto s = property_suite(200, kSweep, kSweepSeed + 100000, {false, false, true, 0});
    o.require(s.oracle_pass == 200, std::to_string(200 - s.oracle_pass) + " disagreements");
    for (const auto& f : s.findings) o.require(false, "seed " + std::to_string(f.seed) + " " + f.check + ": " + f.detail);
    return o;
  });

  criterion(10, "parser round-trip on the corpus and 100000 fuzzed inputs", [&] {
    Outcome o;
    std::vector<std::string> sources;
    for (const char* id : {"m1", "m2", "suzy", "antidote"}) {
      sources.push_back(testing::read(testing::corpus_path(std::string(id) + ".scm")));
      auto m = testing::model_from(sources.back());
      auto again = parse_model(serialize(m));
      o.require(again.ok() && *again.value == m && serialize(*again.value) == serialize(m),
                std::string("round-trip ") + id);
    }
    std::mt19937_64 rng(12345);
    std::size_t bad = 0;
    for (int i = 0; i < 100000; ++i) {
      std::string input;
      if (i % 2 == 0) {
        input.resize(rng() % 160);
        for (auto& ch : input) ch = static_cast<char>(rng() & 0xFF);
      } else {
        // Mutations of valid sources reach deeper into the grammar.
        input = sources[rng() % sources.size()];
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits && !input.empty(); ++e) {
          const std::size_t at = rng() % input.size();
          switch (rng() % 3) {
            case 0: input[at] = static_cast<char>(rng() & 0xFF); break;
            case 1: input.erase(at, 1 + rng() % 8); break;
            default: input.insert(at, 1, "{}()[],:=<>!+-*/#0123456789 \nUJBif"[rng() % 34]); break;
          }
        }
      }
      try {
        auto r = parse_model(input);
        bad += r.value.has_value() == !r.diagnostics.empty();
      } catch (...) {
        ++bad;
      }
    }
    o.require(bad == 0, std::to_string(bad) + " inputs without exactly one outcome");
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
