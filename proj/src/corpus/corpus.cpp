#include "actual_cause/corpus.hpp"

#include <fstream>
#include <sstream>

#include "actual_cause/dsl.hpp"
#include "actual_cause/errors.hpp"

namespace actual_cause {
namespace {

using report::Json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("corpus: cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json(const std::filesystem::path& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw Error("corpus: " + path.string() + " is not valid JSON: " + e.what());
  }
}

Json verdict_summary(const CausalModel& m, const PrincipleReport& r) {
  Json out{{"verdict", r.satisfied ? "satisfied" : "violated"}};
  if (r.counterexample) {
    out["variable"] = m.signature().name(r.counterexample->var);
    if (r.counterexample->provenance) {
      out["intervention"] = to_string(to_assignment(m, *r.counterexample->provenance), m.signature());
    }
  }
  return out;
}

/// Recomputes the "expected" block of a golden file.
Json expected_values(const CorpusEntry& e, const SearchLimits& limits) {
  const auto& m = e.model;
  const auto& sig = m.signature();
  const auto hp = hp_theory(limits);
  Json out;
  out["solution"] = report::solution(m, m.solution());
  out["butfor"] = report::var_set(sig, butfor_set(m, e.phi));
  out["hp"] = report::var_set(sig, hp(m, e.phi));
  Json statuses = Json::object();
  for (const auto& v : classify(m, e.phi, hp, limits).verdicts) statuses[sig.name(v.var)] = status_name(v.status);
  out["classification"] = std::move(statuses);
  out["presumption"] = verdict_summary(m, check_presumption(m, e.phi, hp, limits));
  out["similarity"] = verdict_summary(m, check_similarity(m, e.phi, hp, limits));
  Json fps = Json::array();
  for (const auto& fp : find_empirical_fixed_points(m, e.phi, limits).fixed_points) {
    fps.push_back(report::var_set(sig, fp.causes));
  }
  out["fixed_points"] = std::move(fps);
  if (e.golden["expected"].contains("empirical")) {
    Json checks = Json::array();
    for (const auto& c : e.golden["expected"]["empirical"]) {
      VarSet candidate;
      for (const auto& name : c["candidate"]) {
        auto idx = sig.find_endogenous(name.get<std::string>());
        if (!idx) throw Error("corpus: " + e.id + " names unknown variable " + name.dump());
        candidate.insert(*idx);
      }
      auto r = check_empirical(m, e.phi, candidate, limits);
      Json j{{"candidate", report::var_set(sig, candidate)}, {"verdict", r.satisfied ? "satisfied" : "violated"}};
      if (r.counterexample) {
        j["variable"] = sig.name(r.counterexample->var);
        j["direction"] = r.counterexample->kind == ViolationKind::MissingWitness ? "=>" : "<=";
      }
      checks.push_back(std::move(j));
    }
    out["empirical"] = std::move(checks);
  }
  return out;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  const Json index = read_json(dir / "index.json");
  std::vector<CorpusEntry> out;
  for (const auto& item : index.at("entries")) {
    const std::string id = item.at("id").get<std::string>();
    const auto model_path = dir / item.at("model").get<std::string>();
    const auto golden_path = dir / item.at("golden").get<std::string>();
    std::string source = read_file(model_path);
    auto parsed = parse_model(source);
    if (!parsed.ok()) {
      throw Error("corpus: " + model_path.string() + " does not parse:\n" +
                  format_diagnostic(source, parsed.diagnostics.front(), model_path.string()));
    }
    if (parsed.value->id() != id) {
      throw Error("corpus: " + model_path.string() + " declares model '" + parsed.value->id() + "', index says '" +
                  id + "'");
    }
    Json golden = read_json(golden_path);
    const std::string formula = golden.at("formula").get<std::string>();
    auto phi = parse_formula(formula, parsed.value->signature());
    if (!phi.ok() || !phi.value->intervention.empty()) {
      throw Error("corpus: " + golden_path.string() + " has an unusable formula '" + formula + "'");
    }
    const auto& expected = golden.at("expected");
    const auto& provenance = golden.at("provenance");
    for (const auto& [key, _] : expected.items()) {
      if (!provenance.contains(key)) throw Error("corpus: " + id + ": expectation '" + key + "' has no provenance");
      const auto kind = provenance[key].at("kind").get<std::string>();
      if (kind != "published" && kind != "derived") {
        throw Error("corpus: " + id + ": provenance kind '" + kind + "' is neither published nor derived");
      }
    }
    out.push_back(CorpusEntry{id, model_path, golden_path, std::move(source), std::move(*parsed.value), formula,
                              phi.value->matrix, std::move(golden)});
  }
  return out;
}

Json golden_reports(const CorpusEntry& e, const SearchLimits& limits) {
  const auto& m = e.model;
  const auto hp = hp_theory(limits);
  const auto bf = butfor_theory();
  Json out;
  out["causes_butfor"] = report::causes(m, e.phi, bf, limits);
  out["causes_hp"] = report::causes(m, e.phi, hp, limits);
  out["classify_hp"] = report::classification(m, classify(m, e.phi, hp, limits));
  out["presumption_hp"] = report::principle(m, e.phi, check_presumption(m, e.phi, hp, limits));
  out["similarity_hp"] = report::principle(m, e.phi, check_similarity(m, e.phi, hp, limits));
  out["similarity_butfor"] = report::principle(m, e.phi, check_similarity(m, e.phi, bf, limits));
  out["fixedpoints"] = report::fixed_points(m, find_empirical_fixed_points(m, e.phi, limits));
  return out;
}

std::vector<GoldenCheck> run_golden(const std::vector<CorpusEntry>& entries, const SearchLimits& limits) {
  std::vector<GoldenCheck> out;
  for (const auto& e : entries) {
    auto diff = [&](const std::string& op, const Json& want, const Json& got) {
      out.push_back({e.id, op, want == got, want.dump(), got.dump()});
    };
    const Json actual = expected_values(e, limits);
    for (const auto& [key, want] : e.golden.at("expected").items()) {
      diff(key, want, actual.contains(key) ? actual[key] : Json());
    }
    const Json reports = golden_reports(e, limits);
    const Json& pinned = e.golden.at("reports");
    for (const auto& [key, got] : reports.items()) {
      diff("report:" + key, pinned.contains(key) ? pinned[key] : Json(), got);
    }
  }
  return out;
}

}  // namespace actual_cause
