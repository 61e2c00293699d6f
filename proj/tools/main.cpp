#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "actual_cause/corpus.hpp"
#include "actual_cause/dsl.hpp"
#include "actual_cause/errors.hpp"
#include "actual_cause/version.hpp"

using namespace actual_cause;
using report::Json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInputError = 2, kResourceGuard = 3 };

/// Raised for malformed input after its diagnostics have been printed.
struct InputError {};

struct Common {
  std::string model_path;
  std::string formula;
  std::string theory = "hp";
  std::string table;
  bool json = false;
  std::size_t max_vars = 0;
  bool force = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw InputError{};
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SearchLimits limits_for(const Common& c) {
  SearchLimits l;
  if (const char* env = std::getenv("ACTUAL_CAUSE_MAX_VARS")) {
    try {
      l.max_vars = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: ACTUAL_CAUSE_MAX_VARS must be a number, got '" << env << "'\n";
      throw InputError{};
    }
  }
  if (c.max_vars) l.max_vars = c.max_vars;
  l.force = c.force;
  return l;
}

CausalModel load_model(const std::string& path) {
  const std::string source = read_file(path);
  auto parsed = parse_model(source);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) std::cerr << format_diagnostic(source, d, path);
    throw InputError{};
  }
  return std::move(*parsed.value);
}

Formula load_formula(const std::string& text, const Signature& sig, bool allow_intervention) {
  auto parsed = parse_formula(text, sig);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) std::cerr << format_diagnostic(text, d, "<formula>");
    throw InputError{};
  }
  if (!allow_intervention && !parsed.value->intervention.empty()) {
    std::cerr << "error: the outcome formula must not carry an intervention: " << text << "\n";
    throw InputError{};
  }
  return std::move(*parsed.value);
}

CausalTheory pick_theory(const Common& c, const CausalModel& model, const SearchLimits& limits) {
  if (!c.table.empty()) {
    Json doc;
    try {
      doc = Json::parse(read_file(c.table));
      std::vector<TableEntry> entries;
      for (const auto& e : doc.at("entries")) {
        entries.push_back({e.at("model").get<std::string>(), e.at("formula").get<std::string>(),
                           e.at("causes").get<std::vector<std::string>>()});
      }
      return table_theory(doc.value("name", std::string("table")), entries, {&model});
    } catch (const Json::exception& e) {
      std::cerr << "error: table " << c.table << ": " << e.what() << "\n";
      throw InputError{};
    }
  }
  auto registry = TheoryRegistry::with_builtins(limits);
  if (const auto* t = registry.find(c.theory)) return *t;
  std::cerr << "error: unknown theory '" << c.theory << "'; known:";
  for (const auto& n : registry.names()) std::cerr << " " << n;
  std::cerr << "\n";
  throw InputError{};
}

std::string text_set(const Json& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i].get<std::string>();
  return out + "}";
}

std::string text_principle(const Json& p) {
  std::ostringstream out;
  out << p["principle"].get<std::string>() << " (" << p["theory"].get<std::string>()
      << "): " << p["verdict"].get<std::string>() << "\n";
  out << "  causes " << text_set(p["causes"]) << "\n";
  if (!p["counterexample"].is_null()) {
    const auto& c = p["counterexample"];
    out << "  counterexample: " << c["variable"].get<std::string>() << " (" << c["kind"].get<std::string>();
    if (c.contains("direction")) out << ", direction " << c["direction"].get<std::string>();
    out << ")\n";
    if (c.contains("provenance")) out << "    in " << c["provenance"]["intervention"].get<std::string>() << "\n";
    if (c.contains("flipping_value")) out << "    flipping value " << c["flipping_value"].get<std::string>() << "\n";
    for (const auto& ch : c["changes"]) {
      out << "    " << ch["variable"].get<std::string>() << ": " << ch["actual"].get<std::string>() << " -> "
          << ch["counterfactual"].get<std::string>() << "\n";
    }
    for (const auto& q : c["replay"]) {
      out << "    replay " << q["query"].get<std::string>() << " is " << (q["expected"].get<bool>() ? "true" : "false")
          << "\n";
    }
  }
  if (p.contains("certificates")) {
    for (const auto& cert : p["certificates"]) {
      out << "  witness for " << cert["variable"].get<std::string>() << ": " << cert["intervention"].get<std::string>()
          << "\n";
    }
  }
  return out.str();
}

void emit(const std::string& text) {
  std::cout << text;
  std::cout.flush();
}

void add_common(CLI::App* sub, Common& c, bool needs_formula) {
  sub->add_option("model", c.model_path, "Model file (.scm)")->required();
  auto* f = sub->add_option("--formula,-f", c.formula, "Outcome formula, e.g. \"(B = 0)\"");
  if (needs_formula) f->required();
  sub->add_flag("--json", c.json, "Emit a JSON report");
  sub->add_option("--max-vars", c.max_vars, "Bound on endogenous variables for exhaustive searches");
  sub->add_flag("--force", c.force, "Ignore the variable bound");
}

void add_theory(CLI::App* sub, Common& c) {
  sub->add_option("--theory,-t", c.theory, "Theory name (butfor, hp)");
  sub->add_option("--table", c.table, "JSON table theory file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite structural causal models: actual causes and meta-causal principles"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Common c;
  std::string query;
  std::string principle = "presumption";
  std::string cause_set;
  bool cause_set_given = false;
  std::size_t count = 500;
  std::uint64_t seed = 1;
  RandomModelParams params;
  std::string corpus_dir = ACTUAL_CAUSE_CORPUS_DIR;
  bool update = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a formula, possibly with an intervention prefix");
  eval->add_option("model", c.model_path, "Model file (.scm)")->required();
  eval->add_option("--query,-q", query, "Formula such as \"[J2 := 0](B = 0)\"")->required();
  eval->add_flag("--json", c.json, "Emit a JSON report");

  auto* solve_cmd = app.add_subcommand("solve", "Print the unique solution");
  solve_cmd->add_option("model", c.model_path, "Model file (.scm)")->required();
  solve_cmd->add_option("--intervene,-i", query, "Intervention such as \"[J2 := 1/2]\"");
  solve_cmd->add_flag("--json", c.json, "Emit a JSON report");

  auto* causes_cmd = app.add_subcommand("causes", "Compute the causes of a formula under a theory");
  add_common(causes_cmd, c, true);
  add_theory(causes_cmd, c);

  auto* classify_cmd = app.add_subcommand("classify", "Classify every variable relative to a theory");
  add_common(classify_cmd, c, true);
  add_theory(classify_cmd, c);

  auto* check = app.add_subcommand("check", "Check presumption, similarity or the empirical equation");
  add_common(check, c, true);
  add_theory(check, c);
  check->add_option("--principle,-p", principle, "presumption | similarity | empirical")
      ->check(CLI::IsMember({"presumption", "similarity", "empirical"}));
  check->add_option("--cause-set", cause_set, "Candidate set for the empirical check, e.g. J1,J2,B")
      ->each([&](const std::string&) { cause_set_given = true; });

  auto* fixed = app.add_subcommand("fixedpoints", "Enumerate empirical fixed points");
  add_common(fixed, c, true);

  auto* random = app.add_subcommand("random", "Run the seeded random-model property suite");
  random->add_option("--count,-n", count, "Number of models");
  random->add_option("--seed,-s", seed, "Seed of the first model");
  random->add_option("--vars", params.endogenous, "Endogenous variables per model")->check(CLI::Range(1, 12));
  random->add_option("--max-range", params.max_range, "Largest range size")->check(CLI::Range(2, 16));
  random->add_option("--max-parents", params.max_parents, "Largest parent count");
  random->add_option("--exo", params.exogenous, "Exogenous variables per model");
  random->add_flag("--json", c.json, "Emit a JSON report");

  auto* golden = app.add_subcommand("golden", "Check the corpus against its golden files");
  golden->add_option("--corpus", corpus_dir, "Corpus directory");
  golden->add_flag("--update", update, "Rewrite the pinned reports in the golden files");
  golden->add_flag("--json", c.json, "Emit a JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    const SearchLimits limits = limits_for(c);

    if (*eval) {
      const CausalModel model = load_model(c.model_path);
      const Formula f = load_formula(query, model.signature(), true);
      const bool value = evaluate(model, f);
      const std::string canonical = to_string(f, model.signature());
      if (c.json) {
        emit(report::envelope("eval", model.id(), canonical, Json{{"query", canonical}, {"value", value}}).dump(2) +
             "\n");
      } else {
        emit(canonical + " is " + (value ? "true" : "false") + "\n");
      }
      return kOk;
    }

    if (*solve_cmd) {
      const CausalModel base = load_model(c.model_path);
      Assignment a;
      if (!query.empty()) {
        // Reuse the formula grammar: the intervention prefix of "[...](V = v)".
        const auto& first = base.signature().name(0);
        const Formula f = load_formula(query + "(" + first + " = " + base.signature().range(0)[0].to_string() + ")",
                                       base.signature(), true);
        a = f.intervention;
      }
      const CausalModel model = intervene(base, a);
      const Json sol = report::solution(model, model.solution());
      if (c.json) {
        emit(report::envelope("solve", model.id(), "", Json{{"intervention", to_string(a, model.signature())},
                                                            {"solution", sol}})
                 .dump(2) +
             "\n");
      } else {
        std::string out;
        for (const auto& [k, v] : sol.items()) out += k + " = " + v.get<std::string>() + "\n";
        emit(out);
      }
      return kOk;
    }

    if (*golden) {
      auto entries = load_corpus(corpus_dir);
      if (update) {
        for (auto& e : entries) {
          e.golden["reports"] = golden_reports(e, limits);
          std::ofstream out(e.golden_path, std::ios::binary);
          out << e.golden.dump(2) << "\n";
        }
      }
      const auto checks = run_golden(entries, limits);
      std::size_t failed = 0;
      Json list = Json::array();
      std::string text;
      for (const auto& g : checks) {
        failed += !g.pass;
        list.push_back({{"entry", g.entry}, {"operation", g.operation}, {"pass", g.pass}});
        if (!g.pass) {
          list.back()["expected"] = g.expected;
          list.back()["actual"] = g.actual;
        }
        text += std::string(g.pass ? "PASS " : "FAIL ") + g.entry + " " + g.operation + "\n";
        if (!g.pass) text += "  expected " + g.expected + "\n  actual   " + g.actual + "\n";
      }
      if (c.json) {
        emit(report::envelope("golden", "", "", Json{{"checks", list}, {"failed", failed}}).dump(2) + "\n");
      } else {
        emit(text + std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " golden checks pass\n");
      }
      return failed ? kViolation : kOk;
    }

    if (*random) {
      const auto summary = property_suite(count, params, seed);
      const Json payload = report::property_summary(summary, params, count, seed);
      if (c.json) {
        emit(report::envelope("random", "", "", payload).dump(2) + "\n");
      } else {
        std::ostringstream out;
        out << "models: " << count << " (seed " << seed << ", " << params.endogenous << " variables, ranges <= "
            << params.max_range << ")\n"
            << "hp within putative(hp): " << summary.hp_in_putative_pass << "/" << count << "\n"
            << "fixed points passing similarity and presumption: " << summary.fixed_point_principles_pass << "/"
            << summary.fixed_points_checked << "\n"
            << "agreement with the reference implementation: " << summary.oracle_pass << "/" << count << "\n"
            << "models with a fixed point: " << summary.models_with_fixed_point << " (unique: "
            << summary.models_with_unique_fixed_point << ")\n";
        for (const auto& f : summary.findings) out << "finding seed " << f.seed << " " << f.check << ": " << f.detail << "\n";
        emit(out.str());
      }
      return summary.clean() ? kOk : kViolation;
    }

    const CausalModel model = load_model(c.model_path);
    const Formula f = load_formula(c.formula, model.signature(), false);
    const Matrix& phi = f.matrix;
    const Signature& sig = model.signature();
    const std::string formula_text = to_string(*phi, sig);

    if (*fixed) {
      const Json payload = report::fixed_points(model, find_empirical_fixed_points(model, phi, limits));
      if (c.json) {
        emit(report::envelope("fixedpoints", model.id(), formula_text, payload).dump(2) + "\n");
      } else {
        std::string out = "empirical fixed points of " + formula_text + " in " + model.id() + ":\n";
        for (const auto& fp : payload["fixed_points"]) out += "  " + text_set(fp["causes"]) + "\n";
        if (payload["fixed_points"].empty()) out += "  none\n";
        emit(out);
      }
      return kOk;
    }

    if (*check && principle == "empirical") {
      VarSet candidate;
      std::stringstream names(cause_set);
      std::string name;
      while (std::getline(names, name, ',')) {
        if (name.empty()) continue;
        auto idx = sig.find_endogenous(name);
        if (!idx) {
          std::cerr << "error: --cause-set names unknown variable '" << name << "'\n";
          return kInputError;
        }
        candidate.insert(*idx);
      }
      if (!cause_set_given) candidate = pick_theory(c, model, limits)(model, phi);
      const auto r = check_empirical(model, phi, candidate, limits);
      const Json payload = report::principle(model, phi, r);
      emit(c.json ? report::envelope("check", model.id(), formula_text, payload).dump(2) + "\n"
                  : text_principle(payload));
      return r.satisfied ? kOk : kViolation;
    }

    const CausalTheory theory = pick_theory(c, model, limits);
    Json payload;
    std::string text;
    int code = kOk;
    if (*causes_cmd) {
      payload = report::causes(model, phi, theory, limits);
      text = theory.name() + " causes of " + formula_text + " in " + model.id() + ": " +
             text_set(payload["causes"]) + "\n";
      if (payload.contains("complex_causes")) {
        for (const auto& cc : payload["complex_causes"]) {
          const auto& w = cc["witnesses"][0];
          text += "  " + text_set(cc["variables"]) + " with setting " + w["setting"].dump() + ", fixed " +
                  w["fixed"].dump() + "\n";
        }
      }
    } else if (*classify_cmd) {
      payload = report::classification(model, classify(model, phi, theory, limits));
      for (const auto& v : payload["verdicts"]) {
        text += v["variable"].get<std::string>() + ": " + v["status"].get<std::string>() +
                (v["trivial"].get<bool>() ? " (trivial)" : "") + "\n";
        if (v["status"] == "preempted" || v["status"] == "putative-only-unclassified") {
          for (const auto& w : v["witnesses"]) text += "  putative in " + w["intervention"].get<std::string>() + "\n";
        }
      }
    } else {
      const auto p = *parse_principle(principle);
      const auto r = p == Principle::Presumption ? check_presumption(model, phi, theory, limits)
                                                 : check_similarity(model, phi, theory, limits);
      payload = report::principle(model, phi, r);
      text = text_principle(payload);
      code = r.satisfied ? kOk : kViolation;
    }
    const std::string command = *causes_cmd ? "causes" : *classify_cmd ? "classify" : "check";
    emit(c.json ? report::envelope(command, model.id(), formula_text, payload, theory.warnings()).dump(2) + "\n"
                : text);
    for (const auto& w : theory.warnings()) std::cerr << "warning: " << w << "\n";
    return code;
  } catch (const InputError&) {
    return kInputError;
  } catch (const ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
