#include <doctest.h>

#include "actual_cause/reference.hpp"
#include "support.hpp"

using namespace actual_cause;
using report::Json;

namespace {

/// Leaves of a nested-conditional lookup table.
std::size_t rows(const ExprNode& e) {
  if (e.op != ExprOp::IfThenElse) return 1;
  return rows(*e.operands[1]) + rows(*e.operands[2]);
}

}  // namespace

TEST_CASE("random models are reproducible") {
  const RandomModelParams p{4, 3, 2, 1};
  CHECK(random_model(p, 42) == random_model(p, 42));
  CHECK(serialize(random_model(p, 42)) == serialize(random_model(p, 42)));
  CHECK_FALSE(random_model(p, 42) == random_model(p, 43));
}

TEST_CASE("random tables are small and in range") {
  const RandomModelParams p{3, 2, 2, 1};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto m = random_model(p, seed);
    for (std::size_t v = 0; v < m.endo_count(); ++v) {
      const std::size_t args = m.signature().exo_count() + m.parents(v).size();
      CHECK(rows(*m.function(v)) <= (std::size_t{1} << args));
      CHECK(m.signature().range(v).size() == 2);
    }
  }
}

TEST_CASE("1000 random models validate") {
  const RandomModelParams p{4, 3, 3, 2};
  std::size_t valid = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) valid += validate(random_model(p, seed)).empty();
  CHECK(valid == 1000);
}

TEST_CASE("random models round-trip through the DSL") {
  const RandomModelParams p{4, 3, 2, 1};
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto m = random_model(p, seed);
    auto again = parse_model(serialize(m));
    REQUIRE(again.ok());
    CHECK(*again.value == m);
  }
}

TEST_CASE("random instance formula holds in the model") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = random_instance({4, 3, 2, 1}, seed);
    CHECK(holds(*inst.phi, inst.model.solution()));
  }
}

TEST_CASE("small property sweep is clean and thread-count independent") {
  const RandomModelParams p{3, 3, 2, 1};
  auto one = property_suite(40, p, 9, {true, true, true, 1});
  auto many = property_suite(40, p, 9, {true, true, true, 4});
  CHECK(one.clean());
  CHECK(one.hp_in_putative_pass == 40);
  CHECK(one.oracle_pass == 40);
  CHECK(one.fixed_point_principles_pass == one.fixed_points_checked);
  CHECK(report::property_summary(one, p, 40, 9) == report::property_summary(many, p, 40, 9));
}

TEST_CASE("reference implementations agree on the corpus") {
  for (const char* id : {"m1", "m2", "suzy", "antidote"}) {
    auto m = testing::corpus_model(id);
    auto phi = testing::phi(m, std::string(id) == "suzy" ? "(G = 1)" : "(B = 0)");
    const VarSet hp = hp_causes(m, phi);
    CHECK(reference::hp_causes(m, phi) == hp);
    CHECK(reference::butfor(m, phi) == butfor_set(m, phi));
    CHECK(reference::putative(m, phi, hp) == putative_set(m, phi, hp));
    std::vector<VarSet> fast;
    for (const auto& fp : find_empirical_fixed_points(m, phi).fixed_points) fast.push_back(fp.causes);
    CHECK(reference::empirical_fixed_points(m, phi) == fast);
    CHECK(reference::presumption_violators(m, phi, hp).empty() == check_presumption(m, phi, hp_theory()).satisfied);
  }
}

TEST_CASE("JSON values round-trip") {
  for (auto v : {Rational(0), Rational(-3), Rational(7, 9), Rational(-1, 2)}) {
    CHECK(report::parse_value(report::value(v)) == v);
  }
  CHECK(report::value(Rational(1, 2)) == "1/2");
  CHECK_THROWS((void)report::parse_value(Json(3)));
}

TEST_CASE("reports are deterministic and survive a dump/parse cycle") {
  auto m = testing::corpus_model("m2");
  auto phi = testing::phi(m, "(B = 0)");
  auto build = [&] {
    return report::envelope("check", m.id(), "(B = 0)",
                            report::principle(m, phi, check_presumption(m, phi, hp_theory())));
  };
  const Json a = build();
  CHECK(a.dump() == build().dump());
  CHECK(Json::parse(a.dump()) == a);
  const auto& cx = a["payload"]["counterexample"];
  CHECK(cx["variable"] == "J1");
  CHECK(cx["provenance"]["intervention"] == "[J2 := 1/2]");
  for (const auto& q : cx["replay"]) {
    CHECK(evaluate(m, testing::formula(m, q["query"].get<std::string>())) == q["expected"].get<bool>());
  }
}

TEST_CASE("golden corpus") {
  auto entries = load_corpus(ACTUAL_CAUSE_CORPUS_DIR);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].id == "m1");
  CHECK(entries[3].id == "antidote");
  for (const auto& g : run_golden(entries)) {
    INFO(g.entry << " " << g.operation << "\nexpected " << g.expected << "\nactual   " << g.actual);
    CHECK(g.pass);
  }
}
