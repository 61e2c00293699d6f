#include <doctest.h>

#include "actual_cause/errors.hpp"
#include "actual_cause/theories.hpp"
#include "support.hpp"

using namespace actual_cause;
using testing::corpus_model;
using testing::vars;

TEST_CASE("but-for causes of the corpus") {
  auto m1 = corpus_model("m1");
  CHECK(butfor_set(m1, testing::phi(m1, "(B = 0)")) == vars(m1, {"B"}));
  auto m2 = corpus_model("m2");
  auto list = butfor_causes(m2, testing::phi(m2, "(B = 0)"));
  REQUIRE(list.size() == 2);
  CHECK(list[0].var == 1);
  CHECK(list[0].flipping_value == Rational(0));
  CHECK(list[1].flipping_value == Rational(1));
  auto a = corpus_model("antidote");
  CHECK(butfor_set(a, testing::phi(a, "(B = 0)")) == vars(a, {"J2", "J3", "B"}));
  auto s = corpus_model("suzy");
  CHECK(butfor_set(s, testing::phi(s, "(G = 1)")) == vars(s, {"G"}));
}

TEST_CASE("a false formula has no causes under any theory") {
  auto m = corpus_model("m2");
  auto phi = testing::phi(m, "(B = 1)");
  CHECK(butfor_set(m, phi).empty());
  CHECK(hp_causes(m, phi).empty());
  CHECK(butfor_theory()(m, phi).empty());
  CHECK(hp_theory()(m, phi).empty());
}

TEST_CASE("HP causes of the corpus") {
  auto m1 = corpus_model("m1");
  CHECK(hp_causes(m1, testing::phi(m1, "(B = 0)")) == vars(m1, {"J1", "J2", "B"}));
  auto m2 = corpus_model("m2");
  CHECK(hp_causes(m2, testing::phi(m2, "(B = 0)")) == vars(m2, {"J2", "B"}));
  auto a = corpus_model("antidote");
  CHECK_FALSE(hp_causes(a, testing::phi(a, "(B = 0)")).contains(0));
}

TEST_CASE("m1: {J1, J2} is a complex cause without fixed variables") {
  auto m = corpus_model("m1");
  auto causes = hp_complex_causes(m, testing::phi(m, "(B = 0)"));
  REQUIRE(causes.size() == 2);
  CHECK(causes[0].variables == vars(m, {"B"}));
  CHECK(causes[1].variables == vars(m, {"J1", "J2"}));
  REQUIRE(causes[1].witnesses.size() == 1);
  CHECK(causes[1].witnesses[0].setting == std::vector<Value>{Rational(0), Rational(1, 2)});
  CHECK(causes[1].witnesses[0].fixed.empty());
}

TEST_CASE("suzy: {S} is a complex cause with H_B fixed") {
  auto m = corpus_model("suzy");
  auto causes = hp_complex_causes(m, testing::phi(m, "(G = 1)"));
  REQUIRE_FALSE(causes.empty());
  CHECK(causes[0].variables == vars(m, {"S"}));
  const auto& w = causes[0].witnesses.at(0);
  CHECK(w.fixed == vars(m, {"H_B"}));
  CHECK(w.fixed_values == std::vector<Value>{Rational(0)});
  CHECK(w.setting == std::vector<Value>{Rational(0)});
}

TEST_CASE("all witnesses mode keeps the first witness first") {
  auto m = corpus_model("suzy");
  auto phi = testing::phi(m, "(G = 1)");
  auto first = hp_complex_causes(m, phi);
  auto all = hp_complex_causes(m, phi, {true, {}});
  REQUIRE(first.size() == all.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].variables == all[i].variables);
    CHECK(first[i].witnesses.front() == all[i].witnesses.front());
    CHECK(all[i].witnesses.size() >= 1);
  }
}

TEST_CASE("resource guard") {
  std::string text = "model wide\n";
  for (int i = 0; i < 13; ++i) text += "var X" + std::to_string(i) + " in {0, 1} := 1\n";
  auto m = testing::model_from(text);
  auto phi = testing::phi(m, "(X0 = 1)");
  CHECK_THROWS_AS((void)hp_causes(m, phi), ResourceGuardError);
  CHECK_NOTHROW((void)hp_causes(m, phi, {12, true}));
  CHECK_NOTHROW((void)butfor_set(m, phi));
}

TEST_CASE("table theories") {
  auto m2 = corpus_model("m2");
  auto m1 = corpus_model("m1");
  auto phi = testing::phi(m2, "(B = 0)");
  auto table = table_theory("t", {{"m2", "(B = 0)", {"J1", "B"}}, {"other", "(X = 1)", {"X"}}}, {&m2, &m1});
  CHECK(table(m2, phi) == vars(m2, {"J1", "B"}));
  CHECK(table.warnings().empty());

  SUBCASE("missing key answers the empty set with a warning") {
    CHECK(table(m2, testing::phi(m2, "(J1 = 1/2)")).empty());
    REQUIRE(table.warnings().size() == 1);
    CHECK(table.warnings()[0].find("(J1 = 1/2)") != std::string::npos);
  }
  SUBCASE("formula text is canonicalized") { CHECK(table(m2, testing::phi(m2, "((B = 0))")) == vars(m2, {"J1", "B"})); }
  SUBCASE("unknown model") {
    auto s = corpus_model("suzy");
    CHECK_THROWS_AS((void)table(s, testing::phi(s, "(G = 1)")), UnknownModelError);
  }
  SUBCASE("invalid cause name") {
    CHECK_THROWS_AS((void)table_theory("bad", {{"m2", "(B = 0)", {"Q"}}}, {&m2}), UnknownVariableError);
  }
  SUBCASE("false formula still answers the empty set") {
    auto t = table_theory("f", {{"m2", "(B = 1)", {"J1"}}}, {&m2});
    CHECK(t(m2, testing::phi(m2, "(B = 1)")).empty());
  }
}

TEST_CASE("registry") {
  auto r = TheoryRegistry::with_builtins();
  CHECK(r.names() == std::vector<std::string>{"butfor", "hp"});
  REQUIRE(r.find("hp"));
  CHECK_FALSE(r.find("nope"));
}
