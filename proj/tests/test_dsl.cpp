#include <doctest.h>

#include <random>

#include "actual_cause/errors.hpp"
#include "support.hpp"

using namespace actual_cause;

namespace {

ParseResult<CausalModel> parse(std::string_view text) { return parse_model(text); }

DiagnosticCode first_code(std::string_view text) {
  auto r = parse(text);
  REQUIRE_FALSE(r.ok());
  REQUIRE_FALSE(r.diagnostics.empty());
  return r.diagnostics.front().code;
}

}  // namespace

TEST_CASE("corpus files round-trip through the serializer") {
  for (const char* id : {"m1", "m2", "suzy", "antidote"}) {
    auto m = testing::corpus_model(id);
    const std::string text = serialize(m);
    auto again = parse(text);
    REQUIRE(again.ok());
    CHECK(*again.value == m);
    CHECK(serialize(*again.value) == text);
  }
}

TEST_CASE("frozen variables survive serialization") {
  auto m = intervene(testing::corpus_model("m2"), Assignment({{1, Rational(1, 2)}}));
  const std::string text = serialize(m);
  CHECK(text.find("# frozen") != std::string::npos);
  auto again = parse(text);
  REQUIRE(again.ok());
  CHECK(*again.value == m);
}

TEST_CASE("expression precedence is preserved") {
  auto m = testing::model_from(
      "model p\n"
      "var A in {0, 1, 2, 3, 4, 5, 6, 7, 8, 9} := 1 + 2 * 3\n"
      "var B in {0, 1, 2, 3, 4, 5, 6, 7, 8, 9} := (1 + 2) * 3\n"
      "var C in {0, 1} := not 1 = 0 and 1 or 0\n"
      "var D in {-1, 0, 1} := 0 - (1 - 1) - 1\n");
  CHECK(m.solution() == Solution{7, 9, 1, -1});
  auto again = parse(serialize(m));
  REQUIRE(again.ok());
  CHECK(*again.value == m);
}

TEST_CASE("diagnostics carry codes and spans") {
  SUBCASE("syntax") { CHECK(first_code("model x\nvar A in {0, 1} := \n") == DiagnosticCode::Syntax); }
  SUBCASE("duplicate") { CHECK(first_code("var A in {0} := 0\nvar A in {0} := 0\n") == DiagnosticCode::Duplicate); }
  SUBCASE("unknown name with suggestion") {
    auto r = parse("var Alpha in {0, 1} := 0\nvar B in {0, 1} := Alhpa\n");
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().code == DiagnosticCode::UnknownName);
    REQUIRE(r.diagnostics.front().suggestion);
    CHECK(r.diagnostics.front().suggestion->find("Alpha") != std::string::npos);
    const auto& span = r.diagnostics.front().span;
    CHECK(std::string_view("var Alpha in {0, 1} := 0\nvar B in {0, 1} := Alhpa\n").substr(span.begin, span.end - span.begin) ==
          "Alhpa");
  }
  SUBCASE("cycle") { CHECK(first_code("var A in {0, 1} := B\nvar B in {0, 1} := A\n") == DiagnosticCode::Cycle); }
  SUBCASE("totality") {
    auto r = parse("exo U in {0, 1}\nvar A in {0, 1} := U + 1\ncontext U = 0\n");
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().code == DiagnosticCode::Totality);
    CHECK(r.diagnostics.front().message.find("U") != std::string::npos);
  }
  SUBCASE("missing context") { CHECK(first_code("exo U in {0, 1}\nvar A in {0, 1} := U\n") == DiagnosticCode::MissingContext); }
  SUBCASE("context out of range") {
    CHECK(first_code("exo U in {0, 1}\nvar A in {0, 1} := U\ncontext U = 2\n") == DiagnosticCode::Range);
  }
  SUBCASE("lexical") { CHECK(first_code("var A in {0, 1} := 1x\n") == DiagnosticCode::Lexical); }
}

TEST_CASE("formula diagnostics") {
  auto m = testing::corpus_model("m1");
  SUBCASE("intervention outside the range is not defined") {
    auto r = parse_formula("[J2 := 0](B = 0)", m.signature());
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().code == DiagnosticCode::Range);
    CHECK(r.diagnostics.front().message.find("not defined") != std::string::npos);
  }
  SUBCASE("exogenous target") {
    auto r = parse_formula("[U1 := 0](B = 0)", m.signature());
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().code == DiagnosticCode::ExogenousTarget);
  }
  SUBCASE("nested intervention") {
    auto r = parse_formula("(B = 0) & [J1 := 0](B = 1)", m.signature());
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().code == DiagnosticCode::NestedIntervention);
  }
  SUBCASE("unknown variable") {
    auto r = parse_formula("(Q = 0)", m.signature());
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().code == DiagnosticCode::UnknownName);
  }
}

TEST_CASE("formula printing round-trips") {
  auto m = testing::corpus_model("m2");
  for (const char* text : {"(B = 0)", "[J2 := 1/2](B = 0)", "!((B = 0) & (J1 = 1/2))", "(J1 = 0) | !(B = 1)",
                           "[J1 := 0, J2 := 1/2]((B = 1) | (J2 = 0))"}) {
    auto f = testing::formula(m, text);
    auto again = testing::formula(m, to_string(f, m.signature()));
    CHECK(to_string(again, m.signature()) == to_string(f, m.signature()));
    CHECK(evaluate(m, again) == evaluate(m, f));
  }
}

TEST_CASE("format_diagnostic points at the offending text") {
  const std::string src = "var A in {0, 1} := B\n";
  auto r = parse(src);
  REQUIRE_FALSE(r.ok());
  const std::string out = format_diagnostic(src, r.diagnostics.front(), "x.scm");
  CHECK(out.rfind("x.scm:1:20: error[unknown-name]", 0) == 0);
  CHECK(out.find("^") != std::string::npos);
}

TEST_CASE("short fuzz: exactly one of model and diagnostics") {
  std::mt19937_64 rng(7);
  const std::string alphabet = "model exo var in context if then else and or not min max{}()[],:=!<>+-*&|#/.0123456789ABUXJ_\n ";
  for (int i = 0; i < 2000; ++i) {
    std::string s(rng() % 80, ' ');
    for (auto& ch : s) ch = alphabet[rng() % alphabet.size()];
    auto r = parse(s);
    CHECK(r.ok() == r.diagnostics.empty());
  }
}
