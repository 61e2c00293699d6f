#include <doctest.h>

#include <limits>

#include "actual_cause/counterfactual.hpp"
#include "actual_cause/errors.hpp"
#include "support.hpp"

using namespace actual_cause;
using testing::corpus_model;

TEST_CASE("rational arithmetic is exact and normalized") {
  Rational half(1, 2);
  CHECK(half + half == Rational(1));
  CHECK(Rational(2, 4) == half);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-1, 2).to_string() == "-1/2");
  CHECK(Rational(3).to_string() == "3");
  CHECK(Rational(1, 3) < half);
  CHECK(half * Rational(4) == Rational(2));
  CHECK(Rational(1) - half == half);
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("4/8") == Rational(1, 2));
  CHECK_FALSE(Rational::parse("1/0"));
  CHECK_FALSE(Rational::parse("abc"));
  CHECK_FALSE(Rational::parse(""));
  CHECK_FALSE(Rational::parse("1/"));
}

TEST_CASE("rational overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), ArithmeticError);
  CHECK_THROWS_AS(big * big, ArithmeticError);
}

TEST_CASE("subset enumeration is size then lexicographic") {
  SubsetEnumerator e(VarSet{0, 1, 2});
  std::vector<std::vector<std::size_t>> seen;
  VarSet s;
  while (e.next(s)) seen.push_back(s.to_vector());
  const std::vector<std::vector<std::size_t>> want{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  CHECK(seen == want);
}

TEST_CASE("corpus models solve to the published solutions") {
  for (const char* id : {"m1", "m2"}) {
    auto m = corpus_model(id);
    CHECK(m.solution() == Solution{Rational(1, 2), Rational(1), Rational(0)});
  }
  CHECK(corpus_model("suzy").solution() == Solution{1, 1, 1, 0, 1});
  CHECK(corpus_model("antidote").solution() == Solution{1, 1, 1, 0});
}

TEST_CASE("intervention replaces equations and later bindings win") {
  auto m = corpus_model("m2");
  auto cf = intervene(m, Assignment({{1, Rational(0)}}));
  CHECK(cf.solution()[2] == Rational(1));
  CHECK(cf.frozen() == VarSet{1});
  auto again = intervene(cf, Assignment({{1, Rational(1)}}));
  CHECK(again.solution() == m.solution());
  CHECK_THROWS_AS((void)intervene(m, Assignment({{1, Rational(2)}})), RangeError);
  CHECK_THROWS_AS((void)Assignment({{1, Rational(0)}, {1, Rational(1)}}), Error);
}

TEST_CASE("solve_into agrees with intervene") {
  auto m = corpus_model("suzy");
  Overrides ov(m.endo_count());
  ov[0] = Rational(0);
  ov[3] = Rational(0);
  Solution fast(m.endo_count());
  m.solve_into(ov, fast);
  auto slow = intervene(m, Assignment({{0, Rational(0)}, {3, Rational(0)}})).solution();
  CHECK(fast == slow);
  CHECK(fast[4] == Rational(0));
}

TEST_CASE("model equality is structural") {
  CHECK(corpus_model("m1") == corpus_model("m1"));
  CHECK_FALSE(corpus_model("m1") == corpus_model("m2"));
  auto m = corpus_model("m1");
  CHECK_FALSE(intervene(m, Assignment({{0, Rational(1, 2)}})) == m);
}

TEST_CASE("counterfactual space order and size") {
  auto m = corpus_model("m2");
  const VarSet x{1, 2};
  CounterfactualSpace space(m, x);
  Provenance p;
  std::size_t n = 0;
  std::vector<Provenance> first;
  while (space.next(p)) {
    if (n < 3) first.push_back(p);
    ++n;
  }
  CHECK(n == counterfactual_space_size(m, x));
  CHECK(n == 4 * 3 * 2);
  REQUIRE(first.size() == 3);
  CHECK(first[0] == Provenance{});
  CHECK(first[1] == Provenance{{}, {}, VarSet{0}});
  CHECK(first[2] == Provenance{VarSet{1}, {Rational(0)}, {}});
}

TEST_CASE("changed variables are listed in declaration order") {
  auto m = corpus_model("m2");
  auto cf = intervene(m, Assignment({{1, Rational(0)}}));
  auto changes = changed_variables(m.solution(), cf.solution(), m.all_vars());
  REQUIRE(changes.size() == 2);
  CHECK(changes[0] == VariableChange{1, Rational(1), Rational(0)});
  CHECK(changes[1] == VariableChange{2, Rational(0), Rational(1)});
}

TEST_CASE("formulas: negation, conjunction, interventions") {
  auto m = corpus_model("m1");
  CHECK(evaluate(m, testing::formula(m, "(B = 0)")));
  CHECK_FALSE(evaluate(m, testing::formula(m, "!(B = 0)")));
  CHECK(evaluate(m, testing::formula(m, "(J1 = 1/2) & (J2 = 1)")));
  CHECK(evaluate(m, testing::formula(m, "(J1 = 0) | (B = 0)")));
  CHECK(evaluate(m, testing::formula(m, "[J1 := 0, J2 := 1/2](B = 1)")));
  CHECK(evaluate(m, testing::formula(m, "[B := 1](B = 1)")));
}
