#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geoprove/errors.hpp"
#include "test_util.hpp"

using namespace geoprove;
using geoprove::testing::make_table;

TEST_CASE("parse a small construction") {
  auto c = parse_construction(
      "point A; point B; F = midpoint(A,B); thesis equal_length(F,A,F,B)");
  REQUIRE(c.steps.size() == 3);
  CHECK(c.steps[0].kind == StepKind::FreePoint);
  CHECK(c.steps[2].kind == StepKind::Midpoint);
  CHECK(c.thesis.kind == PredicateKind::EqualLength);
  CHECK(c.thesis.args == std::vector<std::string>{"F", "A", "F", "B"});
  CHECK(!c.encoding.has_value());
}

TEST_CASE("parse errors carry positions and kinds") {
  CHECK_THROWS_AS(parse_construction(""), MissingThesisError);
  CHECK_THROWS_AS(parse_construction("point A\n"), MissingThesisError);

  try {
    parse_construction("F = midpoint(A,B)\nthesis equal_length(F,F,F,F)");
    FAIL("expected UnknownReference");
  } catch (const UnknownReferenceError& e) {
    CHECK(e.name == "A");
    CHECK(e.line == 1);
  }

  CHECK_THROWS_AS(parse_construction("point A; point A; thesis collinear(A,A,A)"),
                  DuplicateNameError);

  try {
    parse_construction("point A\npoint B\nl = line(A B)\nthesis collinear(A,B,B)");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 1);
  }

  // type confusion is diagnosed at parse time
  CHECK_THROWS_AS(
      parse_construction("point A\npoint B\nl = line(A,B)\nthesis collinear(A,B,l)"),
      SyntaxError);
  // thesis arity
  CHECK_THROWS_AS(parse_construction("point A\npoint B\nthesis collinear(A,B)"),
                  SyntaxError);
  // a construction must have a free point
  CHECK_THROWS_AS(parse_construction("thesis collinear(A,B,C)"), UnknownReferenceError);
}

TEST_CASE("encoding pragma and comments") {
  auto c = parse_construction(
      "# heights, translated encoding\n"
      "encoding translation\n"
      "point A  # vertex\n"
      "point B\n"
      "l = line(A, B)\n"
      "P = point_on(l)\n"
      "thesis point_on_line(P, l)\n");
  REQUIRE(c.encoding.has_value());
  CHECK(*c.encoding == Encoding::Translation);
  CHECK(c.steps.size() == 4);
}

TEST_CASE("every step kind parses") {
  auto c = parse_construction(
      "point A; point B; point C\n"
      "M = midpoint(A, B)\n"
      "ab = line(A, B)\n"
      "p = perpendicular(C, ab)\n"
      "q = parallel(C, ab)\n"
      "X = intersect(p, ab)\n"
      "Y = point_on(q)\n"
      "thesis point_on_circle(Y, M, A)\n");
  CHECK(c.steps.size() == 9);
  CHECK(c.point_names() == std::vector<std::string>{"A", "B", "C", "M", "X", "Y"});
  CHECK(c.line_names() == std::vector<std::string>{"ab", "p", "q"});
  CHECK(c.free_point_names() == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("polynomial expression parsing") {
  auto t = make_table({"x", "y"});
  auto p = parse_polynomial("2*x^2*y - 3*y + 1", t);
  CHECK(p.term_count() == 3);
  CHECK(p.total_degree() == 3);
  CHECK(parse_polynomial("0", t).is_zero());
  CHECK(parse_polynomial("x^2 - x^2", t).is_zero());
  CHECK(parse_polynomial("(x + y)*(x - y)", t) == parse_polynomial("x^2 - y^2", t));
  CHECK(parse_polynomial("-1/2*x + 2/4", t) ==
        parse_polynomial("x - 1", t).scaled(Rational(-1, 2)));

  CHECK_THROWS_AS(parse_polynomial("x + z", t), UnknownVariableError);
  CHECK_THROWS_AS(parse_polynomial("x +", t), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("x ^ 99999999", t), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("1/0", t), SyntaxError);
}

TEST_CASE("round-trip: parse(render(p)) == p") {
  auto t = make_table({"x", "y", "z"});
  std::mt19937_64 rng(4321);
  auto orders = {MonomialOrder::lex({0, 1, 2}), MonomialOrder::grevlex({2, 0, 1})};
  int done = 0;
  while (done < 1000) {
    auto p = testing::random_polynomial(t, rng, 8, 5);
    for (const auto& ord : orders) {
      auto text = p.to_string(ord);
      CHECK(parse_polynomial(text, t) == p);
    }
    ++done;
  }
}

TEST_CASE("fuzzing the parsers never crashes undiagnosed") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> len(0, 60);
  std::uniform_int_distribution<int> byte(0, 255);
  auto t = make_table({"x", "y"});
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int n = len(rng);
    for (int j = 0; j < n; ++j) s += static_cast<char>(byte(rng));
    try {
      parse_construction(s);
    } catch (const Error&) {
      // diagnostic failures are the contract
    }
    try {
      parse_polynomial(s, t);
    } catch (const Error&) {
    }
  }
  // printable fuzz biased toward the grammar's alphabet
  std::string alphabet = "xy01+-*/^() .,;=#\nabpq";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int n = len(rng);
    for (int j = 0; j < n; ++j) s += alphabet[pick(rng)];
    try {
      parse_construction(s);
    } catch (const Error&) {
    }
    try {
      parse_polynomial(s, t);
    } catch (const Error&) {
    }
  }
}
