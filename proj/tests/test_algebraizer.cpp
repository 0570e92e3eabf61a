#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "geoprove/algebraize.hpp"
#include "geoprove/errors.hpp"
#include "geoprove/json_io.hpp"
#include "test_util.hpp"

using namespace geoprove;

namespace {

std::string corpus(const std::string& name) {
  std::ifstream in(std::string(GEOPROVE_CORPUS_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PolySystem translate_corpus(const std::string& name) {
  auto c = parse_construction(corpus(name));
  Encoding enc = c.encoding.value_or(Encoding::Direct);
  return translate(c, enc);
}

// equal up to a nonzero rational factor (same zero set)
bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized() || a.normalized() == (-b).normalized();
}

}  // namespace

TEST_CASE("medians system is the eight-hypothesis system with its thesis") {
  auto sys = translate_corpus("medians.geo");
  REQUIRE(sys.hypotheses.size() == 8);
  auto t = sys.table;

  CHECK(sys.hypotheses[0].poly == parse_polynomial("2*e_1 - b_1 - c_1", t));
  CHECK(sys.hypotheses[1].poly == parse_polynomial("2*e_2 - b_2 - c_2", t));
  CHECK(sys.hypotheses[2].poly == parse_polynomial("2*d_1 - a_1 - c_1", t));
  CHECK(sys.hypotheses[3].poly == parse_polynomial("2*d_2 - a_2 - c_2", t));
  CHECK(sys.hypotheses[4].poly ==
        parse_polynomial("(g_1 - a_1)*(e_2 - a_2) - (g_2 - a_2)*(e_1 - a_1)", t));
  CHECK(sys.hypotheses[5].poly ==
        parse_polynomial("(g_1 - b_1)*(d_2 - b_2) - (g_2 - b_2)*(d_1 - b_1)", t));
  CHECK(sys.hypotheses[6].poly == parse_polynomial("2*f_1 - a_1 - b_1", t));
  CHECK(sys.hypotheses[7].poly == parse_polynomial("2*f_2 - a_2 - b_2", t));
  CHECK(sys.thesis ==
        parse_polynomial("(g_1 - c_1)*(f_2 - c_2) - (g_2 - c_2)*(f_1 - c_1)", t));

  CHECK(sys.free_points == std::vector<std::string>{"A", "B", "C"});
  CHECK(sys.free_vars.size() == 6);
  CHECK(sys.dependent_vars.size() == 8);
  // every dependent variable appears in at least one hypothesis
  for (std::uint32_t v : sys.dependent_vars) {
    bool seen = false;
    for (const auto& h : sys.hypotheses) {
      auto sup = h.poly.support_variables();
      seen = seen || std::find(sup.begin(), sup.end(), v) != sup.end();
    }
    CHECK(seen);
  }
  CHECK(!sys.thesis_normal_form().is_zero());
}

TEST_CASE("heights direct encoding gives the dot-product system") {
  auto sys = translate_corpus("heights_direct.geo");
  REQUIRE(sys.hypotheses.size() == 2);
  auto t = sys.table;
  // the intersection point P carries the aliases v19/v20 after the three
  // vertices, so the published alias forms parse against this table
  CHECK(sys.hypotheses[0].poly ==
        parse_polynomial("(v19-v13)*(v17-v15) + (v20-v14)*(v18-v16)", t));
  CHECK(sys.hypotheses[1].poly ==
        parse_polynomial("(v19-v15)*(v17-v13) + (v20-v16)*(v18-v14)", t));
  CHECK(sys.thesis == parse_polynomial("(v19-v17)*(v15-v13) + (v20-v18)*(v16-v14)", t));
  // thesis = H2 - H1 exactly
  CHECK(sys.thesis == sys.hypotheses[1].poly - sys.hypotheses[0].poly);
}

TEST_CASE("heights translation encoding reproduces the published ideal") {
  auto sys = translate_corpus("heights_translation.geo");
  REQUIRE(sys.hypotheses.size() == 8);
  auto t = sys.table;
  const char* expected[8] = {
      "-v20 + v17 - v15 + v14",
      "-v19 - v18 + v16 + v13",
      "-v22 - v17 + v16 + v13",
      "-v21 + v18 + v15 - v14",
      "-v24 + v18 + v15 - v13",
      "-v23 + v17 - v16 + v14",
      "v25*v20 - v26*v19 - v25*v14 + v19*v14 + v26*v13 - v20*v13",
      "v25*v22 - v26*v21 - v25*v16 + v21*v16 + v26*v15 - v22*v15",
  };
  for (int i = 0; i < 8; ++i)
    CHECK(sys.hypotheses[i].poly == parse_polynomial(expected[i], t));
  CHECK(sys.thesis ==
        parse_polynomial("v25*v24 - v26*v23 - v25*v18 + v23*v18 + v26*v17 - v24*v17", t));

  // substituting the auxiliary points reduces this thesis to the direct
  // encoding's thesis, so it is not trivially zero
  CHECK(!sys.thesis_normal_form().is_zero());
}

TEST_CASE("midpoint equidistance thesis simplifies to zero") {
  auto sys = translate_corpus("midpoint.geo");
  REQUIRE(sys.hypotheses.size() == 2);
  auto t = sys.table;
  CHECK(sys.hypotheses[0].poly == parse_polynomial("2*f_1 - a_1 - b_1", t));
  CHECK(!sys.thesis.is_zero());
  CHECK(sys.thesis_normal_form().is_zero());
}

TEST_CASE("degenerate predicate translates to the zero thesis") {
  auto c = parse_construction("point A\nthesis equal_length(A,A,A,A)");
  auto sys = translate(c, Encoding::Direct);
  CHECK(sys.thesis.is_zero());
  CHECK(sys.hypotheses.empty());
}

TEST_CASE("specializing the heights system matches the published equations") {
  auto sys = translate_corpus("heights_direct.geo");
  Specialization s;
  s.assignments.push_back({"A", {Rational(0), Rational(0)}});
  s.assignments.push_back({"B", {Rational(0), Rational(1)}});
  auto spec = specialize(sys, s);
  auto t = spec.table;

  CHECK(proportional(spec.hypotheses[0].poly,
                     parse_polynomial("v19*v17 + v20*(v18 - 1)", t)));
  CHECK(proportional(spec.hypotheses[1].poly,
                     parse_polynomial("v19*v17 + (v20 - 1)*v18", t)));
  CHECK(proportional(spec.thesis, parse_polynomial("v20 - v18", t)));
  CHECK(spec.free_vars.size() == 2);
  CHECK(spec.applied_specialization.size() == 4);
}

TEST_CASE("empty specialization leaves the system unchanged") {
  auto sys = translate_corpus("medians.geo");
  auto spec = specialize(sys, Specialization{});
  CHECK(to_json(spec).dump() == to_json(sys).dump());
}

TEST_CASE("specializing a dependent point is rejected") {
  auto sys = translate_corpus("medians.geo");
  Specialization s;
  s.assignments.push_back({"E", {Rational(0), Rational(0)}});
  CHECK_THROWS_AS(specialize(sys, s), NotAFreeVariableError);
}

TEST_CASE("default specialization pins the first two free points") {
  auto sys = translate_corpus("medians.geo");
  auto s = default_specialization(sys);
  REQUIRE(s.assignments.size() == 2);
  CHECK(s.assignments[0].first == "A");
  CHECK(s.assignments[0].second == std::make_pair(Rational(0), Rational(0)));
  CHECK(s.assignments[1].first == "B");
  CHECK(s.assignments[1].second == std::make_pair(Rational(0), Rational(1)));

  auto one_point = translate(
      parse_construction("point A\nthesis equal_length(A,A,A,A)"), Encoding::Direct);
  CHECK_THROWS_AS(default_specialization(one_point), NotEnoughFreePointsError);

  // once the anchors are pinned only C stays free, which is not enough
  auto specialized = specialize(sys, s);
  CHECK_THROWS_AS(default_specialization(specialized), NotEnoughFreePointsError);
}

TEST_CASE("random witnesses satisfy every hypothesis exactly") {
  std::mt19937_64 rng(20240511);
  for (const char* name :
       {"midpoint.geo", "medians.geo", "heights_direct.geo", "heights_translation.geo"}) {
    auto sys = translate_corpus(name);
    for (int i = 0; i < 25; ++i) {
      std::map<std::uint32_t, Rational> witness;
      try {
        witness = sample_witness(sys, rng);
      } catch (const DegenerateSampleError&) {
        continue;
      }
      for (const auto& h : sys.hypotheses)
        CHECK(h.poly.evaluate(witness) == Rational(0));
    }
  }
}

TEST_CASE("specialization preserves the zero set") {
  auto sys = translate_corpus("medians.geo");
  auto s = default_specialization(sys);
  auto spec = specialize(sys, s);

  std::map<std::uint32_t, Rational> forced;
  for (const auto& [v, value] : spec.applied_specialization) forced[v] = value;

  std::mt19937_64 rng(77);
  int done = 0;
  while (done < 100) {
    std::map<std::uint32_t, Rational> witness;
    try {
      witness = sample_witness(spec, rng, &forced);
    } catch (const DegenerateSampleError&) {
      continue;
    }
    ++done;
    for (const auto& h : spec.hypotheses)
      if (!h.poly.is_zero()) CHECK(h.poly.evaluate(witness) == Rational(0));
    CHECK(spec.thesis.evaluate(witness) == Rational(0));
  }
}

TEST_CASE("translation is deterministic") {
  auto a = to_json(translate_corpus("heights_translation.geo")).dump();
  auto b = to_json(translate_corpus("heights_translation.geo")).dump();
  CHECK(a == b);
}

TEST_CASE("coordinate naming survives case collisions") {
  auto c = parse_construction("point A\npoint a\nM = midpoint(A, a)\nthesis equal_length(M,A,M,a)");
  auto sys = translate(c, Encoding::Direct);
  CHECK(sys.table->size() == 6);
  CHECK(sys.table->contains("a_1"));
  CHECK(sys.table->contains("a2_1"));
  CHECK(sys.coordinates.at("A") != sys.coordinates.at("a"));
}

TEST_CASE("witnesses for parallel and point_on steps satisfy the hypotheses") {
  auto c = parse_construction(
      "point A\npoint B\npoint C\n"
      "ab = line(A, B)\n"
      "l = parallel(C, ab)\n"
      "P = point_on(l)\n"
      "ac = line(A, C)\n"
      "X = intersect(l, ac)\n"
      "cp = line(C, P)\n"
      "thesis parallel(cp, ab)\n");
  auto sys = translate(c, Encoding::Direct);
  std::mt19937_64 rng(31337);
  int done = 0;
  while (done < 30) {
    std::map<std::uint32_t, Rational> w;
    try {
      w = sample_witness(sys, rng);
    } catch (const DegenerateSampleError&) {
      continue;
    }
    ++done;
    for (const auto& h : sys.hypotheses) CHECK(h.poly.evaluate(w) == Rational(0));
    // C and P both lie on l, so CP runs parallel to AB
    CHECK(sys.thesis.evaluate(w) == Rational(0));
  }
}
