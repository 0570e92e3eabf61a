// Classic-figure regressions exercising every predicate and step kind
// through the full proving pipeline.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geoprove/prover.hpp"
#include "test_util.hpp"

using namespace geoprove;

namespace {

Certificate prove_source(const std::string& src, Encoding enc = Encoding::Direct) {
  auto c = parse_construction(src);
  auto sys = translate(c, enc);
  auto cert = prove(sys, system_order(sys, "tdeg"));
  if (cert.mode != TruthMode::Unproved) REQUIRE(verify_certificate(cert));
  return cert;
}

}  // namespace

TEST_CASE("parallelogram diagonals bisect each other") {
  // D closes the parallelogram as the meet of two parallels; M is the
  // midpoint of diagonal AD and must land on diagonal BC
  auto cert = prove_source(
      "point A\npoint B\npoint C\n"
      "ab = line(A, B)\nac = line(A, C)\n"
      "lb = parallel(B, ac)\nlc = parallel(C, ab)\n"
      "D = intersect(lb, lc)\n"
      "M = midpoint(A, D)\n"
      "thesis collinear(B, M, C)\n");
  CHECK(cert.mode == TruthMode::FormallyTrue);
  CHECK(cert.difficulty == Difficulty::of(1));
  CHECK(cert.minimized);
}

TEST_CASE("the midpoint of one diagonal bisects the other only for real triangles") {
  // the equal-length form fails on collapsed triangles, and the prover
  // finds exactly the triangle-area condition det(B-A, C-A) != 0
  auto cert = prove_source(
      "point A\npoint B\npoint C\n"
      "ab = line(A, B)\nac = line(A, C)\n"
      "lb = parallel(B, ac)\nlc = parallel(C, ab)\n"
      "D = intersect(lb, lc)\n"
      "M = midpoint(A, D)\n"
      "thesis equal_length(B, M, M, C)\n");
  CHECK(cert.mode == TruthMode::GenerallyTrue);
  REQUIRE(cert.nondegeneracy.size() == 1);
  auto area = parse_polynomial("(b_1 - a_1)*(c_2 - a_2) - (b_2 - a_2)*(c_1 - a_1)",
                               cert.table);
  CHECK(cert.nondegeneracy[0].normalized() == area.normalized());
  CHECK(cert.target == Polynomial::constant(cert.table, 1));
}

TEST_CASE("circumcenter is equidistant from all three vertices") {
  auto cert = prove_source(
      "point A\npoint B\npoint C\n"
      "ab = line(A, B)\nbc = line(B, C)\n"
      "M1 = midpoint(A, B)\nM2 = midpoint(B, C)\n"
      "p1 = perpendicular(M1, ab)\np2 = perpendicular(M2, bc)\n"
      "O = intersect(p1, p2)\n"
      "thesis point_on_circle(C, O, A)\n");
  CHECK(cert.mode == TruthMode::FormallyTrue);
  CHECK(cert.difficulty == Difficulty::of(1));
}

TEST_CASE("midline runs parallel to the base, by definition unfolding") {
  auto cert = prove_source(
      "point A\npoint B\npoint C\n"
      "D = midpoint(A, B)\nE = midpoint(A, C)\n"
      "de = line(D, E)\nbc = line(B, C)\n"
      "thesis parallel(de, bc)\n");
  CHECK(cert.mode == TruthMode::FormallyTrue);
  CHECK(cert.difficulty.trivial);
}

TEST_CASE("circumcenter theorem under the translated perpendicular encoding") {
  auto cert = prove_source(
      "point A\npoint B\npoint C\n"
      "ab = line(A, B)\nbc = line(B, C)\n"
      "M1 = midpoint(A, B)\nM2 = midpoint(B, C)\n"
      "p1 = perpendicular(M1, ab)\np2 = perpendicular(M2, bc)\n"
      "O = intersect(p1, p2)\n"
      "thesis point_on_circle(C, O, A)\n",
      Encoding::Translation);
  CHECK(cert.mode == TruthMode::FormallyTrue);
  CHECK(!cert.difficulty.trivial);
}

TEST_CASE("generally-true path works under the plex order too") {
  auto t = geoprove::testing::make_table({"x", "y"});
  PolySystem sys(t);
  sys.hypotheses.push_back(Hypothesis{"H1", "given", parse_polynomial("x*y", t)});
  sys.thesis = parse_polynomial("y", t);
  sys.thesis_text = "y = 0";
  sys.free_vars = {0};
  sys.dependent_vars = {1};
  auto cert = prove(sys, system_order(sys, "plex"));
  CHECK(cert.mode == TruthMode::GenerallyTrue);
  REQUIRE(cert.nondegeneracy.size() == 1);
  CHECK(cert.nondegeneracy[0].to_string() == "x");
}
