#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "geoprove/errors.hpp"
#include "geoprove/json_io.hpp"
#include "geoprove/transcript.hpp"
#include "test_util.hpp"

using namespace geoprove;

namespace {

Construction corpus_construction(const std::string& name) {
  std::ifstream in(std::string(GEOPROVE_CORPUS_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_construction(buf.str());
}

struct Run {
  PolySystem sys;
  Specialization spec;
  Certificate cert;
};

Run run_corpus(const std::string& name, bool specialized, ProofRoute route) {
  auto c = corpus_construction(name);
  auto sys = translate(c, c.encoding.value_or(Encoding::Direct));
  Specialization spec;
  if (specialized) spec = default_specialization(sys);
  auto proved = specialized ? specialize(sys, spec) : sys;
  ProveOptions opts;
  opts.route = route;
  auto cert = prove(proved, system_order(proved, "tdeg"), opts);
  return Run{sys, spec, cert};
}

// "H3: <poly> = 0 (...)" -> "<poly>"; "lhs = rhs" combination -> rhs
std::string equation_payload(const std::string& line) {
  auto colon = line.find(": ");
  auto eq = line.rfind(" = 0");
  REQUIRE(colon != std::string::npos);
  REQUIRE(eq != std::string::npos);
  return line.substr(colon + 2, eq - colon - 2);
}

}  // namespace

TEST_CASE("specialized translation-encoding heights transcript (reductio)") {
  auto run = run_corpus("heights_translation.geo", true, ProofRoute::Reductio);
  auto text = render(run.sys, run.spec, run.cert, "text");

  CHECK(text.find("Statement is geometrically true") != std::string::npos);
  CHECK(text.find("Difficulty: 2") != std::string::npos);
  CHECK(text.find("Specialization") != std::string::npos);
  CHECK(text.find("A = (0, 0)") != std::string::npos);
  CHECK(text.find("B = (0, 1)") != std::string::npos);
  // pipeline order of the sections
  auto coords = text.find("Coordinates");
  auto hyps = text.find("Hypotheses");
  auto spec = text.find("Specialization");
  auto comb = text.find("Combination");
  CHECK(coords < hyps);
  CHECK(hyps < spec);
  CHECK(spec < comb);
}

TEST_CASE("midpoint transcript ends trivial") {
  auto run = run_corpus("midpoint.geo", false, ProofRoute::Ladder);
  auto text = render(run.sys, run.spec, run.cert, "text");
  CHECK(text.find("Statement is formally true") != std::string::npos);
  CHECK(text.find("Difficulty: trivial") != std::string::npos);
  CHECK(text.find("no specialization applied") != std::string::npos);
  CHECK(text.find("0 = 0") != std::string::npos);
}

TEST_CASE("combination line re-parses and expands to the target") {
  for (bool specialized : {false, true}) {
    auto run = run_corpus("medians.geo", specialized,
                          specialized ? ProofRoute::Reductio : ProofRoute::Ladder);
    auto t = build_transcript(run.sys, run.spec, run.cert);
    const auto& comb = t.sections.at(3);
    REQUIRE(comb.heading == "Combination");
    REQUIRE(comb.lines.size() == 1);
    const std::string& line = comb.lines[0];
    auto eq = line.find(" = ");
    REQUIRE(eq != std::string::npos);
    auto lhs = parse_polynomial(line.substr(0, eq), run.cert.table);
    auto rhs = parse_polynomial(line.substr(eq + 3), run.cert.table);
    CHECK(lhs == run.cert.target);
    CHECK(rhs == run.cert.target);
  }
}

TEST_CASE("every equation line re-parses") {
  auto run = run_corpus("heights_translation.geo", true, ProofRoute::Reductio);
  auto t = build_transcript(run.sys, run.spec, run.cert);
  for (const auto& section : t.sections) {
    if (section.heading != "Hypotheses" && section.heading != "Specialization") continue;
    for (const auto& line : section.lines) {
      if (line.find(" = 0") == std::string::npos) continue;
      auto payload = equation_payload(line);
      CHECK_NOTHROW(parse_polynomial(payload, run.sys.table));
    }
  }
}

TEST_CASE("unproved statements render without a combination") {
  auto run = run_corpus("falsehood.geo", false, ProofRoute::Ladder);
  auto text = render(run.sys, run.spec, run.cert, "text");
  CHECK(text.find("Statement is not proved") != std::string::npos);
  CHECK(text.find("no combination found") != std::string::npos);
}

TEST_CASE("rendering is byte-deterministic and json mirrors the text") {
  auto run = run_corpus("heights_direct.geo", false, ProofRoute::Ladder);
  auto a = render(run.sys, run.spec, run.cert, "text");
  auto b = render(run.sys, run.spec, run.cert, "text");
  CHECK(a == b);

  auto j = nlohmann::json::parse(render(run.sys, run.spec, run.cert, "json"));
  CHECK(j["mode"] == "Statement is formally true");
  CHECK(j["difficulty"] == "Difficulty: 0");
  REQUIRE(j["sections"].size() == 4);
  CHECK(j["sections"][0]["heading"] == "Coordinates");
  CHECK(j["sections"][1]["lines"][0]["n"] == 1);

  CHECK_THROWS_AS(render(run.sys, run.spec, run.cert, "latex"), std::invalid_argument);
}

TEST_CASE("a tampered certificate is refused") {
  auto run = run_corpus("heights_direct.geo", false, ProofRoute::Ladder);
  auto bad = run.cert;
  bad.cofactors[0] = bad.cofactors[0] + Polynomial::constant(bad.table, 1);
  CHECK_THROWS_AS(build_transcript(run.sys, run.spec, bad), UnverifiedCertificateError);
}

TEST_CASE("generally-true transcripts state the nondegeneracy condition") {
  auto t = geoprove::testing::make_table({"x", "y"});
  PolySystem sys(t);
  sys.hypotheses.push_back(Hypothesis{"H1", "given", parse_polynomial("x*y", t)});
  sys.thesis = parse_polynomial("y", t);
  sys.thesis_text = "y = 0";
  sys.free_vars = {0};
  sys.dependent_vars = {1};
  auto cert = prove(sys, system_order(sys, "tdeg"));
  REQUIRE(cert.mode == TruthMode::GenerallyTrue);
  auto text = render(sys, Specialization{}, cert, "text");
  CHECK(text.find("generally true under the nondegeneracy condition x != 0") !=
        std::string::npos);
}
