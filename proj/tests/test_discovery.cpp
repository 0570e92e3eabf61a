#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "geoprove/discovery.hpp"
#include "geoprove/errors.hpp"
#include "geoprove/json_io.hpp"
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

const CandidateStatement* find_candidate(const DiscoveryReport& report,
                                         const std::string& text) {
  for (const auto& c : report.candidates)
    if (c.text() == text) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("enumeration counts") {
  // triangle + three midpoints + centroid: seven points
  auto c = corpus_construction("medians.geo");
  auto collinear = enumerate_candidates(c, {PredicateKind::Collinear});
  CHECK(collinear.size() == 35);  // C(7,3)

  CHECK_THROWS_AS(enumerate_candidates(c, {}), std::invalid_argument);

  // two points give a single segment, so no equal-length pair survives
  auto two = parse_construction("point A\npoint B\nthesis equal_length(A,B,A,B)");
  CHECK(enumerate_candidates(two, {PredicateKind::EqualLength}).empty());

  // line pairs
  auto perp = enumerate_candidates(c, {PredicateKind::Perpendicular});
  CHECK(perp.size() == 3);  // C(3,2) over ae, bd, cf
}

TEST_CASE("prefilter accepts truths and refutes falsehoods with a witness") {
  auto c = corpus_construction("medians.geo");
  std::mt19937_64 rng(5);

  CandidateStatement truth{Predicate{PredicateKind::EqualLength, {"F", "A", "F", "B"}, 0}};
  auto ok = numeric_prefilter(c, Encoding::Direct, truth, 5, rng);
  CHECK(ok.status == CandidateStatus::NumericallyPlausible);

  CandidateStatement lie{Predicate{PredicateKind::Collinear, {"A", "B", "C"}, 0}};
  auto bad = numeric_prefilter(c, Encoding::Direct, lie, 5, rng);
  CHECK(bad.status == CandidateStatus::Refuted);
  REQUIRE(bad.witness_value.has_value());
  CHECK(!bad.witness_value->is_zero());
  CHECK(!bad.witness.empty());

  CHECK_THROWS_AS(numeric_prefilter(c, Encoding::Direct, truth, 0, rng),
                  std::invalid_argument);
}

TEST_CASE("prefilter redraws degenerate samples") {
  // X is the intersection of two lines through the SAME point pair, so
  // every sample is degenerate and must surface after the retries
  auto c = parse_construction(
      "point A\npoint B\nl = line(A,B)\nm = line(B,A)\nX = intersect(l,m)\n"
      "thesis collinear(A,B,X)");
  std::mt19937_64 rng(1);
  CandidateStatement cand{c.thesis};
  CHECK_THROWS_AS(numeric_prefilter(c, Encoding::Direct, cand, 3, rng),
                  DegenerateSampleError);
}

TEST_CASE("trials do not change the fate of a true statement") {
  auto c = corpus_construction("midpoint.geo");
  DiscoveryOptions one;
  one.kinds = {PredicateKind::EqualLength};
  one.trials = 1;
  DiscoveryOptions twenty = one;
  twenty.trials = 20;
  auto r1 = discover(c, Encoding::Direct, one);
  auto r20 = discover(c, Encoding::Direct, twenty);
  auto* c1 = find_candidate(r1, "equal_length(A, F, B, F)");
  auto* c20 = find_candidate(r20, "equal_length(A, F, B, F)");
  REQUIRE(c1);
  REQUIRE(c20);
  CHECK(c1->status == CandidateStatus::Proved);
  CHECK(c20->status == CandidateStatus::Proved);
}

TEST_CASE("discovery on the medians construction ranks concurrency on top") {
  auto c = corpus_construction("medians.geo");
  DiscoveryOptions opts;
  opts.kinds = {PredicateKind::Collinear, PredicateKind::EqualLength};
  opts.trials = 4;
  auto report = discover(c, Encoding::Direct, opts);

  // the medians statement: G on line CF, enumerated as collinear(C, G, F)
  auto* medians = find_candidate(report, "collinear(C, G, F)");
  REQUIRE(medians);
  REQUIRE(medians->status == CandidateStatus::Proved);
  CHECK(!medians->certificate->difficulty.trivial);
  CHECK(medians->certificate->difficulty.value >= 1);

  // midpoint facts are proved but trivial
  auto* equidistant = find_candidate(report, "equal_length(A, F, B, F)");
  REQUIRE(equidistant);
  CHECK(equidistant->status == CandidateStatus::Proved);
  CHECK(equidistant->certificate->difficulty.trivial);

  auto* on_segment = find_candidate(report, "collinear(A, B, F)");
  REQUIRE(on_segment);
  CHECK(on_segment->status == CandidateStatus::Proved);
  CHECK(on_segment->certificate->difficulty.trivial);

  // ranking: proved first, difficulty descending, trivial last
  std::size_t rank_medians = 0, rank_equidistant = 0, first_refuted = 0;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const auto& cand = report.candidates[i];
    if (cand.text() == "collinear(C, G, F)") rank_medians = i;
    if (cand.text() == "equal_length(A, F, B, F)") rank_equidistant = i;
    if (!first_refuted && cand.status == CandidateStatus::Refuted) first_refuted = i;
  }
  CHECK(rank_medians < rank_equidistant);
  CHECK(rank_medians < first_refuted);

  // no false positives: every proved certificate re-verifies; every
  // refuted candidate carries an exact nonzero witness value
  for (const auto& cand : report.candidates) {
    if (cand.status == CandidateStatus::Proved) {
      REQUIRE(cand.certificate.has_value());
      CHECK(verify_certificate(*cand.certificate));
    }
    if (cand.status == CandidateStatus::Refuted) {
      REQUIRE(cand.witness_value.has_value());
      CHECK(!cand.witness_value->is_zero());
    }
  }
}

TEST_CASE("reports are deterministic for a fixed seed and parallel-safe") {
  auto c = corpus_construction("medians.geo");
  DiscoveryOptions opts;
  opts.kinds = {PredicateKind::Collinear};
  opts.trials = 3;
  opts.seed = 12;
  auto a = to_json(discover(c, Encoding::Direct, opts)).dump();
  auto b = to_json(discover(c, Encoding::Direct, opts)).dump();
  CHECK(a == b);

  DiscoveryOptions parallel = opts;
  parallel.jobs = 3;
  auto p = to_json(discover(c, Encoding::Direct, parallel)).dump();
  CHECK(p == a);

  DiscoveryOptions other = opts;
  other.seed = 13;
  auto d = discover(c, Encoding::Direct, other);
  CHECK(d.seed == 13);
}

TEST_CASE("single free point yields an empty report") {
  auto c = parse_construction("point A\nthesis equal_length(A,A,A,A)");
  DiscoveryOptions opts;
  auto report = discover(c, Encoding::Direct, opts);
  CHECK(report.candidates.empty());
  CHECK(report.to_table().find("statement") != std::string::npos);
}

TEST_CASE("budget exhaustion downgrades a candidate instead of aborting") {
  auto c = corpus_construction("medians.geo");
  DiscoveryOptions opts;
  opts.kinds = {PredicateKind::Collinear};
  opts.trials = 2;
  opts.prove_options.spair_budget = 1;
  auto report = discover(c, Encoding::Direct, opts);
  bool any_untested = false;
  for (const auto& cand : report.candidates)
    any_untested = any_untested || cand.status == CandidateStatus::Untested;
  CHECK(any_untested);
}
