#include "geoprove/discovery.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "geoprove/errors.hpp"

namespace geoprove {

std::string to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::Untested: return "untested";
    case CandidateStatus::NumericallyPlausible: return "plausible";
    case CandidateStatus::Proved: return "proved";
    case CandidateStatus::Refuted: return "refuted";
  }
  return "?";
}

std::vector<CandidateStatement> enumerate_candidates(const Construction& c,
                                                     const std::set<PredicateKind>& kinds) {
  if (kinds.empty()) throw std::invalid_argument("enumerate_candidates: no kinds selected");
  std::vector<CandidateStatement> out;
  auto points = c.point_names();
  auto lines = c.line_names();

  if (kinds.count(PredicateKind::Collinear)) {
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        for (std::size_t k = j + 1; k < points.size(); ++k)
          out.push_back(CandidateStatement{
              Predicate{PredicateKind::Collinear, {points[i], points[j], points[k]}, 0}});
  }
  if (kinds.count(PredicateKind::EqualLength)) {
    std::vector<std::pair<std::string, std::string>> segments;
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        segments.emplace_back(points[i], points[j]);
    for (std::size_t i = 0; i < segments.size(); ++i)
      for (std::size_t j = i + 1; j < segments.size(); ++j)
        out.push_back(CandidateStatement{
            Predicate{PredicateKind::EqualLength,
                      {segments[i].first, segments[i].second, segments[j].first,
                       segments[j].second},
                      0}});
  }
  if (kinds.count(PredicateKind::Perpendicular)) {
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j)
        out.push_back(CandidateStatement{
            Predicate{PredicateKind::Perpendicular, {lines[i], lines[j]}, 0}});
  }
  if (kinds.count(PredicateKind::Parallel)) {
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j)
        out.push_back(CandidateStatement{
            Predicate{PredicateKind::Parallel, {lines[i], lines[j]}, 0}});
  }
  return out;
}

CandidateStatement numeric_prefilter(const Construction& c, Encoding encoding,
                                     const CandidateStatement& cand, int trials,
                                     std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("numeric_prefilter: trials must be >= 1");
  PolySystem sys = translate(c.with_thesis(cand.predicate), encoding);
  CandidateStatement out = cand;
  for (int trial = 0; trial < trials; ++trial) {
    std::map<std::uint32_t, Rational> witness;
    int attempt = 0;
    for (;;) {
      try {
        witness = sample_witness(sys, rng);
        break;
      } catch (const DegenerateSampleError&) {
        if (++attempt >= 10) throw;
      }
    }
    Rational value = sys.thesis.evaluate(witness);
    if (!value.is_zero()) {
      out.status = CandidateStatus::Refuted;
      for (const auto& [var, v] : witness) out.witness[sys.table->name(var)] = v;
      out.witness_value = value;
      return out;
    }
  }
  out.status = CandidateStatus::NumericallyPlausible;
  return out;
}

namespace {

int mode_rank(TruthMode m) {
  switch (m) {
    case TruthMode::FormallyTrue: return 0;
    case TruthMode::GeometricallyTrue: return 1;
    case TruthMode::GenerallyTrue: return 2;
    case TruthMode::Unproved: return 3;
  }
  return 4;
}

int status_rank(const CandidateStatement& c) {
  switch (c.status) {
    case CandidateStatus::Proved: return 0;
    case CandidateStatus::NumericallyPlausible: return 1;
    case CandidateStatus::Untested: return 2;
    case CandidateStatus::Refuted: return 3;
  }
  return 4;
}

// proved first by difficulty descending with Trivial last, then the
// tie-break the report promises: (mode, statement text)
bool report_less(const CandidateStatement& a, const CandidateStatement& b) {
  int sa = status_rank(a), sb = status_rank(b);
  if (sa != sb) return sa < sb;
  if (a.status == CandidateStatus::Proved) {
    const Difficulty& da = a.certificate->difficulty;
    const Difficulty& db = b.certificate->difficulty;
    if (da != db) return db < da;  // descending, trivial sinks
    int ma = mode_rank(a.certificate->mode), mb = mode_rank(b.certificate->mode);
    if (ma != mb) return ma < mb;
  }
  return a.text() < b.text();
}

}  // namespace

DiscoveryReport discover(const Construction& c, Encoding encoding,
                         const DiscoveryOptions& opts) {
  auto candidates = enumerate_candidates(c, opts.kinds);

  auto process = [&](std::size_t index) -> CandidateStatement {
    // per-candidate stream keeps jobs>1 byte-identical to serial runs
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + index + 1);
    CandidateStatement cand = candidates[index];
    cand = numeric_prefilter(c, encoding, cand, opts.trials, rng);
    if (cand.status != CandidateStatus::NumericallyPlausible) return cand;

    try {
      PolySystem sys = translate(c.with_thesis(cand.predicate), encoding);
      if (opts.specialization) sys = specialize(sys, *opts.specialization);
      auto ord = system_order(sys, opts.order_label);
      Certificate cert = prove(sys, ord, opts.prove_options);
      if (cert.mode != TruthMode::Unproved) {
        if (!verify_certificate(cert))
          throw UnverifiedCertificateError("discovery certificate failed recheck");
        cand.status = CandidateStatus::Proved;
        cand.certificate = std::move(cert);
      }
    } catch (const BudgetExceededError&) {
      cand.status = CandidateStatus::Untested;  // budget failures never abort the report
    }
    return cand;
  };

  std::vector<CandidateStatement> results(candidates.size(),
                                          CandidateStatement{Predicate{}});
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || candidates.size() <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) results[i] = process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w]() {
        try {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= candidates.size()) break;
            results[i] = process(i);
          }
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::stable_sort(results.begin(), results.end(), report_less);

  DiscoveryReport report;
  report.seed = opts.seed;
  report.trials = opts.trials;
  report.candidates = std::move(results);
  return report;
}

std::string DiscoveryReport::to_table() const {
  std::string out = "rank  status     mode                difficulty  statement\n";
  int rank = 0;
  for (const auto& cand : candidates) {
    ++rank;
    std::string status = to_string(cand.status);
    std::string mode = "-", diff = "-", extra;
    if (cand.certificate) {
      mode = to_string(cand.certificate->mode);
      diff = cand.certificate->difficulty.to_string();
      if (!cand.certificate->nondegeneracy.empty()) {
        extra = "  [requires";
        for (const auto& g : cand.certificate->nondegeneracy)
          extra += " " + g.to_string() + " != 0";
        extra += "]";
      }
    }
    auto pad = [](std::string s, std::size_t w) {
      if (s.size() < w) s.resize(w, ' ');
      return s;
    };
    out += pad(std::to_string(rank), 6) + pad(status, 11) + pad(mode, 20) +
           pad(diff, 12) + cand.text() + extra + "\n";
  }
  return out;
}

}  // namespace geoprove
