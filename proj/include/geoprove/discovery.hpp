// Desk-scale automated geometer: enumerate candidate statements, filter
// them on exact random witnesses, prove the survivors, rank by difficulty.
#pragma once

#include <optional>
#include <random>
#include <set>

#include "geoprove/prover.hpp"

namespace geoprove {

enum class CandidateStatus { Untested, NumericallyPlausible, Proved, Refuted };

std::string to_string(CandidateStatus s);

struct CandidateStatement {
  Predicate predicate;
  CandidateStatus status = CandidateStatus::Untested;
  std::optional<Certificate> certificate;        // when Proved
  std::map<std::string, Rational> witness;       // when Refuted, by variable name
  std::optional<Rational> witness_value;         // thesis value at witness
  std::string text() const { return predicate.to_string(); }
};

struct DiscoveryOptions {
  std::set<PredicateKind> kinds = {PredicateKind::Collinear, PredicateKind::EqualLength,
                                   PredicateKind::Perpendicular, PredicateKind::Parallel};
  int trials = 5;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string order_label = "tdeg";
  std::optional<Specialization> specialization;  // applied before proving
  ProveOptions prove_options;
};

struct DiscoveryReport {
  std::string construction_id;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CandidateStatement> candidates;  // ranked

  std::string to_table() const;
};

// All point triples for Collinear, unordered pairs of distinct segments
// for EqualLength, line pairs for Perpendicular/Parallel; candidates that
// are tautological by symbol identity are pruned.
std::vector<CandidateStatement> enumerate_candidates(const Construction& c,
                                                     const std::set<PredicateKind>& kinds);

// Exact numeric screen: `trials` random placements of the free points;
// any nonzero thesis value refutes (witness kept), all-zero passes.
// Degenerate samples are redrawn up to 10 times, then surfaced.
CandidateStatement numeric_prefilter(const Construction& c, Encoding encoding,
                                     const CandidateStatement& cand, int trials,
                                     std::mt19937_64& rng);

DiscoveryReport discover(const Construction& c, Encoding encoding,
                         const DiscoveryOptions& opts);

}  // namespace geoprove
