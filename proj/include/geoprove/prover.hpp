// Truth-mode decision, verified cofactor certificates, difficulty scoring.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoprove/algebraize.hpp"
#include "geoprove/groebner.hpp"

namespace geoprove {

enum class TruthMode { FormallyTrue, GeometricallyTrue, GenerallyTrue, Unproved };

std::string to_string(TruthMode mode);

// Trivial (thesis simplifies to the zero polynomial) or a value >= -1.
struct Difficulty {
  bool trivial = false;
  int value = -1;

  static Difficulty trivial_case() { return Difficulty{true, -1}; }
  static Difficulty of(int v) { return Difficulty{false, v}; }
  std::string to_string() const { return trivial ? "trivial" : std::to_string(value); }
  bool operator==(const Difficulty& o) const = default;
  // trivial sorts below every numeric value
  bool operator<(const Difficulty& o) const {
    if (trivial != o.trivial) return trivial;
    return value < o.value;
  }
};

// The proof object. Whenever mode != Unproved the identity
//   target = sum_i cofactors[i] * generators[i]
// holds exactly and has been checked by expansion before the certificate
// left the prover. For the trivial case both lists are empty and the
// target is the zero polynomial.
struct Certificate {
  TruthMode mode = TruthMode::Unproved;
  VariableTablePtr table;  // sys table, possibly extended with t and s
  MonomialOrder order;
  Polynomial target;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> cofactors;
  std::vector<Polynomial> nondegeneracy;  // nonempty iff mode == GenerallyTrue
  // trailing generators that are Rabinowitsch polynomials (t/s), not
  // geometric hypotheses
  std::size_t auxiliary_generators = 0;

  Difficulty difficulty;
  bool minimized = false;    // difficulty proven minimal by the degree oracle
  bool upper_bound = false;  // search was budget-cut; value is an upper bound
  std::optional<int> difficulty_excluding_auxiliary;

  Certificate(VariableTablePtr t, MonomialOrder o)
      : table(std::move(t)), order(std::move(o)), target(Polynomial::zero(table)) {}
};

// Ladder: trivial thesis, ideal membership, radical membership,
// elimination-backed nondegeneracy, otherwise Unproved. Reductio: skip
// the direct ideal-membership rung and prove by expressing 1 over the
// hypotheses plus the negated thesis, the presentation step-by-step
// transcripts usually show. The two routes can assign different
// difficulties to one statement; both are meaningful.
enum class ProofRoute { Ladder, Reductio };

struct ProveOptions {
  std::size_t spair_budget = kDefaultSpairBudget;
  // -1 = minimize all the way down from the basis-derived degree
  int degree_budget = -1;
  bool minimize = true;
  ProofRoute route = ProofRoute::Ladder;
  // columns cap for one cofactor linear system
  std::size_t solver_column_budget = 200'000;
};

// Throws BudgetExceeded when Buchberger blows its S-pair budget; a false
// statement comes back Unproved, never as an exception.
Certificate prove(const PolySystem& sys, const MonomialOrder& ord,
                  const ProveOptions& opts = {});

// Max cofactor total degree (Trivial for the zero-thesis certificate).
// Throws UnprovedCertificate when mode == Unproved.
Difficulty difficulty(const Certificate& cert);

// Smallest d <= min(budget_degree, current) such that the target is a
// combination with all cofactor degrees <= d, found by solving the exact
// linear system of coefficient constraints degree by degree.
Certificate minimize_difficulty(const PolySystem& sys, const Certificate& cert,
                                int budget_degree, const ProveOptions& opts = {});

bool verify_certificate(const Certificate& cert);

// Exposed for the degree oracle tests: cofactors of total degree <= d
// with target = sum cofactors[i]*generators[i], or nullopt if infeasible.
std::optional<std::vector<Polynomial>> solve_cofactors_with_degree_bound(
    const Polynomial& target, const std::vector<Polynomial>& generators, int d,
    std::size_t column_budget = 200'000);

// Default proving order for a system: tdeg/plex with declaration priority.
MonomialOrder system_order(const PolySystem& sys, const std::string& label);

}  // namespace geoprove
