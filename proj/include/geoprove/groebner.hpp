// Division with quotient tracking, extended Buchberger with transformation
// matrix, elimination ideals, and radical membership via Rabinowitsch.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "geoprove/polynomial.hpp"

namespace geoprove {

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};

// Reduced Groebner basis G of the input ideal together with a matrix
// expressing each basis element over the inputs:
//   generators[j] = sum_i transform[j][i] * inputs[i]
struct ExtendedBasis {
  std::vector<Polynomial> generators;
  std::vector<std::vector<Polynomial>> transform;
  MonomialOrder order;
};

// member = sum_i cofactors[i] * inputs[i], verified by expansion.
struct MembershipCertificate {
  Polynomial member;
  std::vector<Polynomial> cofactors;
  bool valid = false;
};

// Certificate of 1 over inputs + {f*t - 1} in a one-variable extension.
struct RadicalCertificate {
  VariableTablePtr extended_table;
  std::uint32_t rabinowitsch_var;
  Polynomial rabinowitsch;  // f*t - 1, the last generator
  MembershipCertificate membership;  // cofactors over inputs + {f*t-1}
};

inline constexpr std::size_t kDefaultSpairBudget = 50'000;

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord);

ExtendedBasis buchberger_extended(const std::vector<Polynomial>& inputs,
                                  const MonomialOrder& ord,
                                  std::size_t spair_budget = kDefaultSpairBudget);

std::optional<MembershipCertificate> ideal_membership(
    const Polynomial& f, const std::vector<Polynomial>& inputs,
    const MonomialOrder& ord, std::size_t spair_budget = kDefaultSpairBudget);

// Generators of (ideal of inputs) intersected with the subring over `keep`.
// Empty result means the elimination ideal is zero.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& inputs,
                                  const std::set<std::uint32_t>& keep,
                                  MonomialOrder::Kind within = MonomialOrder::Kind::Grevlex,
                                  std::size_t spair_budget = kDefaultSpairBudget);

std::optional<RadicalCertificate> radical_membership(
    const Polynomial& f, const std::vector<Polynomial>& inputs,
    const MonomialOrder& ord, std::size_t spair_budget = kDefaultSpairBudget);

// Exact expansion check of the membership identity.
bool verify_membership(const Polynomial& member,
                       const std::vector<Polynomial>& generators,
                       const std::vector<Polynomial>& cofactors);

}  // namespace geoprove
