#include "geoprove/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "geoprove/errors.hpp"

namespace geoprove {

namespace {

// valid index into divisors whose leading monomial divides m, or -1
int find_reducer(const Monomial& m, const std::vector<std::pair<Monomial, Rational>>& lts) {
  for (std::size_t i = 0; i < lts.size(); ++i)
    if (lts[i].first.divides(m)) return static_cast<int>(i);
  return -1;
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord) {
  if (divisors.empty()) throw std::invalid_argument("divide: no divisors");
  std::vector<std::pair<Monomial, Rational>> lts;
  lts.reserve(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].is_zero()) throw ZeroDivisorInListError(i);
    lts.push_back(divisors[i].leading_term(ord));
  }

  const auto table = f.table();
  DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial::zero(table)),
                     Polynomial::zero(table)};
  Polynomial work = f;
  while (!work.is_zero()) {
    auto [lm, lc] = work.leading_term(ord);
    int i = find_reducer(lm, lts);
    if (i < 0) {
      Polynomial head = Polynomial::from_terms(table, {{lm, lc}});
      out.remainder = out.remainder + head;
      work = work - head;
    } else {
      Monomial qm = lts[i].first.divide_into(lm);
      Rational qc = lc / lts[i].second;
      out.quotients[i] = out.quotients[i] + Polynomial::from_terms(table, {{qm, qc}});
      work = work - divisors[i].times_term(qm, qc);
    }
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError("s_polynomial");
  auto [fm, fc] = f.leading_term(ord);
  auto [gm, gc] = g.leading_term(ord);
  Monomial l = lcm(fm, gm);
  return f.times_term(fm.divide_into(l), fc.inverse()) -
         g.times_term(gm.divide_into(l), gc.inverse());
}

namespace {

struct TrackedReduction {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // over the basis
};

TrackedReduction reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                             const MonomialOrder& ord) {
  if (basis.empty())
    return {p, {}};
  auto div = divide(p, basis, ord);
  return {div.remainder, div.quotients};
}

struct Pair {
  std::size_t i, j;  // i < j
  Monomial l;        // lcm of the leading monomials
};

}  // namespace

ExtendedBasis buchberger_extended(const std::vector<Polynomial>& inputs,
                                  const MonomialOrder& ord, std::size_t spair_budget) {
  if (inputs.empty()) throw std::invalid_argument("buchberger_extended: no inputs");
  const auto table = inputs.front().table();
  const std::size_t n = inputs.size();

  auto unit_row = [&](std::size_t i) {
    std::vector<Polynomial> row(n, Polynomial::zero(table));
    row[i] = Polynomial::constant(table, 1);
    return row;
  };
  auto row_minus_quotients = [&](std::vector<Polynomial> row,
                                 const std::vector<Polynomial>& quotients,
                                 const std::vector<std::vector<Polynomial>>& rows) {
    for (std::size_t k = 0; k < quotients.size(); ++k) {
      if (quotients[k].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        row[c] = row[c] - quotients[k] * rows[k][c];
    }
    return row;
  };
  auto scale_row = [&](std::vector<Polynomial>& row, const Rational& c) {
    for (auto& entry : row) entry = entry.scaled(c);
  };

  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> rows;
  std::vector<Pair> pending;

  auto push_pairs_for = [&](std::size_t j) {
    auto ltj = basis[j].leading_term(ord).first;
    for (std::size_t i = 0; i < j; ++i)
      pending.push_back({i, j, lcm(basis[i].leading_term(ord).first, ltj)});
  };

  bool any_nonzero = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (inputs[i].is_zero()) continue;
    any_nonzero = true;
    auto red = reduce_full(inputs[i], basis, ord);
    if (red.remainder.is_zero()) continue;
    Rational c = red.remainder.normalization_factor();
    auto row = row_minus_quotients(unit_row(i), red.quotients, rows);
    scale_row(row, c);
    basis.push_back(red.remainder.scaled(c));
    rows.push_back(std::move(row));
    push_pairs_for(basis.size() - 1);
  }
  if (!any_nonzero) throw EmptyIdealError();

  std::size_t processed = 0;
  while (!pending.empty()) {
    // normal strategy: smallest lcm in the active order; ties by index
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      int c = ord.compare(pending[k].l, pending[best].l);
      if (c < 0 || (c == 0 && std::tie(pending[k].j, pending[k].i) <
                                  std::tie(pending[best].j, pending[best].i)))
        best = k;
    }
    Pair p = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

    if (++processed > spair_budget)
      throw BudgetExceededError("S-pair budget of " + std::to_string(spair_budget) +
                                " exhausted");

    // Buchberger's coprime criterion
    if (coprime(basis[p.i].leading_term(ord).first, basis[p.j].leading_term(ord).first))
      continue;

    Polynomial s = s_polynomial(basis[p.i], basis[p.j], ord);
    if (s.is_zero()) continue;
    auto red = reduce_full(s, basis, ord);
    if (red.remainder.is_zero()) continue;

    auto [im, ic] = basis[p.i].leading_term(ord);
    auto [jm, jc] = basis[p.j].leading_term(ord);
    Monomial l = lcm(im, jm);
    std::vector<Polynomial> row(n, Polynomial::zero(table));
    for (std::size_t c = 0; c < n; ++c)
      row[c] = rows[p.i][c].times_term(im.divide_into(l), ic.inverse()) -
               rows[p.j][c].times_term(jm.divide_into(l), jc.inverse());
    row = row_minus_quotients(std::move(row), red.quotients, rows);
    Rational c = red.remainder.normalization_factor();
    scale_row(row, c);
    basis.push_back(red.remainder.scaled(c));
    rows.push_back(std::move(row));
    push_pairs_for(basis.size() - 1);
  }

  // minimalize: drop generators whose leading monomial is divisible by
  // another surviving one's
  std::vector<std::size_t> order_by_lt(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_by_lt[i] = i;
  std::sort(order_by_lt.begin(), order_by_lt.end(), [&](std::size_t a, std::size_t b) {
    int c = ord.compare(basis[a].leading_term(ord).first, basis[b].leading_term(ord).first);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<std::size_t> kept;
  for (std::size_t idx : order_by_lt) {
    auto lm = basis[idx].leading_term(ord).first;
    bool redundant = false;
    for (std::size_t k : kept)
      if (basis[k].leading_term(ord).first.divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(idx);
  }

  std::vector<Polynomial> reduced;
  std::vector<std::vector<Polynomial>> reduced_rows;
  reduced.reserve(kept.size());
  for (std::size_t pos = 0; pos < kept.size(); ++pos) {
    std::vector<Polynomial> others;
    std::vector<std::vector<Polynomial>*> other_rows;
    for (std::size_t q = 0; q < kept.size(); ++q) {
      if (q == pos) continue;
      others.push_back(basis[kept[q]]);
      other_rows.push_back(&rows[kept[q]]);
    }
    Polynomial g = basis[kept[pos]];
    std::vector<Polynomial> row = rows[kept[pos]];
    if (!others.empty()) {
      auto div = divide(g, others, ord);
      g = div.remainder;
      for (std::size_t k = 0; k < others.size(); ++k) {
        if (div.quotients[k].is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c)
          row[c] = row[c] - div.quotients[k] * (*other_rows[k])[c];
      }
    }
    Rational c = g.normalization_factor();
    scale_row(row, c);
    reduced.push_back(g.scaled(c));
    reduced_rows.push_back(std::move(row));
  }

  return ExtendedBasis{std::move(reduced), std::move(reduced_rows), ord};
}

std::optional<MembershipCertificate> ideal_membership(const Polynomial& f,
                                                      const std::vector<Polynomial>& inputs,
                                                      const MonomialOrder& ord,
                                                      std::size_t spair_budget) {
  if (inputs.empty()) throw std::invalid_argument("ideal_membership: no inputs");
  const auto table = f.table();
  if (f.is_zero()) {
    MembershipCertificate cert{f, std::vector<Polynomial>(inputs.size(), Polynomial::zero(table)),
                               true};
    return cert;
  }
  auto basis = buchberger_extended(inputs, ord, spair_budget);
  auto div = divide(f, basis.generators, ord);
  if (!div.remainder.is_zero()) return std::nullopt;

  std::vector<Polynomial> cofactors(inputs.size(), Polynomial::zero(table));
  for (std::size_t j = 0; j < basis.generators.size(); ++j) {
    if (div.quotients[j].is_zero()) continue;
    for (std::size_t i = 0; i < inputs.size(); ++i)
      cofactors[i] = cofactors[i] + div.quotients[j] * basis.transform[j][i];
  }
  MembershipCertificate cert{f, std::move(cofactors), false};
  cert.valid = verify_membership(cert.member, inputs, cert.cofactors);
  if (!cert.valid)
    throw UnverifiedCertificateError("membership certificate failed expansion check");
  return cert;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& inputs,
                                  const std::set<std::uint32_t>& keep,
                                  MonomialOrder::Kind within, std::size_t spair_budget) {
  if (inputs.empty()) throw std::invalid_argument("eliminate: no inputs");
  const auto table = inputs.front().table();
  for (std::uint32_t var : keep)
    if (var >= table->size()) throw UniverseMismatchError("keep variable outside universe");

  std::vector<std::uint32_t> eliminated, kept;
  for (std::uint32_t v = 0; v < table->size(); ++v) {
    if (keep.count(v)) kept.push_back(v);
    else eliminated.push_back(v);
  }
  auto ord = MonomialOrder::elimination(eliminated, kept, within);
  auto basis = buchberger_extended(inputs, ord, spair_budget);

  std::vector<Polynomial> out;
  for (const auto& g : basis.generators) {
    bool pure = true;
    for (std::uint32_t v : g.support_variables())
      if (!keep.count(v)) {
        pure = false;
        break;
      }
    if (pure) out.push_back(g);
  }
  return out;
}

std::optional<RadicalCertificate> radical_membership(const Polynomial& f,
                                                     const std::vector<Polynomial>& inputs,
                                                     const MonomialOrder& ord,
                                                     std::size_t spair_budget) {
  if (f.is_zero()) throw ZeroPolynomialError("radical_membership");
  const auto table = f.table();
  std::string t_name = table->fresh_name("t");
  auto extended = VariableTable::extend(table, {t_name});
  VariableTablePtr ext = extended;
  std::uint32_t t_index = static_cast<std::uint32_t>(ext->size() - 1);

  auto ord_ext = ord.prepend_dominant(t_index);
  std::vector<Polynomial> aug;
  aug.reserve(inputs.size() + 1);
  for (const auto& g : inputs) aug.push_back(g.rebase(ext));
  Polynomial rab = f.rebase(ext) * Polynomial::variable(ext, t_index) -
                   Polynomial::constant(ext, 1);
  aug.push_back(rab);

  auto mem = ideal_membership(Polynomial::constant(ext, 1), aug, ord_ext, spair_budget);
  if (!mem) return std::nullopt;
  return RadicalCertificate{ext, t_index, rab, std::move(*mem)};
}

bool verify_membership(const Polynomial& member, const std::vector<Polynomial>& generators,
                       const std::vector<Polynomial>& cofactors) {
  if (generators.size() != cofactors.size()) return false;
  Polynomial acc = Polynomial::zero(member.table());
  for (std::size_t i = 0; i < generators.size(); ++i)
    acc = acc + cofactors[i] * generators[i];
  return (acc - member).is_zero();
}

}  // namespace geoprove
