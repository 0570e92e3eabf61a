#include "geoprove/prover.hpp"

#include <algorithm>
#include <map>

#include "geoprove/errors.hpp"

namespace geoprove {

std::string to_string(TruthMode mode) {
  switch (mode) {
    case TruthMode::FormallyTrue: return "formally true";
    case TruthMode::GeometricallyTrue: return "geometrically true";
    case TruthMode::GenerallyTrue: return "generally true";
    case TruthMode::Unproved: return "unproved";
  }
  return "?";
}

MonomialOrder system_order(const PolySystem& sys, const std::string& label) {
  return MonomialOrder::from_label(label, sys.table->all_indices());
}

bool verify_certificate(const Certificate& cert) {
  if (cert.mode == TruthMode::Unproved) return false;
  if (cert.generators.size() != cert.cofactors.size()) return false;
  Polynomial acc = Polynomial::zero(cert.target.table());
  for (std::size_t i = 0; i < cert.generators.size(); ++i)
    acc = acc + cert.cofactors[i] * cert.generators[i];
  return (acc - cert.target).is_zero();
}

Difficulty difficulty(const Certificate& cert) {
  if (cert.mode == TruthMode::Unproved) throw UnprovedCertificateError();
  if (cert.target.is_zero()) return Difficulty::trivial_case();
  int best = -1;
  for (const auto& c : cert.cofactors) best = std::max(best, c.total_degree());
  return Difficulty::of(best);
}

namespace {

int degree_excluding_auxiliary(const Certificate& cert) {
  int best = -1;
  std::size_t n = cert.cofactors.size() - cert.auxiliary_generators;
  for (std::size_t i = 0; i < n; ++i)
    best = std::max(best, cert.cofactors[i].total_degree());
  return best;
}

void finalize(Certificate& cert) {
  if (cert.mode == TruthMode::Unproved) return;
  if (!verify_certificate(cert))
    throw UnverifiedCertificateError("certificate identity failed expansion check");
  cert.difficulty = difficulty(cert);
  if (cert.auxiliary_generators > 0)
    cert.difficulty_excluding_auxiliary = degree_excluding_auxiliary(cert);
}

// all monomials of total degree <= d over `vars`, in storage order
void enumerate_monomials(const std::vector<std::uint32_t>& vars, int d,
                         std::vector<Monomial::Entry>& stack, std::size_t at,
                         std::vector<Monomial>& out) {
  if (at == vars.size()) {
    out.emplace_back(stack);
    return;
  }
  enumerate_monomials(vars, d, stack, at + 1, out);
  for (int e = 1; e <= d; ++e) {
    stack.emplace_back(vars[at], static_cast<std::uint32_t>(e));
    enumerate_monomials(vars, d - e, stack, at + 1, out);
    stack.pop_back();
  }
}

}  // namespace

std::optional<std::vector<Polynomial>> solve_cofactors_with_degree_bound(
    const Polynomial& target, const std::vector<Polynomial>& generators, int d,
    std::size_t column_budget) {
  const auto table = target.table();

  // variable support is what matters; absent variables cannot help
  std::vector<std::uint32_t> vars = target.support_variables();
  for (const auto& g : generators) {
    auto sv = g.support_variables();
    vars.insert(vars.end(), sv.begin(), sv.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  std::vector<Monomial> monos;
  {
    std::vector<Monomial::Entry> stack;
    enumerate_monomials(vars, d, stack, 0, monos);
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) { return MonomialStorageLess{}(a, b); });
  }
  if (monos.size() * generators.size() > column_budget)
    throw BudgetExceededError("cofactor system would need " +
                              std::to_string(monos.size() * generators.size()) +
                              " unknowns");

  // rows are indexed by product monomials; columns by (generator, monomial)
  std::map<Monomial, std::size_t, MonomialStorageLess> row_of;
  auto row_index = [&](const Monomial& m) {
    auto [it, fresh] = row_of.emplace(m, row_of.size());
    return it->second;
  };

  struct SparseRow {
    std::map<std::size_t, Rational> coeffs;
    Rational rhs;
  };
  std::vector<SparseRow> rows;
  auto row_at = [&](const Monomial& m) -> SparseRow& {
    std::size_t idx = row_index(m);
    if (idx >= rows.size()) rows.resize(idx + 1);
    return rows[idx];
  };

  std::size_t col = 0;
  const std::size_t ncols = monos.size() * generators.size();
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    for (const auto& m : monos) {
      for (const auto& [gm, gc] : generators[gi].terms()) {
        auto& row = row_at(m * gm);
        auto [it, fresh] = row.coeffs.emplace(col, gc);
        if (!fresh) {
          it->second += gc;
          if (it->second.is_zero()) row.coeffs.erase(it);
        }
      }
      ++col;
    }
  }
  for (const auto& [tm, tc] : target.terms()) row_at(tm).rhs = tc;

  // sparse exact forward elimination; a per-column index of touching
  // rows avoids scanning the whole matrix at every pivot step
  std::vector<std::vector<std::size_t>> col_rows(ncols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r].coeffs) col_rows[c].push_back(r);

  std::vector<std::optional<std::size_t>> pivot_row_of_col(ncols);
  std::vector<bool> row_used(rows.size(), false);
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < ncols; ++c) {
    // sparsest eligible row, ties by index, for bounded fill-in
    std::size_t pivot = rows.size();
    for (std::size_t r : col_rows[c]) {
      if (row_used[r] || !rows[r].coeffs.count(c)) continue;  // stale entry
      if (pivot == rows.size() ||
          rows[r].coeffs.size() < rows[pivot].coeffs.size() ||
          (rows[r].coeffs.size() == rows[pivot].coeffs.size() && r < pivot))
        pivot = r;
    }
    if (pivot == rows.size()) continue;  // free column
    row_used[pivot] = true;
    pivot_row_of_col[c] = pivot;
    pivot_cols.push_back(c);

    Rational inv = rows[pivot].coeffs.at(c).inverse();
    for (auto& [cc, v] : rows[pivot].coeffs) v *= inv;
    rows[pivot].rhs *= inv;

    for (std::size_t r : col_rows[c]) {
      if (row_used[r]) continue;
      auto it = rows[r].coeffs.find(c);
      if (it == rows[r].coeffs.end()) continue;
      Rational factor = it->second;
      for (const auto& [cc, v] : rows[pivot].coeffs) {
        auto [jt, fresh] = rows[r].coeffs.emplace(cc, Rational(0));
        if (fresh) col_rows[cc].push_back(r);
        jt->second -= factor * v;
        if (jt->second.is_zero()) rows[r].coeffs.erase(jt);
      }
      rows[r].rhs -= factor * rows[pivot].rhs;
    }
  }

  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (row_used[r]) continue;
    // ascending column order guarantees non-pivot rows eliminate to zero
    if (!rows[r].coeffs.empty())
      throw std::logic_error("cofactor solver left a non-pivot row unreduced");
    if (!rows[r].rhs.is_zero()) return std::nullopt;  // 0 = nonzero: infeasible
  }

  // back-substitution in reverse pivot order; free columns stay zero
  std::vector<Rational> solution(ncols, Rational(0));
  for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
    const SparseRow& row = rows[*pivot_row_of_col[*it]];
    Rational value = row.rhs;
    for (const auto& [cc, v] : row.coeffs)
      if (cc != *it && !solution[cc].is_zero()) value -= v * solution[cc];
    solution[*it] = value;
  }

  std::vector<Polynomial> cofactors;
  cofactors.reserve(generators.size());
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (std::size_t mi = 0; mi < monos.size(); ++mi) {
      const Rational& v = solution[gi * monos.size() + mi];
      if (!v.is_zero()) terms.emplace_back(monos[mi], v);
    }
    cofactors.push_back(Polynomial::from_terms(table, std::move(terms)));
  }
  if (!verify_membership(target, generators, cofactors)) return std::nullopt;
  return cofactors;
}

Certificate minimize_difficulty(const PolySystem&, const Certificate& cert,
                                int budget_degree, const ProveOptions& opts) {
  if (cert.mode == TruthMode::Unproved) throw UnprovedCertificateError();
  Difficulty current = difficulty(cert);
  if (current.trivial || current.value <= 0) {
    Certificate out = cert;
    out.minimized = true;
    return out;
  }
  int cap = budget_degree < 0 ? current.value : std::min(budget_degree, current.value);
  for (int d = 0; d <= cap; ++d) {
    auto solved = solve_cofactors_with_degree_bound(cert.target, cert.generators, d,
                                                    opts.solver_column_budget);
    if (!solved) continue;
    Certificate out = cert;
    out.cofactors = std::move(*solved);
    out.minimized = true;
    out.upper_bound = false;
    finalize(out);
    return out;
  }
  Certificate out = cert;
  out.minimized = false;
  out.upper_bound = true;
  return out;
}

Certificate prove(const PolySystem& sys, const MonomialOrder& ord, const ProveOptions& opts) {
  if (!sys.table) throw InvalidSystemError("system has no variable table");
  if (sys.thesis.table() != sys.table)
    throw InvalidSystemError("thesis not over the system universe");
  for (const auto& h : sys.hypotheses)
    if (h.poly.table() != sys.table)
      throw InvalidSystemError("hypothesis not over the system universe");

  const auto table = sys.table;
  std::vector<Polynomial> hyps = sys.hypothesis_polys();
  bool any_hyp = std::any_of(hyps.begin(), hyps.end(),
                             [](const Polynomial& p) { return !p.is_zero(); });

  // (a) thesis simplifies to 0 under the construction's explicit
  // definitions: trivially true, empty combination
  if (sys.thesis_normal_form().is_zero()) {
    Certificate cert(table, ord);
    cert.mode = TruthMode::FormallyTrue;
    cert.target = Polynomial::zero(table);
    cert.difficulty = Difficulty::trivial_case();
    cert.minimized = true;
    return cert;
  }

  // (b) direct route: thesis in the hypotheses ideal
  if (any_hyp && opts.route == ProofRoute::Ladder) {
    auto mem = ideal_membership(sys.thesis, hyps, ord, opts.spair_budget);
    if (mem) {
      Certificate cert(table, ord);
      cert.mode = TruthMode::FormallyTrue;
      cert.target = sys.thesis;
      cert.generators = hyps;
      cert.cofactors = std::move(mem->cofactors);
      finalize(cert);
      if (opts.minimize) cert = minimize_difficulty(sys, cert, opts.degree_budget, opts);
      return cert;
    }
  }

  // (c) reductio route: 1 in the ideal augmented with thesis*t - 1
  {
    auto rad = radical_membership(sys.thesis, hyps, ord, opts.spair_budget);
    if (rad) {
      auto ext = rad->extended_table;
      Certificate cert(ext, ord.prepend_dominant(rad->rabinowitsch_var));
      cert.mode = TruthMode::GeometricallyTrue;
      cert.target = Polynomial::constant(ext, 1);
      for (const auto& h : hyps) cert.generators.push_back(h.rebase(ext));
      cert.generators.push_back(rad->rabinowitsch);
      cert.cofactors = std::move(rad->membership.cofactors);
      cert.auxiliary_generators = 1;
      finalize(cert);
      if (opts.minimize) cert = minimize_difficulty(sys, cert, opts.degree_budget, opts);
      return cert;
    }
  }

  // (d) generally-true route: a nonzero elimination ideal in the free
  // variables supplies a nondegeneracy condition g != 0
  {
    std::string t_name = table->fresh_name("t");
    auto ext_t = VariableTable::extend(table, {t_name});
    VariableTablePtr ext(ext_t);
    std::uint32_t t_index = static_cast<std::uint32_t>(ext->size() - 1);

    std::vector<Polynomial> aug;
    for (const auto& h : hyps) aug.push_back(h.rebase(ext));
    Polynomial rab_t = sys.thesis.rebase(ext) * Polynomial::variable(ext, t_index) -
                       Polynomial::constant(ext, 1);
    aug.push_back(rab_t);

    auto within = ord.label() == "plex" ? MonomialOrder::Kind::Lex : MonomialOrder::Kind::Grevlex;
    auto elim = eliminate(aug, sys.free_vars, within, opts.spair_budget);
    if (!elim.empty()) {
      auto pick = std::min_element(
          elim.begin(), elim.end(), [](const Polynomial& a, const Polynomial& b) {
            int da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db;
            return a.to_string() < b.to_string();
          });
      Polynomial g = *pick;

      std::string s_name = ext->fresh_name("s");
      auto ext2_t = VariableTable::extend(ext, {s_name});
      VariableTablePtr ext2(ext2_t);
      std::uint32_t s_index = static_cast<std::uint32_t>(ext2->size() - 1);
      auto ord2 = ord.prepend_dominant(t_index).prepend_dominant(s_index);

      std::vector<Polynomial> gens;
      for (const auto& h : hyps) gens.push_back(h.rebase(ext2));
      gens.push_back(rab_t.rebase(ext2));
      Polynomial rab_s = g.rebase(ext2) * Polynomial::variable(ext2, s_index) -
                         Polynomial::constant(ext2, 1);
      gens.push_back(rab_s);

      auto mem = ideal_membership(Polynomial::constant(ext2, 1), gens, ord2,
                                  opts.spair_budget);
      if (mem) {
        Certificate cert(ext2, ord2);
        cert.mode = TruthMode::GenerallyTrue;
        cert.target = Polynomial::constant(ext2, 1);
        cert.generators = std::move(gens);
        cert.cofactors = std::move(mem->cofactors);
        cert.nondegeneracy.push_back(g.rebase(ext2));
        cert.auxiliary_generators = 2;
        finalize(cert);
        if (opts.minimize) cert = minimize_difficulty(sys, cert, opts.degree_budget, opts);
        return cert;
      }
    }
  }

  Certificate cert(table, ord);
  cert.mode = TruthMode::Unproved;
  cert.target = sys.thesis;
  for (const auto& h : hyps) cert.generators.push_back(h);
  return cert;
}

}  // namespace geoprove
