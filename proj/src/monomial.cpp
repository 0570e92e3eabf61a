#include "geoprove/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace geoprove {

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  std::vector<Entry> merged;
  for (const auto& [var, exp] : entries_) {
    if (exp == 0) continue;
    if (!merged.empty() && merged.back().first == var) {
      merged.back().second += exp;
    } else {
      merged.emplace_back(var, exp);
    }
  }
  entries_ = std::move(merged);
}

Monomial Monomial::variable(std::uint32_t index, std::uint32_t exp) {
  if (exp == 0) return unit();
  Monomial m;
  m.entries_.emplace_back(index, exp);
  return m;
}

int Monomial::total_degree() const {
  int deg = 0;
  for (const auto& [var, exp] : entries_) deg += static_cast<int>(exp);
  return deg;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), var,
                             [](const Entry& e, std::uint32_t v) { return e.first < v; });
  if (it == entries_.end() || it->first != var) return 0;
  return it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [var, exp] : entries_)
    if (o.exponent(var) < exp) return false;
  return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
  if (!divides(o)) throw std::invalid_argument("monomial does not divide");
  Monomial out;
  auto a = o.entries_.begin();
  for (; a != o.entries_.end(); ++a) {
    std::uint32_t rest = a->second - exponent(a->first);
    if (rest > 0) out.entries_.emplace_back(a->first, rest);
  }
  return out;
}

std::string Monomial::to_string(const VariableTable& table) const {
  if (is_unit()) return "1";
  std::string out;
  for (const auto& [var, exp] : entries_) {
    if (!out.empty()) out += "*";
    out += table.name(var);
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> entries;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) {
      entries.push_back(*ia++);
    } else if (ia == a.entries().end() || ib->first < ia->first) {
      entries.push_back(*ib++);
    } else {
      entries.emplace_back(ia->first, std::max(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return Monomial(std::move(entries));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (const auto& [var, exp] : a.entries())
    if (b.exponent(var) > 0) return false;
  return true;
}

bool MonomialStorageLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.entries() < b.entries();
}

MonomialOrder MonomialOrder::lex(std::vector<std::uint32_t> priority) {
  return MonomialOrder({Block{Kind::Lex, std::move(priority)}}, "plex");
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::uint32_t> priority) {
  return MonomialOrder({Block{Kind::Grevlex, std::move(priority)}}, "tdeg");
}

MonomialOrder MonomialOrder::elimination(std::vector<std::uint32_t> eliminated,
                                         std::vector<std::uint32_t> kept, Kind within) {
  if (within == Kind::Lex) {
    // pure lex with the eliminated variables on top
    std::vector<std::uint32_t> priority = std::move(eliminated);
    priority.insert(priority.end(), kept.begin(), kept.end());
    return MonomialOrder({Block{Kind::Lex, std::move(priority)}}, "elim-plex");
  }
  return MonomialOrder({Block{Kind::Grevlex, std::move(eliminated)},
                        Block{Kind::Grevlex, std::move(kept)}},
                       "elim-tdeg");
}

MonomialOrder MonomialOrder::prepend_dominant(std::uint32_t var) const {
  std::vector<Block> blocks;
  blocks.push_back(Block{Kind::Grevlex, {var}});
  blocks.insert(blocks.end(), blocks_.begin(), blocks_.end());
  return MonomialOrder(std::move(blocks), label_);
}

MonomialOrder MonomialOrder::from_label(const std::string& label,
                                        std::vector<std::uint32_t> priority) {
  if (label == "plex" || label == "lex") return lex(std::move(priority));
  if (label == "tdeg" || label == "grevlex") return grevlex(std::move(priority));
  throw std::invalid_argument("unknown order '" + label + "' (expected tdeg or plex)");
}

int MonomialOrder::compare_block(const Block& block, const Monomial& a, const Monomial& b) {
  if (block.kind == Kind::Lex) {
    for (std::uint32_t var : block.vars) {
      std::uint32_t ea = a.exponent(var), eb = b.exponent(var);
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }
  // grevlex: higher block degree wins; ties broken by the reverse scan,
  // where a smaller exponent at the last difference wins.
  int da = 0, db = 0;
  for (std::uint32_t var : block.vars) {
    da += static_cast<int>(a.exponent(var));
    db += static_cast<int>(b.exponent(var));
  }
  if (da != db) return da < db ? -1 : 1;
  for (auto it = block.vars.rbegin(); it != block.vars.rend(); ++it) {
    std::uint32_t ea = a.exponent(*it), eb = b.exponent(*it);
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& block : blocks_) {
    int c = compare_block(block, a, b);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace geoprove
