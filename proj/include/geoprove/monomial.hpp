// Monomials (sparse exponent vectors) and monomial orders.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "geoprove/variable.hpp"

namespace geoprove {

// Exponent vector stored sparse, sorted by variable index, no zero entries.
// The empty vector is the unit monomial.
class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (variable, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);
  static Monomial unit() { return Monomial(); }
  static Monomial variable(std::uint32_t index, std::uint32_t exp = 1);

  bool is_unit() const { return entries_.empty(); }
  int total_degree() const;
  std::uint32_t exponent(std::uint32_t var) const;
  const std::vector<Entry>& entries() const { return entries_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Requires divides(*this applied the other way): o = result * this.
  Monomial divide_into(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
  bool operator!=(const Monomial& o) const { return entries_ != o.entries_; }

  std::string to_string(const VariableTable& table) const;

 private:
  std::vector<Entry> entries_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Fixed order used only for deterministic term storage inside Polynomial;
// unrelated to the active MonomialOrder.
struct MonomialStorageLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Total, multiplicative monomial order with the unit monomial as minimum.
// Built from one or more blocks: earlier blocks dominate, each block
// compares lex or grevlex over its own variables in the stated priority
// (first variable is the largest). Elimination orders are block products.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex };

  struct Block {
    Kind kind;
    std::vector<std::uint32_t> vars;  // priority, largest first
  };

  static MonomialOrder lex(std::vector<std::uint32_t> priority);
  static MonomialOrder grevlex(std::vector<std::uint32_t> priority);
  // eliminated-block then kept-block; `within` = Lex yields the classic
  // pure-lex elimination order, Grevlex the faster block order.
  static MonomialOrder elimination(std::vector<std::uint32_t> eliminated,
                                   std::vector<std::uint32_t> kept, Kind within);

  // Same order with `var` dominating everything already present.
  MonomialOrder prepend_dominant(std::uint32_t var) const;

  // <0, 0, >0 like a three-way compare; greater(a,b) means a comes first
  // when listing terms in decreasing order.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  const std::vector<Block>& blocks() const { return blocks_; }
  const std::string& label() const { return label_; }

  // "tdeg" / "plex" for the plain orders, descriptive otherwise.
  static MonomialOrder from_label(const std::string& label,
                                  std::vector<std::uint32_t> priority);

 private:
  MonomialOrder(std::vector<Block> blocks, std::string label)
      : blocks_(std::move(blocks)), label_(std::move(label)) {}

  static int compare_block(const Block& block, const Monomial& a, const Monomial& b);

  std::vector<Block> blocks_;
  std::string label_;
};

}  // namespace geoprove
