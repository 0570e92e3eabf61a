// Variable universe: every problem instance fixes its variable table up
// front; polynomials refer to variables by index into one shared table.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace geoprove {

struct Variable {
  std::uint32_t index;
  std::string name;
};

class VariableTable;
using VariableTablePtr = std::shared_ptr<const VariableTable>;

class VariableTable {
 public:
  // `alias` is a secondary display name (the v13-style numbering common
  // in dynamic-geometry exports); lookups resolve both.
  std::uint32_t add(const std::string& name, const std::string& alias = "");

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t index) const { return names_.at(index); }
  const std::string& alias(std::uint32_t index) const { return aliases_.at(index); }
  std::optional<std::uint32_t> find(const std::string& name_or_alias) const;
  bool contains(const std::string& name_or_alias) const { return find(name_or_alias).has_value(); }

  Variable variable(std::uint32_t index) const { return Variable{index, name(index)}; }
  std::vector<std::uint32_t> all_indices() const;

  // Picks `hint`, or hint2, hint3, ... if taken.
  std::string fresh_name(const std::string& hint) const;

  // New table with the same entries plus `extra`; indices are preserved,
  // so polynomials over `base` are valid over the extension.
  static std::shared_ptr<VariableTable> extend(const VariableTablePtr& base,
                                               const std::vector<std::string>& extra);

  // True when `big` has `small` as an index-preserving prefix.
  static bool is_extension_of(const VariableTable& big, const VariableTable& small);

 private:
  std::vector<std::string> names_;
  std::vector<std::string> aliases_;
  std::map<std::string, std::uint32_t> lookup_;
};

}  // namespace geoprove
