#include "geoprove/variable.hpp"

#include <stdexcept>

namespace geoprove {

std::uint32_t VariableTable::add(const std::string& name, const std::string& alias) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  if (lookup_.count(name)) throw std::invalid_argument("duplicate variable '" + name + "'");
  if (!alias.empty() && lookup_.count(alias))
    throw std::invalid_argument("duplicate variable alias '" + alias + "'");
  auto index = static_cast<std::uint32_t>(names_.size());
  names_.push_back(name);
  aliases_.push_back(alias);
  lookup_[name] = index;
  if (!alias.empty()) lookup_[alias] = index;
  return index;
}

std::optional<std::uint32_t> VariableTable::find(const std::string& name_or_alias) const {
  auto it = lookup_.find(name_or_alias);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> VariableTable::all_indices() const {
  std::vector<std::uint32_t> out(size());
  for (std::uint32_t i = 0; i < size(); ++i) out[i] = i;
  return out;
}

std::string VariableTable::fresh_name(const std::string& hint) const {
  if (!contains(hint)) return hint;
  for (int k = 2;; ++k) {
    std::string candidate = hint + std::to_string(k);
    if (!contains(candidate)) return candidate;
  }
}

std::shared_ptr<VariableTable> VariableTable::extend(const VariableTablePtr& base,
                                                     const std::vector<std::string>& extra) {
  auto out = std::make_shared<VariableTable>(*base);
  for (const auto& name : extra) out->add(name);
  return out;
}

bool VariableTable::is_extension_of(const VariableTable& big, const VariableTable& small) {
  if (big.size() < small.size()) return false;
  for (std::uint32_t i = 0; i < small.size(); ++i)
    if (big.name(i) != small.name(i)) return false;
  return true;
}

}  // namespace geoprove
