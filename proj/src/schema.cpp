#include "aprop/schema.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "aprop/errors.hpp"

namespace aprop {

Domain::Domain(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
  if (symbols_.empty()) throw DomainError("domain must contain at least one symbol");
  if (symbols_.size() > std::numeric_limits<std::uint16_t>::max())
    throw DomainError("domain too large");
}

bool Domain::contains(std::string_view symbol) const noexcept { return find(symbol).has_value(); }

std::optional<Value> Domain::find(std::string_view symbol) const noexcept {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol,
                             [](const std::string& s, std::string_view key) { return s < key; });
  if (it == symbols_.end() || *it != symbol) return std::nullopt;
  return Value{static_cast<std::uint16_t>(it - symbols_.begin())};
}

Value Domain::value(std::string_view symbol) const {
  if (auto v = find(symbol)) return *v;
  throw DomainError("symbol '" + std::string(symbol) + "' is not in the domain");
}

const std::string& Domain::symbol(Value v) const {
  if (!contains(v)) throw DomainError("value code " + std::to_string(v.code) + " outside domain");
  return symbols_[v.code];
}

Schema::Schema(std::vector<Attribute> attributes) : attributes_(std::move(attributes)) {
  std::unordered_set<std::string> seen;
  for (const auto& a : attributes_) {
    if (!seen.insert(a.name).second) throw SchemaError("duplicate attribute name '" + a.name + "'");
    if (a.domain.size() == 0) throw SchemaError("attribute '" + a.name + "' has an empty domain");
  }
}

std::optional<std::size_t> Schema::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Schema::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw SchemaError("unknown attribute '" + std::string(name) + "'");
}

bool Schema::conforms(const Item& item) const noexcept {
  if (item.size() != attributes_.size()) return false;
  for (std::size_t i = 0; i < item.size(); ++i)
    if (!attributes_[i].domain.contains(item[i])) return false;
  return true;
}

void Schema::validate(const Item& item) const {
  if (item.size() != attributes_.size())
    throw SchemaError("item arity " + std::to_string(item.size()) + " does not match schema arity " +
                      std::to_string(attributes_.size()));
  for (std::size_t i = 0; i < item.size(); ++i)
    if (!attributes_[i].domain.contains(item[i]))
      throw SchemaError("value out of domain for attribute '" + attributes_[i].name + "'");
}

Item Schema::encode(const std::vector<std::string>& symbols) const {
  if (symbols.size() != attributes_.size())
    throw SchemaError("row has " + std::to_string(symbols.size()) + " values, schema has " +
                      std::to_string(attributes_.size()));
  Item item(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    auto v = attributes_[i].domain.find(symbols[i]);
    if (!v)
      throw DomainError("value '" + symbols[i] + "' not in domain of attribute '" +
                        attributes_[i].name + "'");
    item[i] = *v;
  }
  return item;
}

std::vector<std::string> Schema::decode(const Item& item) const {
  validate(item);
  std::vector<std::string> out;
  out.reserve(item.size());
  for (std::size_t i = 0; i < item.size(); ++i) out.push_back(attributes_[i].domain.symbol(item[i]));
  return out;
}

void require_same_arity(const Item& a, const Item& b) {
  if (a.size() != b.size())
    throw SchemaError("schema mismatch: arities " + std::to_string(a.size()) + " and " +
                      std::to_string(b.size()));
}

std::size_t ItemHash::operator()(const Item& item) const noexcept {
  // FNV-1a over the codes
  std::uint64_t h = 1469598103934665603ULL;
  for (Value v : item) {
    h ^= v.code;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace aprop
