#ifndef APROP_SCHEMA_HPP
#define APROP_SCHEMA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aprop {

/// Interned nominal symbol: an index into the domain of one attribute.
/// Codes follow the lexicographic order of the symbols, so comparing two
/// values of the same domain compares their symbols.
struct Value {
  std::uint16_t code = 0;

  friend auto operator<=>(const Value&, const Value&) = default;
};

/// One value per schema attribute.
using Item = std::vector<Value>;

/// Finite, closed, lexicographically ordered set of symbols.
class Domain {
 public:
  Domain() = default;
  /// Sorts and deduplicates `symbols`. Throws DomainError when empty.
  explicit Domain(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool contains(std::string_view symbol) const noexcept;
  std::optional<Value> find(std::string_view symbol) const noexcept;
  /// Throws DomainError for unknown symbols.
  Value value(std::string_view symbol) const;
  const std::string& symbol(Value v) const;
  bool contains(Value v) const noexcept { return v.code < symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  std::vector<std::string> symbols_;
};

struct Attribute {
  std::string name;
  Domain domain;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Ordered list of uniquely named nominal attributes.
class Schema {
 public:
  Schema() = default;
  /// Throws SchemaError on duplicate names.
  explicit Schema(std::vector<Attribute> attributes);

  std::size_t arity() const noexcept { return attributes_.size(); }
  const Attribute& attribute(std::size_t i) const { return attributes_.at(i); }
  const std::vector<Attribute>& attributes() const noexcept { return attributes_; }
  const Domain& domain(std::size_t i) const { return attributes_.at(i).domain; }

  std::optional<std::size_t> find(std::string_view name) const noexcept;
  /// Throws SchemaError for unknown names.
  std::size_t index_of(std::string_view name) const;

  /// Throws SchemaError when the item has the wrong arity or an
  /// out-of-domain code.
  void validate(const Item& item) const;
  bool conforms(const Item& item) const noexcept;

  /// Interns one row of symbols. Throws DomainError / SchemaError.
  Item encode(const std::vector<std::string>& symbols) const;
  std::vector<std::string> decode(const Item& item) const;

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<Attribute> attributes_;
};

/// Throws SchemaError unless all items share one arity.
void require_same_arity(const Item& a, const Item& b);

struct ItemHash {
  std::size_t operator()(const Item& item) const noexcept;
};

}  // namespace aprop

#endif  // APROP_SCHEMA_HPP
