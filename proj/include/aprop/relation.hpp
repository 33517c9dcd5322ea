#ifndef APROP_RELATION_HPP
#define APROP_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "aprop/dataset.hpp"
#include "aprop/schema.hpp"

namespace aprop {

/// Subset of a schema's attributes, canonically ordered by schema position.
class AttributeSet {
 public:
  static constexpr std::size_t kMaxAttributes = 64;

  AttributeSet() = default;
  static AttributeSet from_bits(std::uint64_t bits) { return AttributeSet(bits); }
  static AttributeSet all(std::size_t arity);
  /// Throws SchemaError for unknown names.
  static AttributeSet of(const Schema& schema, const std::vector<std::string>& names);
  static AttributeSet of(std::initializer_list<std::size_t> indices);

  std::uint64_t bits() const noexcept { return bits_; }
  bool contains(std::size_t i) const noexcept { return i < 64 && ((bits_ >> i) & 1U); }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept;
  bool subset_of(AttributeSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  std::vector<std::size_t> indices() const;
  std::vector<std::string> names(const Schema& schema) const;

  AttributeSet operator|(AttributeSet o) const noexcept { return AttributeSet(bits_ | o.bits_); }
  AttributeSet operator&(AttributeSet o) const noexcept { return AttributeSet(bits_ & o.bits_); }
  /// Set difference.
  AttributeSet operator-(AttributeSet o) const noexcept { return AttributeSet(bits_ & ~o.bits_); }
  friend bool operator==(AttributeSet, AttributeSet) = default;

 private:
  explicit AttributeSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Finite set of tuples over a schema. Tuples are kept sorted and unique.
class Relation {
 public:
  Relation() = default;
  /// Validates every tuple and drops duplicates (see duplicates_dropped()).
  Relation(Schema schema, std::vector<Item> tuples);

  const Schema& schema() const noexcept { return schema_; }
  const std::vector<Item>& tuples() const noexcept { return tuples_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  bool empty() const noexcept { return tuples_.empty(); }
  bool contains(const Item& t) const;
  std::size_t duplicates_dropped() const noexcept { return duplicates_dropped_; }

  /// Copy without `t` (no-op when absent).
  Relation without(const Item& t) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.schema_ == b.schema_ && a.tuples_ == b.tuples_;
  }

 private:
  Schema schema_;
  std::vector<Item> tuples_;
  std::size_t duplicates_dropped_ = 0;
};

Relation to_relation(const Table& table);
Table to_table(const Relation& relation);

/// t[X]
Item project(const Item& t, AttributeSet x);

}  // namespace aprop

#endif  // APROP_RELATION_HPP
