#include "aprop/relation.hpp"

#include <algorithm>
#include <bit>

#include "aprop/errors.hpp"

namespace aprop {

AttributeSet AttributeSet::all(std::size_t arity) {
  if (arity > kMaxAttributes) throw SchemaError("too many attributes for an attribute set");
  return AttributeSet(arity == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << arity) - 1);
}

AttributeSet AttributeSet::of(const Schema& schema, const std::vector<std::string>& names) {
  if (schema.arity() > kMaxAttributes) throw SchemaError("too many attributes for an attribute set");
  std::uint64_t bits = 0;
  for (const auto& n : names) bits |= std::uint64_t{1} << schema.index_of(n);
  return AttributeSet(bits);
}

AttributeSet AttributeSet::of(std::initializer_list<std::size_t> indices) {
  std::uint64_t bits = 0;
  for (std::size_t i : indices) {
    if (i >= kMaxAttributes) throw SchemaError("attribute index out of range");
    bits |= std::uint64_t{1} << i;
  }
  return AttributeSet(bits);
}

std::size_t AttributeSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> AttributeSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxAttributes; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<std::string> AttributeSet::names(const Schema& schema) const {
  std::vector<std::string> out;
  for (std::size_t i : indices()) out.push_back(schema.attribute(i).name);
  return out;
}

Relation::Relation(Schema schema, std::vector<Item> tuples) : schema_(std::move(schema)), tuples_(std::move(tuples)) {
  if (schema_.arity() > AttributeSet::kMaxAttributes) throw SchemaError("relation schema has too many attributes");
  for (const auto& t : tuples_) schema_.validate(t);
  std::sort(tuples_.begin(), tuples_.end());
  const std::size_t before = tuples_.size();
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  duplicates_dropped_ = before - tuples_.size();
}

bool Relation::contains(const Item& t) const { return std::binary_search(tuples_.begin(), tuples_.end(), t); }

Relation Relation::without(const Item& t) const {
  Relation out = *this;
  auto it = std::lower_bound(out.tuples_.begin(), out.tuples_.end(), t);
  if (it != out.tuples_.end() && *it == t) out.tuples_.erase(it);
  out.duplicates_dropped_ = 0;
  return out;
}

Relation to_relation(const Table& table) { return Relation(table.schema, table.rows); }

Table to_table(const Relation& relation) { return Table{relation.schema(), relation.tuples()}; }

Item project(const Item& t, AttributeSet x) {
  Item out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (x.contains(i)) out.push_back(t[i]);
  return out;
}

}  // namespace aprop
