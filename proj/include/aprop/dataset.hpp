#ifndef APROP_DATASET_HPP
#define APROP_DATASET_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aprop/schema.hpp"

namespace aprop {

/// Ordered rows over a schema. Duplicates are kept.
struct Table {
  Schema schema;
  std::vector<Item> rows;
};

/// Labeled examples: descriptive attributes plus one class attribute.
class Dataset {
 public:
  Dataset() = default;
  /// Throws SchemaError / DataError when items or labels do not conform or
  /// the class domain has fewer than two labels.
  Dataset(Schema schema, Attribute class_attribute, std::vector<Item> items, std::vector<Value> labels);

  const Schema& schema() const noexcept { return schema_; }
  const Attribute& class_attribute() const noexcept { return class_attribute_; }
  const Domain& classes() const noexcept { return class_attribute_.domain; }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Item& item(std::size_t i) const { return items_.at(i); }
  Value label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Item>& items() const noexcept { return items_; }
  const std::vector<Value>& labels() const noexcept { return labels_; }

  /// Examples at `indices`, in that order.
  Dataset subset(std::span<const std::size_t> indices) const;
  /// All examples except the one at `index`.
  Dataset without(std::size_t index) const;

 private:
  Schema schema_;
  Attribute class_attribute_;
  std::vector<Item> items_;
  std::vector<Value> labels_;
};

/// Splits `class_column` off as the label.
Dataset to_dataset(const Table& table, std::size_t class_column);
/// Appends the class as the last column.
Table to_table(const Dataset& data);

}  // namespace aprop

#endif  // APROP_DATASET_HPP
