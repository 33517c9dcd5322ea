#include "aprop/dataset.hpp"

#include "aprop/errors.hpp"

namespace aprop {

Dataset::Dataset(Schema schema, Attribute class_attribute, std::vector<Item> items,
                 std::vector<Value> labels)
    : schema_(std::move(schema)),
      class_attribute_(std::move(class_attribute)),
      items_(std::move(items)),
      labels_(std::move(labels)) {
  if (class_attribute_.domain.size() < 2)
    throw DataError("class attribute '" + class_attribute_.name + "' needs at least two labels");
  if (items_.size() != labels_.size()) throw DataError("item and label counts differ");
  for (const auto& item : items_) schema_.validate(item);
  for (Value l : labels_)
    if (!class_attribute_.domain.contains(l)) throw SchemaError("label outside the class domain");
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out;
  out.schema_ = schema_;
  out.class_attribute_ = class_attribute_;
  out.items_.reserve(indices.size());
  out.labels_.reserve(indices.size());
  for (std::size_t i : indices) {
    out.items_.push_back(items_.at(i));
    out.labels_.push_back(labels_.at(i));
  }
  return out;
}

Dataset Dataset::without(std::size_t index) const {
  std::vector<std::size_t> keep;
  keep.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (i != index) keep.push_back(i);
  return subset(keep);
}

Dataset to_dataset(const Table& table, std::size_t class_column) {
  if (class_column >= table.schema.arity()) throw SchemaError("class column out of range");
  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < table.schema.arity(); ++i)
    if (i != class_column) attrs.push_back(table.schema.attribute(i));
  std::vector<Item> items;
  std::vector<Value> labels;
  items.reserve(table.rows.size());
  labels.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    table.schema.validate(row);
    Item item;
    item.reserve(row.size() - 1);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (i != class_column) item.push_back(row[i]);
    items.push_back(std::move(item));
    labels.push_back(row[class_column]);
  }
  return Dataset(Schema(std::move(attrs)), table.schema.attribute(class_column), std::move(items),
                 std::move(labels));
}

Table to_table(const Dataset& data) {
  std::vector<Attribute> attrs = data.schema().attributes();
  attrs.push_back(data.class_attribute());
  Table table{Schema(std::move(attrs)), {}};
  table.rows.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    Item row = data.item(i);
    row.push_back(data.label(i));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace aprop
