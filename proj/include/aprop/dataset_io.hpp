#ifndef APROP_DATASET_IO_HPP
#define APROP_DATASET_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "aprop/dataset.hpp"

namespace aprop {

enum class MissingPolicy { Reject, DropRow };

struct LoadOptions {
  char delimiter = ',';
  /// Class column name; the last column when unset.
  std::optional<std::string> class_column;
  std::string missing_token = "?";
  MissingPolicy missing = MissingPolicy::Reject;
  /// Sidecar JSON schema declaring every column's domain. Domains are
  /// inferred from the observed values otherwise.
  std::optional<std::filesystem::path> schema_path;
};

struct LoadReport {
  std::size_t rows_read = 0;
  std::size_t rows_dropped = 0;
};

/// Delimited text with a header row. Throws DataError on empty input,
/// ragged rows, missing values under the Reject policy, and values outside a
/// declared domain.
Table read_table(std::istream& in, const LoadOptions& options = {}, LoadReport* report = nullptr);
Table load_table(const std::filesystem::path& path, const LoadOptions& options = {}, LoadReport* report = nullptr);

Dataset load_dataset(const std::filesystem::path& path, const LoadOptions& options = {},
                     LoadReport* report = nullptr);
/// Splits the class column off a loaded table according to `options`.
Dataset table_to_dataset(const Table& table, const LoadOptions& options);

void write_table(std::ostream& out, const Table& table, char delimiter = ',');
void write_dataset(std::ostream& out, const Dataset& data, char delimiter = ',');

/// Sidecar format: {"attributes": [{"name": "...", "domain": ["...", ...]}, ...]}
Schema parse_schema_json(const std::string& text);
Schema load_schema(const std::filesystem::path& path);
std::string schema_to_json(const Schema& schema);

}  // namespace aprop

#endif  // APROP_DATASET_IO_HPP
