#include "aprop/dataset_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aprop/errors.hpp"

namespace aprop {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, delimiter)) out.push_back(trim(cell));
  if (!line.empty() && line.back() == delimiter) out.emplace_back();
  return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r\n") == std::string::npos; }

}  // namespace

Table read_table(std::istream& in, const LoadOptions& options, LoadReport* report) {
  std::optional<Schema> declared;
  if (options.schema_path) declared = load_schema(*options.schema_path);

  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    header = split(line, options.delimiter);
    break;
  }
  if (header.empty()) throw DataError("empty file: no header row");

  std::vector<std::vector<std::string>> cells;
  LoadReport local;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto row = split(line, options.delimiter);
    if (row.size() != header.size())
      throw DataError("ragged row at line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, got " + std::to_string(row.size()));
    ++local.rows_read;
    bool missing = false;
    for (const auto& c : row) missing = missing || c.empty() || c == options.missing_token;
    if (missing) {
      if (options.missing == MissingPolicy::Reject)
        throw DataError("missing value at line " + std::to_string(line_no));
      ++local.rows_dropped;
      continue;
    }
    cells.push_back(std::move(row));
  }
  if (report) *report = local;

  Schema schema;
  if (declared) {
    if (declared->arity() != header.size()) throw DataError("sidecar schema arity does not match the header");
    for (std::size_t i = 0; i < header.size(); ++i)
      if (declared->attribute(i).name != header[i])
        throw DataError("sidecar schema names column " + std::to_string(i) + " '" + declared->attribute(i).name +
                        "' but the header says '" + header[i] + "'");
    schema = *declared;
  } else {
    if (cells.empty()) throw DataError("no data rows to infer domains from");
    std::vector<Attribute> attrs;
    for (std::size_t i = 0; i < header.size(); ++i) {
      std::set<std::string> seen;
      for (const auto& row : cells) seen.insert(row[i]);
      attrs.push_back({header[i], Domain({seen.begin(), seen.end()})});
    }
    try {
      schema = Schema(std::move(attrs));
    } catch (const SchemaError& e) {
      throw DataError(e.what());
    }
  }

  Table table{schema, {}};
  table.rows.reserve(cells.size());
  for (const auto& row : cells) {
    try {
      table.rows.push_back(schema.encode(row));
    } catch (const Error& e) {
      throw DataError(std::string("unseen value: ") + e.what());
    }
  }
  return table;
}

Table load_table(const std::filesystem::path& path, const LoadOptions& options, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_table(in, options, report);
}

Dataset table_to_dataset(const Table& table, const LoadOptions& options) {
  std::size_t class_column = table.schema.arity() - 1;
  if (options.class_column) {
    auto idx = table.schema.find(*options.class_column);
    if (!idx) throw DataError("class column '" + *options.class_column + "' absent");
    class_column = *idx;
  }
  if (table.schema.arity() < 2) throw DataError("a dataset needs at least one attribute besides the class");
  try {
    return to_dataset(table, class_column);
  } catch (const DataError&) {
    throw;
  } catch (const Error& e) {
    throw DataError(e.what());
  }
}

Dataset load_dataset(const std::filesystem::path& path, const LoadOptions& options, LoadReport* report) {
  return table_to_dataset(load_table(path, options, report), options);
}

void write_table(std::ostream& out, const Table& table, char delimiter) {
  for (std::size_t i = 0; i < table.schema.arity(); ++i)
    out << (i ? std::string(1, delimiter) : "") << table.schema.attribute(i).name;
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? std::string(1, delimiter) : "") << table.schema.domain(i).symbol(row[i]);
    out << '\n';
  }
}

void write_dataset(std::ostream& out, const Dataset& data, char delimiter) {
  write_table(out, to_table(data), delimiter);
}

Schema parse_schema_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed schema file: ") + e.what());
  }
  if (!j.contains("attributes") || !j["attributes"].is_array())
    throw DataError("schema file needs an 'attributes' array");
  std::vector<Attribute> attrs;
  try {
    for (const auto& a : j["attributes"]) {
      auto symbols = a.at("domain").get<std::vector<std::string>>();
      if (symbols.size() < 2)
        throw DataError("declared domain of '" + a.at("name").get<std::string>() + "' needs at least two symbols");
      attrs.push_back({a.at("name").get<std::string>(), Domain(std::move(symbols))});
    }
    return Schema(std::move(attrs));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed schema file: ") + e.what());
  } catch (const SchemaError& e) {
    throw DataError(e.what());
  }
}

Schema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open schema '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_schema_json(ss.str());
}

std::string schema_to_json(const Schema& schema) {
  nlohmann::json j;
  j["attributes"] = nlohmann::json::array();
  for (const auto& a : schema.attributes()) j["attributes"].push_back({{"name", a.name}, {"domain", a.domain.symbols()}});
  return j.dump(2);
}

}  // namespace aprop
