#include "aprop/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aprop/ap.hpp"
#include "aprop/classifier.hpp"
#include "aprop/dataset_io.hpp"
#include "aprop/dependencies.hpp"
#include "aprop/errors.hpp"
#include "aprop/evaluation.hpp"
#include "aprop/explainer.hpp"
#include "aprop/generators.hpp"

namespace aprop::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(s);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// Shared input flags
// ---------------------------------------------------------------------------

struct InputArgs {
  std::string data;
  std::string delimiter = ",";
  std::string schema;
  std::string missing = "reject";
  std::string class_column;
};

void add_input_flags(CLI::App* cmd, InputArgs& in, bool with_class) {
  cmd->add_option("--data", in.data, "Delimited text file with a header row");
  cmd->add_option("--delimiter", in.delimiter, "Field delimiter: ',' (default) or 'tab'");
  cmd->add_option("--schema", in.schema, "Sidecar JSON schema declaring every column's domain");
  cmd->add_option("--missing", in.missing, "Missing-value policy: reject or drop")
      ->check(CLI::IsMember({"reject", "drop"}));
  if (with_class) cmd->add_option("--class", in.class_column, "Class column (default: last column)");
}

LoadOptions load_options(const InputArgs& in) {
  LoadOptions o;
  if (in.delimiter == "tab" || in.delimiter == "\\t") o.delimiter = '\t';
  else if (in.delimiter.size() == 1) o.delimiter = in.delimiter[0];
  else throw ConfigError("delimiter must be a single character or 'tab'");
  if (!in.schema.empty()) o.schema_path = in.schema;
  o.missing = in.missing == "drop" ? MissingPolicy::DropRow : MissingPolicy::Reject;
  if (!in.class_column.empty()) o.class_column = in.class_column;
  return o;
}

Table load_input_table(const InputArgs& in, std::ostream& err) {
  LoadReport report;
  Table t = load_table(in.data, load_options(in), &report);
  if (report.rows_dropped) err << "warning: dropped " << report.rows_dropped << " rows with missing values\n";
  return t;
}

json item_json(const Schema& schema, const Item& item) { return json(schema.decode(item)); }

json names_json(const Schema& schema, const std::vector<std::size_t>& attrs) {
  json j = json::array();
  for (std::size_t i : attrs) j.push_back(schema.attribute(i).name);
  return j;
}

json names_json(const Schema& schema, AttributeSet s) { return json(s.names(schema)); }

std::string braces(const std::vector<std::string>& names) { return "{" + join(names, ", ") + "}"; }

// ---------------------------------------------------------------------------
// ap
// ---------------------------------------------------------------------------

struct ApArgs {
  std::string mode;
  std::vector<std::string> values;
  std::vector<std::string> domain;
  std::string format = "human";
};

int cmd_ap(const ApArgs& a, const std::string& usage, std::ostream& out, std::ostream& err) {
  const std::size_t expected = a.mode == "check" ? 4 : 3;
  if (a.values.size() != expected) {
    err << "error: 'ap " << a.mode << "' takes " << expected << " values, got " << a.values.size() << "\n" << usage;
    return kUsage;
  }
  std::vector<std::vector<std::string>> parts;
  for (const auto& v : a.values) parts.push_back(split_list(v));
  const std::size_t arity = parts.front().size();
  for (const auto& p : parts) {
    if (p.size() != arity) {
      err << "error: all values must have the same number of components\n" << usage;
      return kUsage;
    }
  }
  if (!a.domain.empty() && arity != 1) {
    err << "error: --domain only applies to single-attribute values\n" << usage;
    return kUsage;
  }

  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<std::string> symbols = a.domain;
    if (symbols.empty())
      for (const auto& p : parts) symbols.push_back(p[i]);
    attrs.push_back({"v" + std::to_string(i + 1), Domain(symbols)});
  }
  const Schema schema(attrs);
  std::vector<Item> items;
  try {
    for (const auto& p : parts) items.push_back(schema.encode(p));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n" << usage;
    return kUsage;
  }

  json j{{"command", "ap"}, {"mode", a.mode}, {"values", a.values}};
  if (a.mode == "check") {
    const bool holds = ap_holds(items[0], items[1], items[2], items[3]);
    j["result"] = holds;
    if (a.format == "json") emit(out, j);
    else out << (holds ? "true" : "false") << '\n';
    return kOk;
  }
  const auto x = solve(items[0], items[1], items[2]);
  j["solution"] = x ? json(join(schema.decode(*x), ",")) : json(nullptr);
  if (a.format == "json") emit(out, j);
  else out << (x ? join(schema.decode(*x), ",") : "NO-SOLUTION") << '\n';
  return x ? kOk : kNoOutcome;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

struct EvalArgs {
  InputArgs input;
  std::string benchmark;
  std::string strategy = "baseline";
  std::size_t radius = 2;
  std::size_t neighbors = 1;
  std::size_t max_literals = 2;
  std::size_t k = 1;
  std::size_t min_support = 2;
  double min_confidence = 0.9;
  double subsample = 1.0;
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  std::string profile;
  std::vector<std::size_t> k_grid;
  std::string fallback = "knn1";
  std::size_t workers = 1;
  std::string format = "human";
  bool timing = false;
  bool resubstitution = false;

  // which flags were given explicitly
  CLI::Option* strategy_opt = nullptr;
  CLI::Option* radius_opt = nullptr;
  CLI::Option* subsample_opt = nullptr;
  CLI::Option* folds_opt = nullptr;
  CLI::Option* grid_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

json metrics_json(const Metrics& m, bool timing, bool with_pairs) {
  json folds = json::array();
  for (const auto& f : m.folds) {
    json jf{{"index", f.index},
            {"test_rows", f.test_rows},
            {"test_size", f.test_rows.size()},
            {"correct", f.correct},
            {"abstained", f.abstained},
            {"accuracy", f.accuracy},
            {"triplets_examined", f.triplets_examined}};
    if (with_pairs) jf["competent_pairs"] = f.competent_pairs;
    if (timing) jf["seconds"] = f.seconds;
    folds.push_back(std::move(jf));
  }
  json j{{"mean_accuracy", m.mean_accuracy},
         {"std_accuracy", m.std_accuracy},
         {"pooled_accuracy", m.pooled_accuracy},
         {"abstention_rate", m.abstention_rate},
         {"triplets_examined", m.triplets_examined},
         {"stratified", m.stratified},
         {"warnings", m.warnings},
         {"folds", std::move(folds)}};
  if (timing) j["seconds"] = m.seconds;
  return j;
}

void print_metrics(std::ostream& out, const Metrics& m) {
  out << "fold  test  correct  abstained  accuracy\n";
  for (const auto& f : m.folds) {
    out << std::setw(4) << f.index << std::setw(6) << f.test_rows.size() << std::setw(9) << f.correct
        << std::setw(11) << f.abstained << std::setw(10) << std::fixed << std::setprecision(2) << 100.0 * f.accuracy
        << '\n';
  }
  out << std::fixed << std::setprecision(2) << "accuracy: " << 100.0 * m.mean_accuracy << " +/- "
      << 100.0 * m.std_accuracy << " (pooled " << 100.0 * m.pooled_accuracy << "), abstention "
      << 100.0 * m.abstention_rate << "%, triplets examined " << m.triplets_examined << ", time "
      << std::setprecision(3) << m.seconds << " s\n";
  for (const auto& w : m.warnings) out << "warning: " << w << '\n';
}

int cmd_evaluate(EvalArgs& a, std::ostream& out, std::ostream& err) {
  // profiles fill in whatever was not given explicitly
  if (a.profile == "table2") {
    if (!a.strategy_opt->count()) a.strategy = "selected";
    if (!a.radius_opt->count()) a.radius = 2;
    if (!a.subsample_opt->count()) a.subsample = 0.5;
    if (!a.folds_opt->count()) a.folds = 10;
  } else if (a.profile == "table3") {
    if (!a.strategy_opt->count()) a.strategy = "bongard";
    if (!a.folds_opt->count()) a.folds = 10;
    if (!a.grid_opt->count()) a.k_grid = {1, 3, 5, 7, 9, 11};
  }

  std::vector<std::string> problems;
  EvalParams params;
  try {
    params.strategy = parse_strategy(a.strategy);
  } catch (const ConfigError& e) {
    problems.emplace_back(e.what());
  }
  try {
    params.fallback = parse_fallback(a.fallback);
  } catch (const ConfigError& e) {
    problems.emplace_back(e.what());
  }
  params.radius = a.radius;
  params.neighbor_budget = a.neighbors;
  params.max_literals = a.max_literals;
  params.k = a.k;
  params.mining = {a.min_support, a.min_confidence};
  params.subsample = a.subsample;
  try {
    validate(params);
  } catch (const ConfigError& e) {
    problems.emplace_back(e.what());
  }
  if (a.input.data.empty() == a.benchmark.empty()) problems.emplace_back("give exactly one of --data or --benchmark");
  if (!a.resubstitution && a.folds < 2) problems.emplace_back("folds must be >= 2");
  if (!a.resubstitution && !a.seed_opt->count()) problems.emplace_back("--seed is required for cross-validation");
  if (!a.k_grid.empty() && params.strategy != Strategy::Bongard && params.strategy != Strategy::Knn)
    problems.emplace_back("--k-grid applies to the bongard and knn strategies only");
  if (!a.k_grid.empty() && a.resubstitution) problems.emplace_back("--k-grid cannot be combined with --resubstitution");
  for (std::size_t k : a.k_grid)
    if (k < 1) problems.emplace_back("k-grid values must be >= 1");
  if (a.workers < 1) problems.emplace_back("workers must be >= 1");
  if (!problems.empty()) {
    for (const auto& p : problems) err << "error: " << p << '\n';
    return kUsage;
  }

  Dataset data;
  std::string source;
  try {
    if (!a.benchmark.empty()) {
      data = generate_benchmark(a.benchmark);
      source = "benchmark:" + a.benchmark;
    } else {
      data = table_to_dataset(load_input_table(a.input, err), load_options(a.input));
      source = a.input.data;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!a.resubstitution && data.size() < a.folds) {
    err << "error: fewer examples than folds\n";
    return kUsage;
  }

  json j{{"command", "evaluate"},
         {"dataset",
          {{"source", source},
           {"instances", data.size()},
           {"attributes", data.schema().arity()},
           {"classes", data.classes().size()},
           {"class_attribute", data.class_attribute().name}}},
         {"config",
          {{"strategy", to_string(params.strategy)},
           {"radius", params.radius},
           {"neighbor_budget", params.neighbor_budget},
           {"max_literals", params.max_literals},
           {"k", params.k},
           {"min_support", params.mining.min_support},
           {"min_confidence", params.mining.min_confidence},
           {"subsample", params.subsample},
           {"folds", a.resubstitution ? json(nullptr) : json(a.folds)},
           {"seed", a.seed},
           {"fallback", to_string(params.fallback)},
           {"profile", a.profile.empty() ? json(nullptr) : json(a.profile)},
           {"resubstitution", a.resubstitution},
           {"rng", "mt19937_64"}}}};
  const bool with_pairs = params.strategy == Strategy::Selected;

  if (!a.k_grid.empty()) {
    const GridResult grid = grid_search_k(data, params, a.k_grid, a.folds, a.seed, a.workers);
    json runs = json::array();
    for (const auto& run : grid.runs)
      runs.push_back({{"k", run.k}, {"metrics", metrics_json(run.metrics, a.timing, with_pairs)}});
    j["runs"] = std::move(runs);
    j["best_k"] = grid.runs[grid.best].k;
    j["metrics"] = metrics_json(grid.runs[grid.best].metrics, a.timing, with_pairs);
    if (a.format == "json") {
      emit(out, j);
    } else {
      out << "dataset: " << source << " (" << data.size() << " instances, " << data.schema().arity()
          << " attributes, " << data.classes().size() << " classes)\n";
      for (const auto& run : grid.runs)
        out << "k=" << run.k << ": " << std::fixed << std::setprecision(2) << 100.0 * run.metrics.mean_accuracy
            << " +/- " << 100.0 * run.metrics.std_accuracy << '\n';
      out << "best k: " << grid.runs[grid.best].k << '\n';
      print_metrics(out, grid.runs[grid.best].metrics);
    }
    return kOk;
  }

  const Metrics m = a.resubstitution ? resubstitution(data, params, a.seed)
                                     : cross_validate(data, params, a.folds, a.seed, a.workers);
  j["metrics"] = metrics_json(m, a.timing, with_pairs);
  for (const auto& w : m.warnings) err << "warning: " << w << '\n';
  if (a.format == "json") {
    emit(out, j);
  } else {
    out << "dataset: " << source << " (" << data.size() << " instances, " << data.schema().arity()
        << " attributes, " << data.classes().size() << " classes)\n"
        << "strategy: " << to_string(params.strategy) << ", seed " << a.seed << '\n';
    print_metrics(out, m);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// explain
// ---------------------------------------------------------------------------

struct ExplainArgs {
  InputArgs input;
  long row = -1;
  std::string query;
  std::string result;
  std::string target;
  std::string question = "why-not";
  std::vector<std::string> attributes;
  std::string relevance;
  std::string format = "human";
};

json changes_json(const Schema& schema, const std::vector<Change>& change) {
  json j = json::array();
  for (const auto& c : change) {
    const auto& dom = schema.domain(c.attribute);
    j.push_back({{"attribute", schema.attribute(c.attribute).name}, {"from", dom.symbol(c.from)}, {"to", dom.symbol(c.to)}});
  }
  return j;
}

int cmd_explain(const ExplainArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> problems;
  if (a.input.data.empty()) problems.emplace_back("--data is required");
  if ((a.row >= 0) == !a.query.empty()) problems.emplace_back("give exactly one of --row or --query");
  if (a.result.empty()) problems.emplace_back("--result is required");
  if (a.question == "why-not" && a.target.empty()) problems.emplace_back("why-not questions need --target");
  if (!problems.empty()) {
    for (const auto& p : problems) err << "error: " << p << '\n';
    return kUsage;
  }

  const Table table = load_input_table(a.input, err);
  const Schema& schema = table.schema;
  Item query;
  std::optional<std::size_t> query_row;
  if (a.row >= 0) {
    if (static_cast<std::size_t>(a.row) >= table.rows.size()) {
      err << "error: --row out of range\n";
      return kUsage;
    }
    query_row = static_cast<std::size_t>(a.row);
    query = table.rows[*query_row];
  } else {
    try {
      query = schema.encode(split_list(a.query));
    } catch (const Error& e) {
      err << "error: query row does not fit the schema: " << e.what() << '\n';
      return kData;
    }
  }

  const std::size_t result = schema.index_of(a.result);
  const Domain& rdom = schema.domain(result);
  std::string target = a.target;
  if (a.question == "why" && target.empty()) {
    if (rdom.size() != 2) {
      err << "error: 'why' over a non-binary result needs --target\n";
      return kUsage;
    }
    target = rdom.symbol(Value{static_cast<std::uint16_t>(query[result].code == 0 ? 1 : 0)});
  }
  const Question q = make_question(schema, a.result, target, a.attributes);
  if (query[result] == q.target) {
    err << "error: vacuous question: the query already has " << a.result << " = " << target << '\n';
    return kUsage;
  }

  const Explanation e = contrastive_explain(table, query, q);

  json j{{"command", "explain"},
         {"question",
          {{"kind", a.question},
           {"result", a.result},
           {"target", target},
           {"query_result", rdom.symbol(query[result])},
           {"descriptive", names_json(schema, q.descriptive)}}},
         {"query", {{"row", query_row ? json(*query_row) : json(nullptr)}, {"values", item_json(schema, query)}}},
         {"supported", e.supported},
         {"sentence", e.sentence}};
  json adverse = json::array();
  for (const auto& x : e.adverse_examples)
    adverse.push_back({{"row", x.row}, {"change", changes_json(schema, x.change)}});
  j["adverse_examples"] = std::move(adverse);

  std::optional<RuleCandidate> rule;
  if (e.supported) {
    const auto& chosen = e.adverse_examples[*e.chosen];
    json alternatives = json::array();
    for (std::size_t k : e.alternatives) alternatives.push_back(e.adverse_examples[k].row);
    j["chosen_row"] = chosen.row;
    j["alternatives"] = std::move(alternatives);
    j["change"] = changes_json(schema, chosen.change);
    j["split"] = {{"shared", names_json(schema, e.split.shared)},
                  {"context", names_json(schema, e.split.context)},
                  {"change", names_json(schema, e.split.change)},
                  {"supporting_pair", e.split.row_a ? json({*e.split.row_a, *e.split.row_b}) : json(nullptr)}};
    rule = rule_candidate(table, q.descriptive, e.split);
    j["rule"] = {{"change", changes_json(schema, rule->change)},
                 {"result", schema.attribute(rule->result).name},
                 {"from", rdom.symbol(rule->from)},
                 {"to", rdom.symbol(rule->to)},
                 {"supporting_pairs", rule->counts.supporting},
                 {"exception_pairs", rule->counts.exceptions}};
    j["supporting_pairs"] = e.counts.supporting;
    j["exception_pairs"] = e.counts.exceptions;
    j["strength"] = e.strength;
  }

  std::vector<AttributeScore> scores;
  if (!a.relevance.empty()) {
    scores = relevant_attributes(table, result, a.relevance == "chi2" ? RelevanceMethod::ChiSquare
                                                                      : RelevanceMethod::MutualInformation,
                                 q.descriptive);
    json rel = json::array();
    for (const auto& s : scores) rel.push_back({{"attribute", schema.attribute(s.attribute).name}, {"score", s.score}});
    j["relevance"] = {{"method", a.relevance}, {"scores", std::move(rel)}};
  }

  if (a.format == "json") {
    emit(out, j);
  } else {
    out << "why is " << a.result << " " << rdom.symbol(query[result]) << " and not " << target << "?\n";
    if (!e.supported) {
      out << "no adverse example: no row with " << a.result << " = " << target << " to contrast with\n";
    } else {
      const auto& chosen = e.adverse_examples[*e.chosen];
      out << e.sentence << '\n'
          << "adverse example: row " << chosen.row << " (" << join(schema.decode(chosen.item), ", ") << ")\n"
          << "supporting pairs: " << e.counts.supporting << ", exception pairs: " << e.counts.exceptions
          << ", strength: " << std::fixed << std::setprecision(3) << e.strength << '\n';
      for (std::size_t k : e.alternatives) out << "alternative: row " << e.adverse_examples[k].row << '\n';
    }
    for (const auto& s : scores)
      out << "relevance " << schema.attribute(s.attribute).name << ": " << std::setprecision(4) << s.score << '\n';
  }
  return e.supported ? kOk : kNoOutcome;
}

// ---------------------------------------------------------------------------
// deps
// ---------------------------------------------------------------------------

struct DepsArgs {
  InputArgs input;
  std::string mode = "exhaustive";
  std::vector<std::string> x;
  std::vector<std::string> y;
  std::string format = "human";
};

// A quadruple of tuples in r realizing the exchange for X ->> Y, where the
// two source tuples differ both on Y and on the rest.
json ap_witness(const Relation& r, AttributeSet x, AttributeSet y) {
  const Schema& schema = r.schema();
  const AttributeSet all = AttributeSet::all(schema.arity());
  const AttributeSet yy = y - x, zz = all - (x | y);
  for (const auto& t1 : r.tuples()) {
    for (const auto& t2 : r.tuples()) {
      if (project(t1, x) != project(t2, x)) continue;
      if (project(t1, yy) == project(t2, yy) || project(t1, zz) == project(t2, zz)) continue;
      Item t3 = t1, t4 = t2;
      for (std::size_t i : zz.indices()) {
        t3[i] = t2[i];
        t4[i] = t1[i];
      }
      if (!r.contains(t3) || !r.contains(t4)) continue;
      const auto c = mvd_ap_correspondence(t1, t2, t3, t4, x, y);
      return {{"t1", item_json(schema, t1)},
              {"t2", item_json(schema, t2)},
              {"t3", item_json(schema, t3)},
              {"t4", item_json(schema, t4)},
              {"t1:t2::t3:t4", c.straight},
              {"t1:t4::t3:t2", c.reordered}};
    }
  }
  return nullptr;
}

int cmd_deps(const DepsArgs& a, std::ostream& out, std::ostream& err) {
  if (a.input.data.empty()) {
    err << "error: --data is required\n";
    return kUsage;
  }
  if (a.mode == "single" && a.y.empty()) {
    err << "error: single mode needs --y (and optionally --x)\n";
    return kUsage;
  }
  const Relation r = to_relation(load_input_table(a.input, err));
  if (r.duplicates_dropped()) err << "warning: dropped " << r.duplicates_dropped() << " duplicate tuples\n";
  const Schema& schema = r.schema();
  json j{{"command", "deps"},
         {"mode", a.mode},
         {"relation",
          {{"attributes", names_json(schema, AttributeSet::all(schema.arity()))},
           {"tuples", r.size()},
           {"duplicates_dropped", r.duplicates_dropped()}}}};

  if (a.mode == "single") {
    const AttributeSet x = AttributeSet::of(schema, a.x), y = AttributeSet::of(schema, a.y);
    const AttributeSet z = AttributeSet::all(schema.arity()) - (x | y);
    const auto mv = find_mvd_violation(r, x, y);
    const auto wv = find_weak_mvd_violation(r, x, y);
    j["x"] = names_json(schema, x);
    j["y"] = names_json(schema, y);
    j["z"] = names_json(schema, z);
    j["fd"] = fd_holds(r, x, y);
    j["mvd"] = !mv;
    j["weak_mvd"] = !wv;
    j["trivial"] = is_trivial_mvd(schema, x, y);
    j["lossless_join"] = lossless_join_check(r, x, y);
    j["mvd_witness"] = mv ? json{{"t1", item_json(schema, mv->t1)},
                                 {"t2", item_json(schema, mv->t2)},
                                 {"missing", item_json(schema, mv->missing)}}
                          : json(nullptr);
    j["weak_mvd_witness"] = wv ? json{{"t1", item_json(schema, wv->t1)},
                                      {"t2", item_json(schema, wv->t2)},
                                      {"t3", item_json(schema, wv->t3)},
                                      {"missing", item_json(schema, wv->missing)}}
                               : json(nullptr);
    const NestedRelation nested = nest_rewrite(r, x, y);
    json rows = json::array();
    auto values = [&](AttributeSet s, const std::vector<Item>& vs) {
      json arr = json::array();
      const auto idx = s.indices();
      for (const auto& v : vs) {
        std::vector<std::string> syms;
        for (std::size_t k = 0; k < idx.size(); ++k) syms.push_back(schema.domain(idx[k]).symbol(v[k]));
        arr.push_back(join(syms, ","));
      }
      return arr;
    };
    for (const auto& row : nested.rows)
      rows.push_back({{"x", values(x, {row.x_values})[0]},
                      {"y", values(nested.y, row.y_values)},
                      {"z", values(nested.z, row.z_values)},
                      {"product", row.is_product}});
    j["nested"] = std::move(rows);
    j["ap_witness"] = ap_witness(r, x, y);

    if (a.format == "json") {
      emit(out, j);
    } else {
      const std::string dep = braces(x.names(schema)) + " ->> " + braces(y.names(schema));
      out << std::boolalpha << dep << ": " << (mv ? "fails" : "holds") << (j["trivial"].get<bool>() ? " (trivial)" : "") << '\n'
          << "fd: " << j["fd"].get<bool>() << ", weak mvd: " << !wv << ", lossless join: "
          << j["lossless_join"].get<bool>() << '\n';
      if (mv)
        out << "missing exchanged tuple (" << join(schema.decode(mv->missing), ", ") << ") for ("
            << join(schema.decode(mv->t1), ", ") << ") and (" << join(schema.decode(mv->t2), ", ") << ")\n";
      for (const auto& row : j["nested"])
        out << "nested: " << row["x"].get<std::string>() << " | {" << join(row["y"].get<std::vector<std::string>>(), "; ")
            << "} x {" << join(row["z"].get<std::vector<std::string>>(), "; ") << "}"
            << (row["product"].get<bool>() ? "" : " (not a product)") << '\n';
    }
    return kOk;
  }

  if (schema.arity() > kMaxExhaustiveArity) {
    err << "error: exhaustive mode supports at most " << kMaxExhaustiveArity << " attributes; use --mode single\n";
    return kUsage;
  }
  const std::uint64_t count = std::uint64_t{1} << schema.arity();
  json deps = json::array();
  for (std::uint64_t xb = 0; xb < count; ++xb) {
    for (std::uint64_t yb = 1; yb < count; ++yb) {
      if (xb & yb) continue;
      const auto x = AttributeSet::from_bits(xb), y = AttributeSet::from_bits(yb);
      const bool fd = fd_holds(r, x, y), mvd = mvd_holds(r, x, y), weak = weak_mvd_holds(r, x, y);
      if (!fd && !mvd && !weak) continue;
      const bool trivial = is_trivial_mvd(schema, x, y);
      json d{{"x", names_json(schema, x)},
             {"y", names_json(schema, y)},
             {"fd", fd},
             {"mvd", mvd},
             {"weak_mvd", weak},
             {"trivial", trivial},
             {"lossless_join", lossless_join_check(r, x, y)}};
      if (mvd && !trivial) d["ap_witness"] = ap_witness(r, x, y);
      deps.push_back(std::move(d));
    }
  }
  const InferenceReport inference = mvd_inference_check(r);
  j["dependencies"] = deps;
  j["inference"] = {{"implications_checked", inference.implications_checked},
                    {"violations", inference.violation_count}};
  if (a.format == "json") {
    emit(out, j);
  } else {
    for (const auto& d : deps) {
      if (d["trivial"].get<bool>()) continue;
      std::vector<std::string> kinds;
      if (d["fd"].get<bool>()) kinds.emplace_back("fd");
      if (d["mvd"].get<bool>()) kinds.emplace_back("mvd");
      if (d["weak_mvd"].get<bool>()) kinds.emplace_back("weak-mvd");
      out << braces(d["x"].get<std::vector<std::string>>()) << " ->> " << braces(d["y"].get<std::vector<std::string>>())
          << "  [" << join(kinds, ", ") << "]" << (d["lossless_join"].get<bool>() ? " lossless" : "") << '\n';
    }
    out << "inference check: " << inference.implications_checked << " implications, " << inference.violation_count
        << " violations\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::size_t n = 2;
  std::vector<int> coefficients;
  std::string spec;
  std::string truth;
  std::size_t attributes = 4;
  std::size_t domain_size = 2;
  std::size_t tuples = 8;
  std::string name;
  std::string out;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
};

PlantedSpec parse_planted(const std::string& path, std::optional<std::uint64_t> seed) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open planted spec '" + path + "'");
  try {
    const json j = json::parse(in);
    PlantedSpec spec;
    spec.attributes = j.value("attributes", spec.attributes);
    spec.domain_size = j.value("domain_size", spec.domain_size);
    spec.classes = j.value("classes", spec.classes);
    spec.seed = seed ? *seed : j.at("seed").get<std::uint64_t>();
    for (const auto& jr : j.value("rules", json::array())) {
      PlantedRule rule;
      for (const auto& jc : jr.at("change"))
        rule.change.push_back({jc.at("attribute").get<std::size_t>(), jc.at("from").get<std::uint16_t>(),
                               jc.at("to").get<std::uint16_t>()});
      rule.label_from = jr.at("label_from").get<std::uint16_t>();
      rule.label_to = jr.at("label_to").get<std::uint16_t>();
      rule.instances = jr.value("instances", std::size_t{1});
      rule.exceptions = jr.value("exceptions", std::size_t{0});
      spec.rules.push_back(std::move(rule));
    }
    return spec;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed planted spec (a seed is required): ") + e.what());
  }
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const bool seeded = a.seed_opt->count() > 0;
  Table table;
  json truth;
  if (a.kind == "affine") {
    if (a.coefficients.empty() && !seeded) {
      err << "error: random affine coefficients need --seed\n";
      return kUsage;
    }
    AffineSpec spec{a.n, std::nullopt, a.seed};
    if (!a.coefficients.empty()) spec.coefficients = a.coefficients;
    err << "coefficients: " << json(affine_coefficients(spec)).dump() << '\n';
    table = to_table(generate_affine(spec));
  } else if (a.kind == "planted") {
    if (a.spec.empty()) {
      err << "error: planted generation needs --spec\n";
      return kUsage;
    }
    const PlantedDataset planted =
        generate_planted_rules(parse_planted(a.spec, seeded ? std::optional(a.seed) : std::nullopt));
    table = to_table(planted.data);
    const Schema& schema = planted.data.schema();
    const Domain& classes = planted.data.classes();
    truth = json::array();
    for (const auto& t : planted.truth) {
      json change = json::array();
      for (std::size_t i = 0; i < t.change.size(); ++i)
        if (t.change[i].is_change())
          change.push_back({{"attribute", schema.attribute(i).name},
                            {"from", schema.domain(i).symbol(t.change[i].from())},
                            {"to", schema.domain(i).symbol(t.change[i].to())}});
      truth.push_back({{"change", change},
                       {"label_from", classes.symbol(t.label_from)},
                       {"label_to", classes.symbol(t.label_to)},
                       {"instances", t.instances},
                       {"exceptions", t.exceptions},
                       {"confidence", t.confidence}});
    }
  } else if (a.kind == "relation") {
    if (!seeded) {
      err << "error: random relations need --seed\n";
      return kUsage;
    }
    table = to_table(generate_random_relation(uniform_schema(a.attributes, a.domain_size), a.tuples, a.seed));
  } else {
    if (a.name.empty()) {
      err << "error: benchmark generation needs --name\n";
      return kUsage;
    }
    table = to_table(generate_benchmark(a.name));
  }

  if (!truth.is_null()) {
    if (a.truth.empty()) {
      err << truth.dump(2) << '\n';
    } else {
      std::ofstream t(a.truth);
      if (!t) throw DataError("cannot write '" + a.truth + "'");
      t << truth.dump(2) << '\n';
    }
  }
  if (a.out.empty()) {
    write_table(out, table);
  } else {
    std::ofstream f(a.out);
    if (!f) throw DataError("cannot write '" + a.out + "'");
    write_table(f, table);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analogical-proportion reasoning over nominal tabular data", "aprop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "aprop 1.0.0");

  ApArgs ap;
  auto* ap_cmd = app.add_subcommand("ap", "Check a proportion a:b::c:d or solve a:b::c:x");
  ap_cmd->add_option("mode", ap.mode, "check or solve")->required()->check(CLI::IsMember({"check", "solve"}));
  ap_cmd->add_option("values", ap.values, "Values; comma-separated components form tuples");
  ap_cmd->add_option("--domain", ap.domain, "Declared domain for single values")->delimiter(',');
  ap_cmd->add_option("--format", ap.format)->check(CLI::IsMember({"human", "json"}));

  EvalArgs ev;
  auto* ev_cmd = app.add_subcommand("evaluate", "Cross-validate an analogical or baseline classifier");
  add_input_flags(ev_cmd, ev.input, true);
  ev_cmd->add_option("--benchmark", ev.benchmark, "Built-in corpus: monk1, monk2, monk3, balance");
  ev.strategy_opt = ev_cmd->add_option("--strategy", ev.strategy, "baseline, selected, bongard, knn or constant");
  ev.radius_opt = ev_cmd->add_option("--radius", ev.radius, "Hamming radius of c around the query (selected)");
  ev_cmd->add_option("--neighbors", ev.neighbors, "Voting neighbors (bongard)");
  ev_cmd->add_option("--max-literals", ev.max_literals, "Largest separator conjunction (bongard)");
  ev_cmd->add_option("-k,--k", ev.k, "Neighbors (knn)");
  ev_cmd->add_option("--min-support", ev.min_support);
  ev_cmd->add_option("--min-confidence", ev.min_confidence);
  ev.subsample_opt = ev_cmd->add_option("--subsample", ev.subsample, "Share of each training fold mined for pairs");
  ev.folds_opt = ev_cmd->add_option("--folds", ev.folds);
  ev.seed_opt = ev_cmd->add_option("--seed", ev.seed, "Seed of the mt19937_64 fold shuffle and subsampling");
  ev_cmd->add_option("--profile", ev.profile, "table2 or table3")->check(CLI::IsMember({"table2", "table3"}));
  ev.grid_opt = ev_cmd->add_option("--k-grid", ev.k_grid, "Grid of k values (bongard budget or knn k)")->delimiter(',');
  ev_cmd->add_option("--fallback", ev.fallback, "On abstention: knn1 or none");
  ev_cmd->add_option("--workers", ev.workers, "Threads used for folds");
  ev_cmd->add_option("--format", ev.format)->check(CLI::IsMember({"human", "json"}));
  ev_cmd->add_flag("--timing", ev.timing, "Include wall-clock seconds in JSON output");
  ev_cmd->add_flag("--resubstitution", ev.resubstitution, "Train and test on the whole dataset");

  ExplainArgs ex;
  auto* ex_cmd = app.add_subcommand("explain", "Contrastive explanation of one row's result");
  add_input_flags(ex_cmd, ex.input, false);
  ex_cmd->add_option("--row", ex.row, "Query row (0-based, data rows only)");
  ex_cmd->add_option("--query", ex.query, "Query as comma-separated values of every column");
  ex_cmd->add_option("--result", ex.result, "Column playing the Result role");
  ex_cmd->add_option("--target", ex.target, "Contrasted result value");
  ex_cmd->add_option("--question", ex.question)->check(CLI::IsMember({"why", "why-not"}));
  ex_cmd->add_option("--attributes", ex.attributes, "Descriptive columns (default: all but the result)")
      ->delimiter(',');
  ex_cmd->add_option("--relevance", ex.relevance, "Also rank attributes: mi or chi2")
      ->check(CLI::IsMember({"mi", "chi2"}));
  ex_cmd->add_option("--format", ex.format)->check(CLI::IsMember({"human", "json"}));

  DepsArgs dp;
  auto* dp_cmd = app.add_subcommand("deps", "Functional and (weak) multivalued dependency analysis");
  add_input_flags(dp_cmd, dp.input, false);
  dp_cmd->add_option("--mode", dp.mode)->check(CLI::IsMember({"exhaustive", "single"}));
  dp_cmd->add_option("--x", dp.x, "Attributes of X")->delimiter(',');
  dp_cmd->add_option("--y", dp.y, "Attributes of Y")->delimiter(',');
  dp_cmd->add_option("--format", dp.format)->check(CLI::IsMember({"human", "json"}));

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic or benchmark dataset as CSV");
  gen_cmd->add_option("kind", gen.kind, "affine, planted, relation or benchmark")
      ->required()
      ->check(CLI::IsMember({"affine", "planted", "relation", "benchmark"}));
  gen_cmd->add_option("--n", gen.n, "Affine arity");
  gen_cmd->add_option("--coefficients", gen.coefficients, "Affine c0..cn")->delimiter(',');
  gen_cmd->add_option("--spec", gen.spec, "Planted-rule JSON spec");
  gen_cmd->add_option("--truth", gen.truth, "Where to write the planted ground truth (JSON)");
  gen_cmd->add_option("--attributes", gen.attributes, "Relation arity");
  gen_cmd->add_option("--domain-size", gen.domain_size, "Relation domain size");
  gen_cmd->add_option("--tuples", gen.tuples, "Relation size");
  gen_cmd->add_option("--name", gen.name, "Benchmark: monk1, monk2, monk3, balance");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");
  gen.seed_opt = gen_cmd->add_option("--seed", gen.seed);

  std::vector<const char*> argv{"aprop"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "aprop 1.0.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  try {
    if (ap_cmd->parsed()) return cmd_ap(ap, ap_cmd->help(), out, err);
    if (ev_cmd->parsed()) return cmd_evaluate(ev, out, err);
    if (ex_cmd->parsed()) return cmd_explain(ex, out, err);
    if (dp_cmd->parsed()) return cmd_deps(dp, out, err);
    if (gen_cmd->parsed()) return cmd_generate(gen, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace aprop::cli
