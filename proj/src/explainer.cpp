#include "aprop/explainer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "aprop/errors.hpp"

namespace aprop {

namespace {

std::vector<Change> change_between(const Item& from, const Item& to, const std::vector<std::size_t>& attrs) {
  std::vector<Change> out;
  for (std::size_t i : attrs)
    if (from[i] != to[i]) out.push_back({i, from[i], to[i]});
  return out;
}

void check_question(const Table& table, const Item& query, const Question& q) {
  table.schema.validate(query);
  if (q.result >= table.schema.arity()) throw SchemaError("result column out of range");
  if (!table.schema.domain(q.result).contains(q.target)) throw DomainError("target outside the result domain");
  for (std::size_t i : q.descriptive)
    if (i >= table.schema.arity() || i == q.result) throw SchemaError("bad descriptive attribute");
}

ContextSplit build_split(const Table& table, const Question& q, const AdverseExample& x, const Item& query) {
  ContextSplit split;
  split.result = q.result;
  split.p = q.target;
  split.q = query[q.result];
  split.row_c = x.row;
  const Item& c = x.item;

  // first supporting pair other than (x, query) itself
  const auto& rows = table.rows;
  for (std::size_t ia = 0; ia < rows.size() && !split.row_a; ++ia) {
    if (rows[ia][q.result] != split.p) continue;
    for (std::size_t ib = 0; ib < rows.size(); ++ib) {
      if (ia == ib || rows[ib][q.result] != split.q) continue;
      if (ia == x.row && rows[ib] == query) continue;
      if (change_between(rows[ia], rows[ib], q.descriptive) == x.change) {
        split.row_a = ia;
        split.row_b = ib;
        break;
      }
    }
  }

  for (std::size_t i : q.descriptive) {
    if (c[i] != query[i]) {
      split.change.push_back(i);
      split.v.push_back(c[i]);
      split.w.push_back(query[i]);
    } else if (split.row_a && rows[*split.row_a][i] != c[i]) {
      split.context.push_back(i);
      split.t.push_back(rows[*split.row_a][i]);
      split.u.push_back(c[i]);
    } else {
      split.shared.push_back(i);
      split.s.push_back(c[i]);
    }
  }
  return split;
}

}  // namespace

Question make_question(const Schema& schema, std::string_view result, std::string_view target,
                       const std::vector<std::string>& descriptive) {
  Question q;
  q.result = schema.index_of(result);
  q.target = schema.domain(q.result).value(target);
  if (descriptive.empty()) {
    for (std::size_t i = 0; i < schema.arity(); ++i)
      if (i != q.result) q.descriptive.push_back(i);
  } else {
    for (const auto& name : descriptive) {
      const std::size_t i = schema.index_of(name);
      if (i == q.result) throw SchemaError("the result column cannot be descriptive");
      q.descriptive.push_back(i);
    }
    std::sort(q.descriptive.begin(), q.descriptive.end());
    q.descriptive.erase(std::unique(q.descriptive.begin(), q.descriptive.end()), q.descriptive.end());
  }
  return q;
}

std::vector<AdverseExample> find_adverse_examples(const Table& table, const Item& query, const Question& q) {
  check_question(table, query, q);
  if (query[q.result] == q.target) throw ConfigError("vacuous question: the query already has the target result");
  std::vector<AdverseExample> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const Item& x = table.rows[r];
    if (x[q.result] != q.target) continue;
    auto change = change_between(x, query, q.descriptive);
    if (change.empty()) continue;
    out.push_back({r, x, std::move(change)});
  }
  return out;
}

double PairCounts::strength() const noexcept {
  const std::size_t total = supporting + exceptions;
  return total == 0 ? 0.0 : static_cast<double>(supporting) / static_cast<double>(total);
}

PairCounts count_change_pairs(const Table& table, const std::vector<std::size_t>& descriptive, std::size_t result,
                              const std::vector<Change>& change, Value p, Value q) {
  PairCounts counts;
  const auto& rows = table.rows;
  for (std::size_t ia = 0; ia < rows.size(); ++ia) {
    for (std::size_t ib = 0; ib < rows.size(); ++ib) {
      if (ia == ib) continue;
      if (change_between(rows[ia], rows[ib], descriptive) != change) continue;
      const Value ra = rows[ia][result], rb = rows[ib][result];
      if (ra == p && rb == q) ++counts.supporting;
      else if (ra == rb) ++counts.exceptions;
    }
  }
  return counts;
}

std::string render_sentence(const Schema& schema, const std::vector<Change>& change) {
  if (change.empty()) return "no adverse example";
  std::string out = "because ";
  for (std::size_t k = 0; k < change.size(); ++k) {
    const auto& c = change[k];
    const auto& dom = schema.domain(c.attribute);
    if (k) out += " and ";
    out += schema.attribute(c.attribute).name + " is " + dom.symbol(c.to) + " and not " + dom.symbol(c.from);
  }
  return out;
}

Explanation contrastive_explain(const Table& table, const Item& query, const Question& q) {
  Explanation e;
  e.question = q;
  e.query_result = query.at(q.result);
  e.adverse_examples = find_adverse_examples(table, query, q);
  if (e.adverse_examples.empty()) {
    e.sentence = "no adverse example";
    return e;
  }

  std::size_t smallest = SIZE_MAX;
  for (const auto& x : e.adverse_examples) smallest = std::min(smallest, x.change.size());
  std::vector<std::pair<std::size_t, PairCounts>> ranked;
  for (std::size_t k = 0; k < e.adverse_examples.size(); ++k) {
    const auto& x = e.adverse_examples[k];
    if (x.change.size() != smallest) continue;
    ranked.emplace_back(k, count_change_pairs(table, q.descriptive, q.result, x.change, q.target, e.query_result));
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second.strength() > b.second.strength(); });

  e.supported = true;
  e.chosen = ranked.front().first;
  for (std::size_t k = 1; k < ranked.size(); ++k) e.alternatives.push_back(ranked[k].first);
  e.counts = ranked.front().second;
  e.strength = e.counts.strength();
  const auto& chosen = e.adverse_examples[*e.chosen];
  e.split = build_split(table, q, chosen, query);
  e.sentence = render_sentence(table.schema, chosen.change);
  return e;
}

RuleCandidate rule_candidate(const Table& table, const std::vector<std::size_t>& descriptive,
                             const ContextSplit& split) {
  if (split.change.empty()) throw ConfigError("degenerate split: no change attributes");
  RuleCandidate rule;
  for (std::size_t k = 0; k < split.change.size(); ++k) rule.change.push_back({split.change[k], split.v[k], split.w[k]});
  rule.result = split.result;
  rule.from = split.p;
  rule.to = split.q;
  rule.counts = count_change_pairs(table, descriptive, split.result, rule.change, split.p, split.q);
  return rule;
}

std::vector<AttributeScore> relevant_attributes(const Table& table, std::size_t result, RelevanceMethod method,
                                                std::vector<std::size_t> descriptive) {
  if (table.rows.empty()) throw DataError("relevance needs a non-empty table");
  if (result >= table.schema.arity()) throw SchemaError("result column out of range");
  if (descriptive.empty())
    for (std::size_t i = 0; i < table.schema.arity(); ++i)
      if (i != result) descriptive.push_back(i);

  const double n = static_cast<double>(table.rows.size());
  std::map<Value, double> result_counts;
  for (const auto& row : table.rows) result_counts[row[result]] += 1.0;

  std::vector<AttributeScore> scores;
  for (std::size_t attr : descriptive) {
    std::map<Value, double> attr_counts;
    std::map<std::pair<Value, Value>, double> joint;
    for (const auto& row : table.rows) {
      attr_counts[row[attr]] += 1.0;
      joint[{row[attr], row[result]}] += 1.0;
    }
    double score = 0.0;
    if (method == RelevanceMethod::MutualInformation) {
      for (const auto& [key, nxy] : joint)
        score += (nxy / n) * std::log((nxy * n) / (attr_counts[key.first] * result_counts[key.second]));
    } else {
      for (const auto& [xv, nx] : attr_counts) {
        for (const auto& [yv, ny] : result_counts) {
          const double expected = nx * ny / n;
          auto it = joint.find({xv, yv});
          const double observed = it == joint.end() ? 0.0 : it->second;
          score += (observed - expected) * (observed - expected) / expected;
        }
      }
    }
    scores.push_back({attr, std::max(0.0, score)});
  }
  std::stable_sort(scores.begin(), scores.end(), [](const auto& a, const auto& b) { return a.score > b.score; });
  return scores;
}

}  // namespace aprop
