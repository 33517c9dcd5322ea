#ifndef APROP_EXPLAINER_HPP
#define APROP_EXPLAINER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aprop/dataset.hpp"

namespace aprop {

/// "Why is Result(query) not `target`?" over a table whose `result` column
/// plays the Result role and whose `descriptive` columns describe the rows.
struct Question {
  std::size_t result = 0;
  Value target{};
  std::vector<std::size_t> descriptive;  // sorted; excludes `result`
};

/// Builds a question by names. An empty `descriptive` list means every
/// column but the result. Throws SchemaError / DomainError.
Question make_question(const Schema& schema, std::string_view result, std::string_view target,
                       const std::vector<std::string>& descriptive = {});

/// One changed attribute: the adverse example holds `from`, the query `to`.
struct Change {
  std::size_t attribute = 0;
  Value from{};
  Value to{};

  friend bool operator==(const Change&, const Change&) = default;
};

struct AdverseExample {
  std::size_t row = 0;
  Item item;
  std::vector<Change> change;  // Dis(x, query) over the descriptive attributes
};

/// Rows x with Result(x) = target; x agrees with the query outside its
/// change set by construction. Rows identical to the query on every
/// descriptive attribute are left out (empty change). Throws ConfigError
/// when the query already has the target result.
std::vector<AdverseExample> find_adverse_examples(const Table& table, const Item& query, const Question& q);

/// Roles of the attributes in the proportion a : b :: c : d where (c, d) is
/// (adverse example, query) and (a, b) a supporting pair of rows.
struct ContextSplit {
  std::size_t result = 0;
  std::vector<std::size_t> shared;   // X: same value s on all four
  std::vector<std::size_t> context;  // Y: t on (a, b), u on (c, d)
  std::vector<std::size_t> change;   // Z: v -> w inside both pairs
  Item s, t, u, v, w;
  Value p{};  // Result(a) = Result(c)
  Value q{};  // Result(b), and the query's result
  std::optional<std::size_t> row_a, row_b, row_c;
};

struct PairCounts {
  std::size_t supporting = 0;  // same change, Result tilts p -> q
  std::size_t exceptions = 0;  // same change, Result unchanged
  double strength() const noexcept;
};

/// Counts ordered row pairs (a, b) whose difference on the descriptive
/// attributes is exactly `change`.
PairCounts count_change_pairs(const Table& table, const std::vector<std::size_t>& descriptive, std::size_t result,
                              const std::vector<Change>& change, Value p, Value q);

struct Explanation {
  bool supported = false;
  Question question;
  Value query_result{};
  std::vector<AdverseExample> adverse_examples;
  std::optional<std::size_t> chosen;       // index into adverse_examples
  std::vector<std::size_t> alternatives;   // other minimal-change candidates, best first
  ContextSplit split;
  PairCounts counts;
  double strength = 0.0;
  std::string sentence;
};

/// Among adverse examples with the smallest change set, picks the one whose
/// change has the highest supporting / (supporting + exception) ratio (row
/// order on ties). Never looks at how the table's results were produced.
Explanation contrastive_explain(const Table& table, const Item& query, const Question& q);

/// "because situation is sit_2 and not sit_1"
std::string render_sentence(const Schema& schema, const std::vector<Change>& change);

struct RuleCandidate {
  std::vector<Change> change;
  std::size_t result = 0;
  Value from{};
  Value to{};
  PairCounts counts;
};

/// "changing Z from v to w drives Result from p to q", annotated with its
/// pair counts over the table. Throws ConfigError for an empty change.
RuleCandidate rule_candidate(const Table& table, const std::vector<std::size_t>& descriptive,
                             const ContextSplit& split);

enum class RelevanceMethod { MutualInformation, ChiSquare };

struct AttributeScore {
  std::size_t attribute = 0;
  double score = 0.0;
};

/// Score of every descriptive attribute against the result column (natural
/// log plug-in MI, or Pearson chi-square), descending, ties by column order.
std::vector<AttributeScore> relevant_attributes(const Table& table, std::size_t result,
                                                RelevanceMethod method = RelevanceMethod::MutualInformation,
                                                std::vector<std::size_t> descriptive = {});

}  // namespace aprop

#endif  // APROP_EXPLAINER_HPP
