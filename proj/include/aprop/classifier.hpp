#ifndef APROP_CLASSIFIER_HPP
#define APROP_CLASSIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "aprop/ap.hpp"
#include "aprop/dataset.hpp"

namespace aprop {

/// Outcome of one classification. `votes` is indexed by class code.
struct Prediction {
  Value label{};
  std::vector<std::uint64_t> votes;
  /// Candidate triplets (or pairs, for the Bongard procedure) that were
  /// looked at before the class equation was solved.
  std::uint64_t triplets_examined = 0;
  bool abstained = true;

  std::uint64_t total_votes() const noexcept;
};

/// Argmax of `votes`, smallest class code on ties; abstains on zero votes.
Prediction decide(std::vector<std::uint64_t> votes, std::uint64_t examined);

/// Exact-match lookup from item to the dataset rows holding it.
class ItemIndex {
 public:
  explicit ItemIndex(std::span<const Item> items);
  const std::vector<std::size_t>* find(const Item& item) const;

 private:
  std::unordered_map<Item, std::vector<std::size_t>, ItemHash> rows_;
};

// ---------------------------------------------------------------------------
// Brute-force analogical classifier
// ---------------------------------------------------------------------------

/// Votes over every ordered triplet (a, b, c) of training examples with
/// a : b :: c : query and a solvable class equation. For each (a, b) the
/// only c completing the proportion is computed and looked up, so the
/// triplet set is the cubic one at quadratic cost.
Prediction brute_force_classify(const Dataset& train, const Item& query);

struct SuitabilityReport {
  double error_ratio = 0.0;  // wrong / predicted
  std::size_t wrong = 0;
  std::size_t predicted = 0;
  std::size_t abstained = 0;
};

/// Leave-one-out error of brute_force_classify over the training set.
SuitabilityReport analogical_suitability(const Dataset& train);

// ---------------------------------------------------------------------------
// Competent pairs and the selected-triplet classifier
// ---------------------------------------------------------------------------

struct CompetentPair {
  Item a;
  Item b;
  Value label_a{};
  Value label_b{};
  DiffVector rule_change;
  std::size_t support = 0;     // pairs with this change and this label behavior
  std::size_t group_size = 0;  // pairs with this change
  double confidence = 0.0;     // support / group_size

  bool same_label() const noexcept { return label_a == label_b; }
};

struct MiningOptions {
  std::size_t min_support = 2;
  double min_confidence = 0.9;
};

/// Groups all ordered pairs of distinct examples by their difference and
/// keeps pairs whose label behavior (same label, or the exact tilt p -> q)
/// reaches both thresholds within the group. Output is in (a, b) row order.
std::vector<CompetentPair> extract_competent_pairs(const Dataset& train, const MiningOptions& options = {});

class CompetentPairIndex {
 public:
  explicit CompetentPairIndex(std::span<const CompetentPair> pairs);

  bool empty() const noexcept { return pairs_.empty(); }
  std::span<const CompetentPair> pairs() const noexcept { return pairs_; }
  const std::vector<std::size_t>* find(const DiffVector& change) const;

 private:
  std::span<const CompetentPair> pairs_;
  std::unordered_map<DiffVector, std::vector<std::size_t>, DiffVectorHash> by_change_;
};

/// Votes over triplets whose (a, b) is a competent pair and whose c lies
/// within Hamming `radius` of the query. A training item equal to the query
/// contributes the triplet (c, c, c). Throws ConfigError for an empty pair
/// list.
Prediction selected_triplet_classify(const Dataset& train, std::span<const CompetentPair> pairs,
                                     const Item& query, std::size_t radius);
Prediction selected_triplet_classify(const Dataset& train, const CompetentPairIndex& pairs,
                                     const Item& query, std::size_t radius);

// ---------------------------------------------------------------------------
// AP + Bongard classifier
// ---------------------------------------------------------------------------

struct Literal {
  std::size_t attribute = 0;
  Value value{};

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Conjunction of attribute = value literals.
struct BongardProperty {
  std::vector<Literal> literals;

  bool satisfied_by(const Item& item) const;
  friend bool operator==(const BongardProperty&, const BongardProperty&) = default;
};

/// Smallest conjunction (lexicographic within a size) over `context`
/// attributes that holds on every item of `same_label` and fails on every
/// item of `changing`. Items stand for pairs; both members of a pair agree on
/// the context attributes.
std::optional<BongardProperty> bongard_separation(std::span<const Item> same_label,
                                                  std::span<const Item> changing,
                                                  std::span<const std::size_t> context,
                                                  std::size_t max_literals);

struct BongardOptions {
  std::size_t neighbor_budget = 1;
  std::size_t max_literals = 2;
};

/// What one neighbor c contributed.
struct NeighborVote {
  enum class Case { NoPairs, AllSameLabel, AllChanging, Mixed };

  std::size_t neighbor = 0;  // row in the training set
  std::size_t distance = 0;
  Case kind = Case::NoPairs;
  std::size_t same_label_pairs = 0;
  std::size_t changing_pairs = 0;
  std::optional<BongardProperty> property;
  std::optional<Value> vote;
};

/// Neighbors in increasing Hamming distance (then row order), stopping once
/// `neighbor_budget` of them have voted.
std::vector<NeighborVote> bongard_trace(const Dataset& train, const Item& query, const BongardOptions& options,
                                        std::uint64_t* pairs_examined = nullptr);
Prediction bongard_classify(const Dataset& train, const Item& query, const BongardOptions& options);

// ---------------------------------------------------------------------------
// Baseline
// ---------------------------------------------------------------------------

/// Hamming kNN; neighbors ranked by (distance, row), vote ties to the
/// smallest label.
Prediction knn_classify(const Dataset& train, const Item& query, std::size_t k);

}  // namespace aprop

#endif  // APROP_CLASSIFIER_HPP
