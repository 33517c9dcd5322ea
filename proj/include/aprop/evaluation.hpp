#ifndef APROP_EVALUATION_HPP
#define APROP_EVALUATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aprop/classifier.hpp"

namespace aprop {

enum class Strategy { Baseline, Selected, Bongard, Knn, Constant };
enum class Fallback { None, Knn1 };

std::string_view to_string(Strategy s);
/// Throws ConfigError for unknown names.
Strategy parse_strategy(std::string_view name);
std::string_view to_string(Fallback f);
Fallback parse_fallback(std::string_view name);

struct EvalParams {
  Strategy strategy = Strategy::Baseline;
  std::size_t radius = 2;           // selected: Hamming bound on c
  std::size_t neighbor_budget = 1;  // bongard: voting neighbors
  std::size_t max_literals = 2;     // bongard: separator size
  std::size_t k = 1;                // knn
  MiningOptions mining;             // selected
  double subsample = 1.0;           // selected: share of the training fold mined for pairs
  Fallback fallback = Fallback::Knn1;
};

/// Throws ConfigError listing every invalid field.
void validate(const EvalParams& params);

struct FoldResult {
  std::size_t index = 0;
  std::vector<std::size_t> test_rows;
  std::size_t correct = 0;
  std::size_t abstained = 0;  // before fallback
  std::uint64_t triplets_examined = 0;
  std::size_t competent_pairs = 0;
  double accuracy = 0.0;
  double seconds = 0.0;
};

struct Metrics {
  std::vector<FoldResult> folds;
  double mean_accuracy = 0.0;  // mean of fold accuracies
  double std_accuracy = 0.0;   // sample standard deviation over folds
  double pooled_accuracy = 0.0;
  double abstention_rate = 0.0;
  std::uint64_t triplets_examined = 0;
  double seconds = 0.0;
  bool stratified = true;
  std::vector<std::string> warnings;
};

/// Test-row partition: stratified by class when every class has at least
/// `folds` members, plain otherwise (with a warning). Deterministic in seed.
std::vector<std::vector<std::size_t>> make_folds(const Dataset& data, std::size_t folds, std::uint64_t seed,
                                                 bool& stratified, std::vector<std::string>& warnings);

/// Predicts every test item from `train` under `params`; the seed only
/// drives the pair-mining subsample.
FoldResult evaluate_split(const Dataset& train, const Dataset& test, const EvalParams& params, std::uint64_t seed);

/// k-fold cross-validation. Folds run on `workers` threads; results do not
/// depend on the worker count.
Metrics cross_validate(const Dataset& data, const EvalParams& params, std::size_t folds, std::uint64_t seed,
                       std::size_t workers = 1);

/// Train and test on the whole dataset.
Metrics resubstitution(const Dataset& data, const EvalParams& params, std::uint64_t seed);

struct GridRun {
  std::size_t k = 0;
  Metrics metrics;
};

struct GridResult {
  std::vector<GridRun> runs;
  std::size_t best = 0;  // index into runs: highest mean accuracy, smallest k on ties
};

/// Cross-validates once per grid value; k is the neighbor budget for the
/// Bongard strategy and the neighbor count for kNN.
GridResult grid_search_k(const Dataset& data, const EvalParams& params, const std::vector<std::size_t>& grid,
                         std::size_t folds, std::uint64_t seed, std::size_t workers = 1);

}  // namespace aprop

#endif  // APROP_EVALUATION_HPP
