#ifndef APROP_GENERATORS_HPP
#define APROP_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "aprop/ap.hpp"
#include "aprop/dataset.hpp"
#include "aprop/relation.hpp"

namespace aprop {

// ---------------------------------------------------------------------------
// Affine Boolean functions f(x) = c0 ^ c1 x1 ^ ... ^ cn xn
// ---------------------------------------------------------------------------

struct AffineSpec {
  std::size_t n = 2;
  /// c0..cn; drawn from the seed when unset.
  std::optional<std::vector<int>> coefficients;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxAffineArity = 20;

/// Full truth table (2^n rows, x1 most significant) labeled by f.
Dataset generate_affine(const AffineSpec& spec);
/// The coefficients generate_affine would use.
std::vector<int> affine_coefficients(const AffineSpec& spec);

// ---------------------------------------------------------------------------
// Planted change -> label rules
// ---------------------------------------------------------------------------

struct PlantedChange {
  std::size_t attribute = 0;
  std::uint16_t from = 0;
  std::uint16_t to = 0;
};

struct PlantedRule {
  std::vector<PlantedChange> change;
  std::uint16_t label_from = 0;
  std::uint16_t label_to = 1;
  std::size_t instances = 1;   // pairs following the rule
  std::size_t exceptions = 0;  // pairs with the same change and no tilt
};

struct PlantedSpec {
  std::size_t attributes = 6;
  std::size_t domain_size = 2;
  std::size_t classes = 2;
  std::vector<PlantedRule> rules;
  std::uint64_t seed = 0;
};

struct PlantedTruth {
  DiffVector change;
  Value label_from{};
  Value label_to{};
  std::size_t instances = 0;
  std::size_t exceptions = 0;
  double confidence = 0.0;  // instances / (instances + exceptions)
};

struct PlantedDataset {
  Dataset data;
  std::vector<PlantedTruth> truth;
};

/// Each rule contributes `instances + exceptions` pairs (a, b) over distinct
/// contexts, and no other ordered pair of the dataset shares that change.
/// Throws ConfigError for an inconsistent spec.
PlantedDataset generate_planted_rules(const PlantedSpec& spec);

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

/// Uniform sample of `tuple_count` distinct tuples (Floyd's algorithm),
/// returned sorted. Throws ConfigError when the count exceeds the space.
Relation generate_random_relation(const Schema& schema, std::size_t tuple_count, std::uint64_t seed);

/// Attributes "A1".."An", each with domain {"0", .., "m-1"}.
Schema uniform_schema(std::size_t attributes, std::size_t domain_size);

// ---------------------------------------------------------------------------
// Benchmark corpora defined by their target concept over the full attribute
// space: the three MONK's problems (432 rows, a1..a6) and Balance Scale
// (625 rows).
// ---------------------------------------------------------------------------

Dataset generate_monk(int problem);
Dataset generate_balance();
/// "monk1", "monk2", "monk3" or "balance". Throws ConfigError otherwise.
Dataset generate_benchmark(std::string_view name);

}  // namespace aprop

#endif  // APROP_GENERATORS_HPP
