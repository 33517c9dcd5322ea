#ifndef APROP_DEPENDENCIES_HPP
#define APROP_DEPENDENCIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aprop/relation.hpp"

namespace aprop {

// Attribute subsets X, Y of a relation schema R; Z = R \ (X u Y).
// All checks throw SchemaError when a subset leaves the schema.

/// X -> Y: tuples equal on X are equal on Y.
bool fd_holds(const Relation& r, AttributeSet x, AttributeSet y);

/// Two tuples agreeing on X whose exchanged tuple t3 (t1 on XY, t2 on
/// X u (R \ Y)) is missing from the relation.
struct MvdViolation {
  Item t1;
  Item t2;
  Item missing;
};

std::optional<MvdViolation> find_mvd_violation(const Relation& r, AttributeSet x, AttributeSet y);
/// X ->> Y
bool mvd_holds(const Relation& r, AttributeSet x, AttributeSet y);

struct WeakMvdViolation {
  Item t1;
  Item t2;
  Item t3;
  Item missing;  // the t4 the definition asks for
};

std::optional<WeakMvdViolation> find_weak_mvd_violation(const Relation& r, AttributeSet x, AttributeSet y);
/// X ->>_w Y: for t1, t2, t3 with t1[XY] = t2[XY] and t1[X(R\Y)] = t3[X(R\Y)]
/// some t4 has t4[XY] = t3[XY] and t4[X(R\Y)] = t2[X(R\Y)].
bool weak_mvd_holds(const Relation& r, AttributeSet x, AttributeSet y);

/// Y subset of X, or X u Y = R.
bool is_trivial_mvd(const Schema& schema, AttributeSet x, AttributeSet y);

/// Natural join of the projections on XY and X(R\Y) equals r.
bool lossless_join_check(const Relation& r, AttributeSet x, AttributeSet y);

/// Dependencies checked against the four listed MVD properties:
/// reflexivity from FDs, complementation, augmentation, transitivity.
struct InferenceViolation {
  std::string property;
  AttributeSet x, y, z, u;
};

struct InferenceReport {
  std::size_t implications_checked = 0;
  std::size_t violation_count = 0;
  std::vector<InferenceViolation> violations;  // first 100
};

inline constexpr std::size_t kMaxExhaustiveArity = 6;

/// Enumerates every subset combination; throws ConfigError when the schema
/// has more than kMaxExhaustiveArity attributes.
InferenceReport mvd_inference_check(const Relation& r);

// ---------------------------------------------------------------------------
// Nesting
// ---------------------------------------------------------------------------

struct NestedRow {
  Item x_values;                    // t[X]
  std::vector<Item> y_values;       // distinct t[Y], sorted
  std::vector<Item> z_values;       // distinct t[Z], sorted
  bool is_product = true;           // group == X-value x Y-set x Z-set
};

struct NestedRelation {
  Schema schema;
  AttributeSet x, y, z;
  std::vector<NestedRow> rows;  // sorted by X value
};

/// Groups tuples by X value with set-valued Y and Z = R \ (X u Y) columns.
NestedRelation nest_rewrite(const Relation& r, AttributeSet x, AttributeSet y);
/// Union of the Cartesian products of every row.
Relation unnest(const NestedRelation& nested);

// ---------------------------------------------------------------------------
// Analogical reading of (weak) MVDs
// ---------------------------------------------------------------------------

struct ApCorrespondence {
  bool straight = false;   // t1 : t2 :: t3 : t4
  bool reordered = false;  // t1 : t4 :: t3 : t2
  /// t1[XY] = t2[XY] and t1[X(R\Y)] = t3[X(R\Y)]
  bool weak_layout = false;
  std::optional<Item> solved;  // solve(t1, t2, t3)
  bool solved_is_t4 = false;
};

ApCorrespondence mvd_ap_correspondence(const Item& t1, const Item& t2, const Item& t3, const Item& t4,
                                       AttributeSet x, AttributeSet y);

/// The two exchanged tuples of t1, t2 with respect to a split of their
/// disagreement set: (t1 on X u Y, t2 elsewhere) and (t2 on X u Y, t1
/// elsewhere), where X = Ag(t1, t2) and Y is the first disagreeing attribute.
/// Requires at least two disagreeing attributes.
std::pair<Item, Item> intermediary_tuples(const Item& t1, const Item& t2);

}  // namespace aprop

#endif  // APROP_DEPENDENCIES_HPP
