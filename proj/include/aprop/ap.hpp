#ifndef APROP_AP_HPP
#define APROP_AP_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "aprop/schema.hpp"

namespace aprop {

// ---------------------------------------------------------------------------
// Analogical proportion a : b :: c : d
//
// On a single nominal attribute the proportion holds for exactly three
// patterns: (g,g,g,g), (g,h,g,h) and (g,g,h,h). On a two-symbol domain this
// gives the six Boolean valuations 0000, 1111, 0101, 1010, 0011, 1100.
// Over items it holds iff it holds on every attribute.
// ---------------------------------------------------------------------------

bool ap_holds(Value a, Value b, Value c, Value d) noexcept;

/// Symbol-level check; throws DomainError when a symbol is outside `domain`.
bool ap_holds(const Domain& domain, std::string_view a, std::string_view b, std::string_view c,
              std::string_view d);

/// Component-wise proportion. Throws SchemaError on arity mismatch.
bool ap_holds(const Item& a, const Item& b, const Item& c, const Item& d);

/// Unique x with a : b :: c : x, if any. a = b gives x = c, a = c gives x = b.
std::optional<Value> solve(Value a, Value b, Value c) noexcept;

std::optional<Value> solve(const Domain& domain, std::string_view a, std::string_view b,
                           std::string_view c);

/// Component-wise solution; absent as soon as one attribute is unsolvable.
std::optional<Item> solve(const Item& a, const Item& b, const Item& c);

/// Inverse paralogy: what a and b share, c and d do not share, and vice versa.
bool inverse_paralogy(bool a, bool b, bool c, bool d) noexcept;

/// Same connective over a two-symbol domain (second symbol read as true).
/// Throws DomainError for any other domain size.
bool inverse_paralogy(const Domain& domain, Value a, Value b, Value c, Value d);

// ---------------------------------------------------------------------------
// Differences between two items
// ---------------------------------------------------------------------------

/// Either Equal or an ordered change from -> to (from != to).
class DiffEntry {
 public:
  static DiffEntry equal() noexcept { return DiffEntry{}; }
  static DiffEntry change(Value from, Value to) noexcept { return DiffEntry{from, to}; }

  bool is_equal() const noexcept { return !changed_; }
  bool is_change() const noexcept { return changed_; }
  Value from() const noexcept { return from_; }
  Value to() const noexcept { return to_; }

  /// Boolean projection: Equal -> 0, 1->0 -> +1, 0->1 -> -1.
  /// Only meaningful on two-symbol domains.
  int sign() const noexcept;

  friend bool operator==(const DiffEntry&, const DiffEntry&) = default;

 private:
  DiffEntry() = default;
  DiffEntry(Value from, Value to) : from_(from), to_(to), changed_(from != to) {
    if (!changed_) from_ = to_ = Value{};
  }

  Value from_{};
  Value to_{};
  bool changed_ = false;
};

class DiffVector {
 public:
  DiffVector() = default;
  explicit DiffVector(std::vector<DiffEntry> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const DiffEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<DiffEntry>& entries() const noexcept { return entries_; }

  /// Ag(a, b): indices where the two items agree.
  std::vector<std::size_t> agreement() const;
  /// Dis(a, b): indices where they differ.
  std::vector<std::size_t> disagreement() const;
  std::size_t change_count() const noexcept;
  bool all_equal() const noexcept { return change_count() == 0; }
  std::vector<int> signs() const;

  friend bool operator==(const DiffVector&, const DiffVector&) = default;

 private:
  std::vector<DiffEntry> entries_;
};

struct DiffVectorHash {
  std::size_t operator()(const DiffVector& d) const noexcept;
};

/// Throws SchemaError on arity mismatch.
DiffVector diff(const Item& a, const Item& b);

/// The item b with diff(a, b) == d, if a is compatible with d's "from" side.
std::optional<Item> apply_diff(const Item& a, const DiffVector& d);

std::size_t hamming(const Item& a, const Item& b);

}  // namespace aprop

#endif  // APROP_AP_HPP
