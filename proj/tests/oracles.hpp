// Slow reference implementations used as test oracles. They follow the
// definitions literally and share no code with the library beyond the data
// types.
#ifndef APROP_TESTS_ORACLES_HPP
#define APROP_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aprop/dataset.hpp"

namespace oracle {

using aprop::Item;
using aprop::Value;

// a:b::c:d on one attribute straight from the three admissible patterns.
inline bool ap1(Value a, Value b, Value c, Value d) {
  const bool gggg = a == b && b == c && c == d;
  const bool ghgh = a == c && b == d;
  const bool gghh = a == b && c == d;
  return gggg || ghgh || gghh;
}

inline bool ap(const Item& a, const Item& b, const Item& c, const Item& d) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ap1(a[i], b[i], c[i], d[i])) return false;
  return true;
}

// Searches the whole domain for the values completing the proportion.
inline std::vector<Value> solutions(Value a, Value b, Value c, std::size_t domain_size) {
  std::vector<Value> out;
  for (std::uint16_t x = 0; x < domain_size; ++x)
    if (ap1(a, b, c, Value{x})) out.push_back(Value{x});
  return out;
}

// Vote counts of the brute-force classifier: every ordered triplet of
// training rows, cubic enumeration.
inline std::vector<std::uint64_t> brute_force_votes(const aprop::Dataset& train, const Item& query) {
  std::vector<std::uint64_t> votes(train.classes().size(), 0);
  const std::size_t n = train.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!ap(train.item(i), train.item(j), train.item(k), query)) continue;
        const auto sol = solutions(train.label(i), train.label(j), train.label(k), train.classes().size());
        if (sol.size() == 1) ++votes[sol[0].code];
      }
  return votes;
}

inline std::optional<Value> majority(const std::vector<std::uint64_t>& votes) {
  std::optional<Value> best;
  std::uint64_t top = 0;
  for (std::size_t c = 0; c < votes.size(); ++c)
    if (votes[c] > top) {
      top = votes[c];
      best = Value{static_cast<std::uint16_t>(c)};
    }
  return best;
}

// Binary dataset over attributes x1..xn from (bits, label) rows.
inline aprop::Dataset binary_dataset(std::size_t n, const std::vector<std::pair<std::vector<int>, int>>& rows) {
  std::vector<aprop::Attribute> attrs;
  for (std::size_t i = 0; i < n; ++i) attrs.push_back({"x" + std::to_string(i + 1), aprop::Domain({"0", "1"})});
  std::vector<Item> items;
  std::vector<Value> labels;
  for (const auto& [bits, label] : rows) {
    Item it;
    for (int b : bits) it.push_back(Value{static_cast<std::uint16_t>(b)});
    items.push_back(it);
    labels.push_back(Value{static_cast<std::uint16_t>(label)});
  }
  return aprop::Dataset(aprop::Schema(attrs), {"class", aprop::Domain({"0", "1"})}, items, labels);
}

// Full truth table of f over n Boolean inputs, x1 most significant.
template <typename F>
aprop::Dataset truth_table(std::size_t n, F f) {
  std::vector<std::pair<std::vector<int>, int>> rows;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = (m >> (n - 1 - i)) & 1U;
    rows.emplace_back(bits, f(bits) ? 1 : 0);
  }
  return binary_dataset(n, rows);
}

}  // namespace oracle

#endif  // APROP_TESTS_ORACLES_HPP
