#include "aprop/ap.hpp"

#include "aprop/errors.hpp"

namespace aprop {

bool ap_holds(Value a, Value b, Value c, Value d) noexcept {
  // (g,g,g,g), (g,h,g,h), (g,g,h,h)
  return (a == b && c == d) || (a == c && b == d);
}

bool ap_holds(const Domain& domain, std::string_view a, std::string_view b, std::string_view c,
              std::string_view d) {
  return ap_holds(domain.value(a), domain.value(b), domain.value(c), domain.value(d));
}

bool ap_holds(const Item& a, const Item& b, const Item& c, const Item& d) {
  require_same_arity(a, b);
  require_same_arity(a, c);
  require_same_arity(a, d);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ap_holds(a[i], b[i], c[i], d[i])) return false;
  return true;
}

std::optional<Value> solve(Value a, Value b, Value c) noexcept {
  if (a == b) return c;
  if (a == c) return b;
  return std::nullopt;
}

std::optional<Value> solve(const Domain& domain, std::string_view a, std::string_view b,
                           std::string_view c) {
  return solve(domain.value(a), domain.value(b), domain.value(c));
}

std::optional<Item> solve(const Item& a, const Item& b, const Item& c) {
  require_same_arity(a, b);
  require_same_arity(a, c);
  Item x(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto v = solve(a[i], b[i], c[i]);
    if (!v) return std::nullopt;
    x[i] = *v;
  }
  return x;
}

bool inverse_paralogy(bool a, bool b, bool c, bool d) noexcept {
  return ((a && b) == (!c && !d)) && ((!a && !b) == (c && d));
}

bool inverse_paralogy(const Domain& domain, Value a, Value b, Value c, Value d) {
  if (domain.size() != 2) throw DomainError("inverse paralogy requires a two-symbol domain");
  for (Value v : {a, b, c, d})
    if (!domain.contains(v)) throw DomainError("value outside the Boolean domain");
  return inverse_paralogy(a.code == 1, b.code == 1, c.code == 1, d.code == 1);
}

int DiffEntry::sign() const noexcept {
  if (!changed_) return 0;
  return from_ > to_ ? 1 : -1;
}

std::vector<std::size_t> DiffVector::agreement() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].is_equal()) out.push_back(i);
  return out;
}

std::vector<std::size_t> DiffVector::disagreement() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].is_change()) out.push_back(i);
  return out;
}

std::size_t DiffVector::change_count() const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.is_change() ? 1 : 0;
  return n;
}

std::vector<int> DiffVector::signs() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.sign());
  return out;
}

std::size_t DiffVectorHash::operator()(const DiffVector& d) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& e : d.entries()) {
    std::uint64_t word = e.is_change() ? (1ULL << 32) | (std::uint64_t{e.from().code} << 16) | e.to().code : 0;
    h ^= word;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

DiffVector diff(const Item& a, const Item& b) {
  require_same_arity(a, b);
  std::vector<DiffEntry> entries;
  entries.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    entries.push_back(a[i] == b[i] ? DiffEntry::equal() : DiffEntry::change(a[i], b[i]));
  return DiffVector(std::move(entries));
}

std::optional<Item> apply_diff(const Item& a, const DiffVector& d) {
  if (a.size() != d.size()) throw SchemaError("schema mismatch between item and difference");
  Item b = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& e = d[i];
    if (e.is_equal()) continue;
    if (a[i] != e.from()) return std::nullopt;
    b[i] = e.to();
  }
  return b;
}

std::size_t hamming(const Item& a, const Item& b) {
  require_same_arity(a, b);
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i] ? 1 : 0;
  return n;
}

}  // namespace aprop
