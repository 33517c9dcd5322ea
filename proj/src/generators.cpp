#include "aprop/generators.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "aprop/errors.hpp"
#include "aprop/random.hpp"

namespace aprop {

namespace {

constexpr std::uint64_t kSpaceCap = std::uint64_t{1} << 62;

std::vector<std::string> numbered_symbols(std::size_t count, std::size_t first = 0) {
  const std::size_t width = std::to_string(first + count - 1).size();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string s = std::to_string(first + i);
    out.push_back(std::string(width - s.size(), '0') + s);
  }
  return out;
}

Domain boolean_domain() { return Domain({"0", "1"}); }

// Floyd's sampling of `count` distinct indices from [0, space).
std::vector<std::uint64_t> sample_indices(std::uint64_t space, std::size_t count, Rng& rng) {
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = space - count; j < space; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

std::uint64_t space_size(const std::vector<std::size_t>& radices) {
  std::uint64_t space = 1;
  for (std::size_t r : radices) {
    if (space > kSpaceCap / std::max<std::size_t>(r, 1)) return kSpaceCap;
    space *= r;
  }
  return space;
}

// Mixed-radix decoding, first radix most significant.
std::vector<std::uint16_t> decode(std::uint64_t index, const std::vector<std::size_t>& radices) {
  std::vector<std::uint16_t> out(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    out[i] = static_cast<std::uint16_t>(index % radices[i]);
    index /= radices[i];
  }
  return out;
}

Dataset enumerate_space(const std::vector<Attribute>& attrs, const Attribute& cls,
                        const std::function<std::string(const std::vector<std::string>&)>& label) {
  Schema schema(attrs);
  std::vector<std::size_t> radices;
  for (const auto& a : attrs) radices.push_back(a.domain.size());
  const std::uint64_t space = space_size(radices);
  std::vector<Item> items;
  std::vector<Value> labels;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    const auto codes = decode(idx, radices);
    Item item;
    for (auto c : codes) item.push_back(Value{c});
    labels.push_back(cls.domain.value(label(schema.decode(item))));
    items.push_back(std::move(item));
  }
  return Dataset(std::move(schema), cls, std::move(items), std::move(labels));
}

}  // namespace

std::vector<int> affine_coefficients(const AffineSpec& spec) {
  if (spec.n > kMaxAffineArity) throw ConfigError("affine arity too large for full enumeration");
  if (spec.coefficients) {
    if (spec.coefficients->size() != spec.n + 1) throw ConfigError("affine spec needs n + 1 coefficients");
    for (int c : *spec.coefficients)
      if (c != 0 && c != 1) throw ConfigError("affine coefficients must be 0 or 1");
    return *spec.coefficients;
  }
  Rng rng(spec.seed);
  std::vector<int> out(spec.n + 1);
  for (auto& c : out) c = static_cast<int>(rng.below(2));
  return out;
}

Dataset generate_affine(const AffineSpec& spec) {
  const auto coeffs = affine_coefficients(spec);
  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < spec.n; ++i) attrs.push_back({"x" + std::to_string(i + 1), boolean_domain()});
  std::vector<Item> items;
  std::vector<Value> labels;
  const std::uint64_t rows = std::uint64_t{1} << spec.n;
  for (std::uint64_t r = 0; r < rows; ++r) {
    Item item(spec.n);
    int f = coeffs[0];
    for (std::size_t i = 0; i < spec.n; ++i) {
      const int bit = static_cast<int>((r >> (spec.n - 1 - i)) & 1U);
      item[i] = Value{static_cast<std::uint16_t>(bit)};
      f ^= coeffs[i + 1] & bit;
    }
    items.push_back(std::move(item));
    labels.push_back(Value{static_cast<std::uint16_t>(f)});
  }
  return Dataset(Schema(std::move(attrs)), {"f", boolean_domain()}, std::move(items), std::move(labels));
}

Schema uniform_schema(std::size_t attributes, std::size_t domain_size) {
  if (domain_size < 2) throw ConfigError("domain size must be at least 2");
  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < attributes; ++i)
    attrs.push_back({"A" + std::to_string(i + 1), Domain(numbered_symbols(domain_size))});
  return Schema(std::move(attrs));
}

PlantedDataset generate_planted_rules(const PlantedSpec& spec) {
  if (spec.attributes < 1 || spec.attributes > 60) throw ConfigError("planted spec: attributes must lie in [1, 60]");
  if (spec.domain_size < 2) throw ConfigError("planted spec: domain size must be at least 2");
  if (spec.classes < 2) throw ConfigError("planted spec: at least two classes");

  std::vector<DiffVector> changes;
  for (const auto& rule : spec.rules) {
    if (rule.change.empty()) throw ConfigError("planted spec: a rule must change at least one attribute");
    if (rule.label_from >= spec.classes || rule.label_to >= spec.classes)
      throw ConfigError("planted spec: label outside the class domain");
    if (rule.label_from == rule.label_to) throw ConfigError("planted spec: a rule must tilt the label");
    if (rule.instances + rule.exceptions == 0) throw ConfigError("planted spec: a rule needs at least one pair");
    std::vector<DiffEntry> entries(spec.attributes, DiffEntry::equal());
    std::set<std::size_t> seen;
    for (const auto& ch : rule.change) {
      if (ch.attribute >= spec.attributes || ch.from >= spec.domain_size || ch.to >= spec.domain_size)
        throw ConfigError("planted spec: change outside the schema");
      if (ch.from == ch.to) throw ConfigError("planted spec: a change needs from != to");
      if (!seen.insert(ch.attribute).second) throw ConfigError("planted spec: attribute changed twice in one rule");
      entries[ch.attribute] = DiffEntry::change(Value{ch.from}, Value{ch.to});
    }
    DiffVector d(std::move(entries));
    if (std::find(changes.begin(), changes.end(), d) != changes.end())
      throw ConfigError("planted spec: two rules share the same change");
    const std::size_t free = spec.attributes - rule.change.size();
    const std::uint64_t space = space_size(std::vector<std::size_t>(free, spec.domain_size));
    if (space < rule.instances + rule.exceptions)
      throw ConfigError("planted spec: not enough distinct contexts for a rule");
    changes.push_back(std::move(d));
  }

  Schema schema = uniform_schema(spec.attributes, spec.domain_size);
  Attribute cls{"class", Domain(numbered_symbols(spec.classes))};
  Rng rng(spec.seed);

  constexpr int kAttempts = 200;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Item> items;
    std::vector<Value> labels;
    for (const auto& rule : spec.rules) {
      std::vector<std::size_t> free_attrs;
      for (std::size_t i = 0; i < spec.attributes; ++i)
        if (std::none_of(rule.change.begin(), rule.change.end(), [&](const auto& c) { return c.attribute == i; }))
          free_attrs.push_back(i);
      const std::vector<std::size_t> radices(free_attrs.size(), spec.domain_size);
      auto contexts = sample_indices(space_size(radices), rule.instances + rule.exceptions, rng);
      rng.shuffle(contexts);
      for (std::size_t k = 0; k < contexts.size(); ++k) {
        const auto ctx = decode(contexts[k], radices);
        Item a(spec.attributes), b(spec.attributes);
        for (std::size_t j = 0; j < free_attrs.size(); ++j) a[free_attrs[j]] = b[free_attrs[j]] = Value{ctx[j]};
        for (const auto& ch : rule.change) {
          a[ch.attribute] = Value{ch.from};
          b[ch.attribute] = Value{ch.to};
        }
        const bool exception = k >= rule.instances;
        Value lb{rule.label_to};
        if (exception) {
          lb = Value{rule.label_from};
          if (rule.label_from == rule.label_to)
            lb = Value{static_cast<std::uint16_t>((rule.label_from + 1) % spec.classes)};
        }
        items.push_back(std::move(a));
        labels.push_back(Value{rule.label_from});
        items.push_back(std::move(b));
        labels.push_back(lb);
      }
    }

    // all items distinct, and each rule's change group is exactly its pairs
    std::unordered_set<Item, ItemHash> distinct(items.begin(), items.end());
    if (distinct.size() != items.size()) continue;
    std::unordered_map<DiffVector, std::size_t, DiffVectorHash> group;
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < items.size(); ++j)
        if (i != j) ++group[diff(items[i], items[j])];
    bool clean = true;
    for (std::size_t r = 0; r < spec.rules.size() && clean; ++r)
      clean = group[changes[r]] == spec.rules[r].instances + spec.rules[r].exceptions;
    if (!clean) continue;

    PlantedDataset out{Dataset(schema, cls, std::move(items), std::move(labels)), {}};
    for (std::size_t r = 0; r < spec.rules.size(); ++r) {
      const auto& rule = spec.rules[r];
      out.truth.push_back({changes[r], Value{rule.label_from}, Value{rule.label_to}, rule.instances, rule.exceptions,
                           static_cast<double>(rule.instances) /
                               static_cast<double>(rule.instances + rule.exceptions)});
    }
    return out;
  }
  throw ConfigError("planted spec could not be realized without interfering pairs");
}

Relation generate_random_relation(const Schema& schema, std::size_t tuple_count, std::uint64_t seed) {
  std::vector<std::size_t> radices;
  for (const auto& a : schema.attributes()) radices.push_back(a.domain.size());
  const std::uint64_t space = space_size(radices);
  if (tuple_count > space) throw ConfigError("tuple count exceeds the size of the tuple space");
  Rng rng(seed);
  std::vector<Item> tuples;
  for (std::uint64_t idx : sample_indices(space, tuple_count, rng)) {
    Item t;
    for (auto c : decode(idx, radices)) t.push_back(Value{c});
    tuples.push_back(std::move(t));
  }
  return Relation(schema, std::move(tuples));
}

Dataset generate_monk(int problem) {
  if (problem < 1 || problem > 3) throw ConfigError("MONK's problem must be 1, 2 or 3");
  const std::vector<std::size_t> sizes{3, 3, 2, 3, 4, 2};
  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    attrs.push_back({"a" + std::to_string(i + 1), Domain(numbered_symbols(sizes[i], 1))});
  Attribute cls{"class", boolean_domain()};
  return enumerate_space(attrs, cls, [problem](const std::vector<std::string>& v) {
    auto a = [&](int i) { return std::stoi(v[static_cast<std::size_t>(i - 1)]); };
    bool target = false;
    switch (problem) {
      case 1: target = a(1) == a(2) || a(5) == 1; break;
      case 2: {
        int ones = 0;
        for (int i = 1; i <= 6; ++i) ones += a(i) == 1 ? 1 : 0;
        target = ones == 2;
        break;
      }
      case 3: target = (a(5) == 3 && a(4) == 1) || (a(5) != 4 && a(2) != 3); break;
    }
    return std::string(target ? "1" : "0");
  });
}

Dataset generate_balance() {
  std::vector<Attribute> attrs;
  for (const char* name : {"left-weight", "left-distance", "right-weight", "right-distance"})
    attrs.push_back({name, Domain(numbered_symbols(5, 1))});
  Attribute cls{"class", Domain({"B", "L", "R"})};
  return enumerate_space(attrs, cls, [](const std::vector<std::string>& v) {
    const int left = std::stoi(v[0]) * std::stoi(v[1]);
    const int right = std::stoi(v[2]) * std::stoi(v[3]);
    return std::string(left > right ? "L" : left < right ? "R" : "B");
  });
}

Dataset generate_benchmark(std::string_view name) {
  if (name == "monk1") return generate_monk(1);
  if (name == "monk2") return generate_monk(2);
  if (name == "monk3") return generate_monk(3);
  if (name == "balance") return generate_balance();
  throw ConfigError("unknown benchmark '" + std::string(name) + "'");
}

}  // namespace aprop
