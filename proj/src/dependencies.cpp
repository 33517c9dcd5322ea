#include "aprop/dependencies.hpp"

#include <map>
#include <set>

#include "aprop/ap.hpp"
#include "aprop/errors.hpp"

namespace aprop {

namespace {

void require_subsets(const Schema& schema, AttributeSet x, AttributeSet y) {
  const AttributeSet all = AttributeSet::all(schema.arity());
  if (!x.subset_of(all) || !y.subset_of(all)) throw SchemaError("attribute subset outside the relation schema");
}

bool agree_on(const Item& a, const Item& b, AttributeSet s) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (s.contains(i) && a[i] != b[i]) return false;
  return true;
}

// Takes `first` on `keep`, `second` elsewhere.
Item combine(const Item& first, const Item& second, AttributeSet keep) {
  Item out = second;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (keep.contains(i)) out[i] = first[i];
  return out;
}

}  // namespace

bool fd_holds(const Relation& r, AttributeSet x, AttributeSet y) {
  require_subsets(r.schema(), x, y);
  std::map<Item, Item> seen;
  for (const auto& t : r.tuples()) {
    auto [it, inserted] = seen.emplace(project(t, x), project(t, y));
    if (!inserted && it->second != project(t, y)) return false;
  }
  return true;
}

std::optional<MvdViolation> find_mvd_violation(const Relation& r, AttributeSet x, AttributeSet y) {
  require_subsets(r.schema(), x, y);
  const AttributeSet xy = x | y;
  for (const auto& t1 : r.tuples()) {
    for (const auto& t2 : r.tuples()) {
      if (!agree_on(t1, t2, x)) continue;
      Item t3 = combine(t1, t2, xy);
      if (!r.contains(t3)) return MvdViolation{t1, t2, std::move(t3)};
    }
  }
  return std::nullopt;
}

bool mvd_holds(const Relation& r, AttributeSet x, AttributeSet y) { return !find_mvd_violation(r, x, y); }

std::optional<WeakMvdViolation> find_weak_mvd_violation(const Relation& r, AttributeSet x, AttributeSet y) {
  require_subsets(r.schema(), x, y);
  const AttributeSet all = AttributeSet::all(r.schema().arity());
  const AttributeSet xy = x | y;
  const AttributeSet x_rest = x | (all - y);
  for (const auto& t1 : r.tuples()) {
    for (const auto& t2 : r.tuples()) {
      if (!agree_on(t1, t2, xy)) continue;
      for (const auto& t3 : r.tuples()) {
        if (!agree_on(t1, t3, x_rest)) continue;
        // t4[XY] = t3[XY], t4[X(R\Y)] = t2[X(R\Y)]; the two agree on X.
        Item t4 = combine(t3, t2, xy);
        if (!r.contains(t4)) return WeakMvdViolation{t1, t2, t3, std::move(t4)};
      }
    }
  }
  return std::nullopt;
}

bool weak_mvd_holds(const Relation& r, AttributeSet x, AttributeSet y) { return !find_weak_mvd_violation(r, x, y); }

bool is_trivial_mvd(const Schema& schema, AttributeSet x, AttributeSet y) {
  require_subsets(schema, x, y);
  return y.subset_of(x) || (x | y) == AttributeSet::all(schema.arity());
}

bool lossless_join_check(const Relation& r, AttributeSet x, AttributeSet y) {
  require_subsets(r.schema(), x, y);
  const AttributeSet all = AttributeSet::all(r.schema().arity());
  const AttributeSet left = x | y;
  const AttributeSet right = x | (all - y);
  const std::vector<std::size_t> left_pos = left.indices();
  const std::vector<std::size_t> right_pos = right.indices();

  std::set<Item> p1, p2;
  for (const auto& t : r.tuples()) {
    p1.insert(project(t, left));
    p2.insert(project(t, right));
  }
  // Natural join on the shared attributes (left & right == x).
  std::set<Item> joined;
  const std::size_t arity = r.schema().arity();
  for (const auto& a : p1) {
    for (const auto& b : p2) {
      Item t(arity);
      std::vector<bool> set(arity, false);
      bool match = true;
      for (std::size_t k = 0; k < left_pos.size(); ++k) {
        t[left_pos[k]] = a[k];
        set[left_pos[k]] = true;
      }
      for (std::size_t k = 0; k < right_pos.size() && match; ++k) {
        const std::size_t i = right_pos[k];
        if (set[i] && t[i] != b[k]) match = false;
        t[i] = b[k];
      }
      if (match) joined.insert(std::move(t));
    }
  }
  return joined == std::set<Item>(r.tuples().begin(), r.tuples().end());
}

InferenceReport mvd_inference_check(const Relation& r) {
  const std::size_t n = r.schema().arity();
  if (n > kMaxExhaustiveArity)
    throw ConfigError("exhaustive mode supports at most " + std::to_string(kMaxExhaustiveArity) + " attributes");
  const std::size_t count = std::size_t{1} << n;
  const std::uint64_t full = count - 1;

  std::vector<char> fd(count * count), mvd(count * count);
  for (std::uint64_t xb = 0; xb < count; ++xb) {
    for (std::uint64_t yb = 0; yb < count; ++yb) {
      const auto x = AttributeSet::from_bits(xb), y = AttributeSet::from_bits(yb);
      fd[xb * count + yb] = fd_holds(r, x, y);
      mvd[xb * count + yb] = mvd_holds(r, x, y);
    }
  }
  auto M = [&](std::uint64_t xb, std::uint64_t yb) { return mvd[xb * count + yb] != 0; };

  InferenceReport report;
  auto record = [&](const char* property, std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t u) {
    ++report.violation_count;
    if (report.violations.size() < 100)
      report.violations.push_back({property, AttributeSet::from_bits(x), AttributeSet::from_bits(y),
                                   AttributeSet::from_bits(z), AttributeSet::from_bits(u)});
  };

  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      // X -> Y  implies  X ->> Y
      ++report.implications_checked;
      if (fd[x * count + y] && !M(x, y)) record("fd-implies-mvd", x, y, 0, 0);
      if (!M(x, y)) continue;
      // X ->> Y  implies  X ->> R \ Y
      ++report.implications_checked;
      if (!M(x, full & ~y)) record("complementation", x, y, 0, 0);
      // X ->> Y and Z subset of U  implies  XU ->> YZ
      for (std::uint64_t u = 0; u < count; ++u) {
        for (std::uint64_t z = u;; z = (z - 1) & u) {
          ++report.implications_checked;
          if (!M(x | u, y | z)) record("augmentation", x, y, z, u);
          if (z == 0) break;
        }
      }
      // X ->> Y and Y ->> Z  implies  X ->> Z \ Y
      for (std::uint64_t z = 0; z < count; ++z) {
        if (!M(y, z)) continue;
        ++report.implications_checked;
        if (!M(x, z & ~y)) record("transitivity", x, y, z, 0);
      }
    }
  }
  return report;
}

NestedRelation nest_rewrite(const Relation& r, AttributeSet x, AttributeSet y) {
  require_subsets(r.schema(), x, y);
  const AttributeSet all = AttributeSet::all(r.schema().arity());
  NestedRelation out{r.schema(), x, y - x, all - (x | y), {}};

  std::map<Item, std::vector<const Item*>> groups;
  for (const auto& t : r.tuples()) groups[project(t, x)].push_back(&t);
  for (const auto& [key, members] : groups) {
    std::set<Item> ys, zs;
    for (const Item* t : members) {
      ys.insert(project(*t, out.y));
      zs.insert(project(*t, out.z));
    }
    NestedRow row{key, {ys.begin(), ys.end()}, {zs.begin(), zs.end()}, members.size() == ys.size() * zs.size()};
    out.rows.push_back(std::move(row));
  }
  return out;
}

Relation unnest(const NestedRelation& nested) {
  const std::size_t arity = nested.schema.arity();
  const auto xs = nested.x.indices(), ys = nested.y.indices(), zs = nested.z.indices();
  std::vector<Item> tuples;
  for (const auto& row : nested.rows) {
    for (const auto& yv : row.y_values) {
      for (const auto& zv : row.z_values) {
        Item t(arity);
        for (std::size_t k = 0; k < xs.size(); ++k) t[xs[k]] = row.x_values[k];
        for (std::size_t k = 0; k < ys.size(); ++k) t[ys[k]] = yv[k];
        for (std::size_t k = 0; k < zs.size(); ++k) t[zs[k]] = zv[k];
        tuples.push_back(std::move(t));
      }
    }
  }
  return Relation(nested.schema, std::move(tuples));
}

ApCorrespondence mvd_ap_correspondence(const Item& t1, const Item& t2, const Item& t3, const Item& t4,
                                       AttributeSet x, AttributeSet y) {
  require_same_arity(t1, t2);
  require_same_arity(t1, t3);
  require_same_arity(t1, t4);
  const AttributeSet all = AttributeSet::all(t1.size());
  if (!x.subset_of(all) || !y.subset_of(all)) throw SchemaError("attribute subset outside the tuple arity");
  ApCorrespondence c;
  c.straight = ap_holds(t1, t2, t3, t4);
  c.reordered = ap_holds(t1, t4, t3, t2);
  c.weak_layout = agree_on(t1, t2, x | y) && agree_on(t1, t3, x | (all - y));
  c.solved = solve(t1, t2, t3);
  c.solved_is_t4 = c.solved && *c.solved == t4;
  return c;
}

std::pair<Item, Item> intermediary_tuples(const Item& t1, const Item& t2) {
  const DiffVector d = diff(t1, t2);
  const auto dis = d.disagreement();
  if (dis.size() < 2) throw ConfigError("intermediary tuples need at least two disagreeing attributes");
  AttributeSet keep = AttributeSet::of({dis.front()});
  for (std::size_t i : d.agreement()) keep = keep | AttributeSet::of({i});
  return {combine(t1, t2, keep), combine(t2, t1, keep)};
}

}  // namespace aprop
