#include "aprop/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "aprop/errors.hpp"

namespace aprop {

namespace {

void require_train(const Dataset& train, const Item& query) {
  if (train.empty()) throw DataError("empty training set");
  train.schema().validate(query);
}

// Class-equation vote for a triplet, if solvable.
void vote_triplet(std::vector<std::uint64_t>& votes, Value la, Value lb, Value lc) {
  if (auto x = solve(la, lb, lc)) ++votes[x->code];
}

std::optional<Value> majority(const std::vector<std::uint64_t>& counts) {
  std::optional<Value> best;
  std::uint64_t best_count = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > best_count) {
      best_count = counts[i];
      best = Value{static_cast<std::uint16_t>(i)};
    }
  }
  return best;
}

}  // namespace

std::uint64_t Prediction::total_votes() const noexcept {
  return std::accumulate(votes.begin(), votes.end(), std::uint64_t{0});
}

Prediction decide(std::vector<std::uint64_t> votes, std::uint64_t examined) {
  Prediction p;
  p.triplets_examined = examined;
  if (auto best = majority(votes)) {
    p.label = *best;
    p.abstained = false;
  }
  p.votes = std::move(votes);
  return p;
}

ItemIndex::ItemIndex(std::span<const Item> items) {
  rows_.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) rows_[items[i]].push_back(i);
}

const std::vector<std::size_t>* ItemIndex::find(const Item& item) const {
  auto it = rows_.find(item);
  return it == rows_.end() ? nullptr : &it->second;
}

Prediction brute_force_classify(const Dataset& train, const Item& query) {
  require_train(train, query);
  const ItemIndex index(train.items());
  const std::size_t n = train.size();
  const std::size_t arity = query.size();
  std::vector<std::uint64_t> votes(train.classes().size(), 0);
  std::uint64_t examined = 0;

  Item c(arity);
  for (std::size_t ia = 0; ia < n; ++ia) {
    const Item& a = train.item(ia);
    for (std::size_t ib = 0; ib < n; ++ib) {
      const Item& b = train.item(ib);
      // a_i = b_i forces c_i = d_i; a_i != b_i forces c_i = a_i and d_i = b_i.
      bool feasible = true;
      for (std::size_t i = 0; i < arity; ++i) {
        if (a[i] == b[i]) {
          c[i] = query[i];
        } else if (b[i] == query[i]) {
          c[i] = a[i];
        } else {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      const auto* hits = index.find(c);
      if (!hits) continue;
      for (std::size_t ic : *hits) {
        ++examined;
        vote_triplet(votes, train.label(ia), train.label(ib), train.label(ic));
      }
    }
  }
  return decide(std::move(votes), examined);
}

SuitabilityReport analogical_suitability(const Dataset& train) {
  if (train.size() < 4) throw ConfigError("analogical suitability needs at least 4 examples");
  SuitabilityReport report;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const Prediction p = brute_force_classify(train.without(i), train.item(i));
    if (p.abstained) {
      ++report.abstained;
      continue;
    }
    ++report.predicted;
    if (p.label != train.label(i)) ++report.wrong;
  }
  report.error_ratio =
      report.predicted == 0 ? 0.0 : static_cast<double>(report.wrong) / static_cast<double>(report.predicted);
  return report;
}

std::vector<CompetentPair> extract_competent_pairs(const Dataset& train, const MiningOptions& options) {
  if (options.min_support < 1) throw ConfigError("min_support must be at least 1");
  if (options.min_confidence < 0.0 || options.min_confidence > 1.0)
    throw ConfigError("min_confidence must lie in [0, 1]");

  struct Group {
    std::size_t size = 0;
    // behavior key -> count; same-label pairs share the key {-1, -1}
    std::map<std::pair<int, int>, std::size_t> behaviors;
  };
  auto behavior = [&](std::size_t ia, std::size_t ib) -> std::pair<int, int> {
    const Value la = train.label(ia), lb = train.label(ib);
    if (la == lb) return {-1, -1};
    return {la.code, lb.code};
  };

  const std::size_t n = train.size();
  std::unordered_map<DiffVector, Group, DiffVectorHash> groups;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<DiffVector> changes;
  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ib = 0; ib < n; ++ib) {
      if (ia == ib) continue;
      DiffVector d = diff(train.item(ia), train.item(ib));
      if (d.all_equal()) continue;
      Group& g = groups[d];
      ++g.size;
      ++g.behaviors[behavior(ia, ib)];
      pairs.emplace_back(ia, ib);
      changes.push_back(std::move(d));
    }
  }

  std::vector<CompetentPair> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [ia, ib] = pairs[k];
    const Group& g = groups.at(changes[k]);
    const std::size_t support = g.behaviors.at(behavior(ia, ib));
    const double confidence = static_cast<double>(support) / static_cast<double>(g.size);
    if (support < options.min_support || confidence < options.min_confidence) continue;
    CompetentPair cp;
    cp.a = train.item(ia);
    cp.b = train.item(ib);
    cp.label_a = train.label(ia);
    cp.label_b = train.label(ib);
    cp.rule_change = changes[k];
    cp.support = support;
    cp.group_size = g.size;
    cp.confidence = confidence;
    out.push_back(std::move(cp));
  }
  return out;
}

CompetentPairIndex::CompetentPairIndex(std::span<const CompetentPair> pairs) : pairs_(pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) by_change_[pairs[i].rule_change].push_back(i);
}

const std::vector<std::size_t>* CompetentPairIndex::find(const DiffVector& change) const {
  auto it = by_change_.find(change);
  return it == by_change_.end() ? nullptr : &it->second;
}

Prediction selected_triplet_classify(const Dataset& train, std::span<const CompetentPair> pairs,
                                     const Item& query, std::size_t radius) {
  return selected_triplet_classify(train, CompetentPairIndex(pairs), query, radius);
}

Prediction selected_triplet_classify(const Dataset& train, const CompetentPairIndex& pairs,
                                     const Item& query, std::size_t radius) {
  if (pairs.empty()) throw ConfigError("no competent pairs to select triplets from");
  require_train(train, query);
  std::vector<std::uint64_t> votes(train.classes().size(), 0);
  std::uint64_t examined = 0;
  for (std::size_t ic = 0; ic < train.size(); ++ic) {
    const Item& c = train.item(ic);
    if (hamming(c, query) > radius) continue;
    // a : b :: c : d  iff  diff(a, b) == diff(c, d)
    const DiffVector d = diff(c, query);
    if (d.all_equal()) {
      ++examined;
      vote_triplet(votes, train.label(ic), train.label(ic), train.label(ic));
      continue;
    }
    const auto* hits = pairs.find(d);
    if (!hits) continue;
    for (std::size_t k : *hits) {
      const CompetentPair& cp = pairs.pairs()[k];
      ++examined;
      vote_triplet(votes, cp.label_a, cp.label_b, train.label(ic));
    }
  }
  return decide(std::move(votes), examined);
}

bool BongardProperty::satisfied_by(const Item& item) const {
  for (const auto& lit : literals)
    if (item.at(lit.attribute) != lit.value) return false;
  return true;
}

std::optional<BongardProperty> bongard_separation(std::span<const Item> same_label,
                                                  std::span<const Item> changing,
                                                  std::span<const std::size_t> context,
                                                  std::size_t max_literals) {
  if (same_label.empty() || changing.empty()) return std::nullopt;
  // Only literals true on every same-label item can appear in a separator.
  std::vector<Literal> candidates;
  std::vector<std::size_t> attrs(context.begin(), context.end());
  std::sort(attrs.begin(), attrs.end());
  for (std::size_t attr : attrs) {
    const Value v = same_label.front().at(attr);
    const bool shared = std::all_of(same_label.begin(), same_label.end(),
                                    [&](const Item& it) { return it.at(attr) == v; });
    if (shared) candidates.push_back({attr, v});
  }

  const std::size_t limit = std::min(max_literals, candidates.size());
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= limit; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      BongardProperty p;
      for (std::size_t k : pick) p.literals.push_back(candidates[k]);
      const bool separates = std::none_of(changing.begin(), changing.end(),
                                          [&](const Item& it) { return p.satisfied_by(it); });
      if (separates) return p;
      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == candidates.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

namespace {

// Label reached by changing pairs that start from `from`, majority first.
std::optional<Value> tilted_label(const Dataset& train, std::span<const std::pair<std::size_t, std::size_t>> changing,
                                  Value from) {
  std::vector<std::uint64_t> counts(train.classes().size(), 0);
  for (const auto& [ia, ib] : changing)
    if (train.label(ia) == from) ++counts[train.label(ib).code];
  return majority(counts);
}

}  // namespace

std::vector<NeighborVote> bongard_trace(const Dataset& train, const Item& query, const BongardOptions& options,
                                        std::uint64_t* pairs_examined) {
  require_train(train, query);
  if (options.neighbor_budget < 1) throw ConfigError("neighbor_budget must be at least 1");
  if (options.max_literals < 1) throw ConfigError("max_literals must be at least 1");

  const std::size_t n = train.size();
  std::vector<std::size_t> distance(n);
  for (std::size_t i = 0; i < n; ++i) distance[i] = hamming(train.item(i), query);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return distance[x] < distance[y]; });

  const ItemIndex index(train.items());
  std::vector<NeighborVote> trace;
  std::size_t voters = 0;
  std::uint64_t examined = 0;
  std::vector<std::pair<std::size_t, std::size_t>> same, changing;
  for (std::size_t ic : order) {
    if (voters >= options.neighbor_budget) break;
    NeighborVote nv;
    nv.neighbor = ic;
    nv.distance = distance[ic];
    const Value lc = train.label(ic);
    const DiffVector d = diff(train.item(ic), query);

    same.clear();
    changing.clear();
    for (std::size_t ia = 0; ia < n; ++ia) {
      auto b = apply_diff(train.item(ia), d);
      if (!b) continue;
      const auto* hits = index.find(*b);
      if (!hits) continue;
      for (std::size_t ib : *hits) {
        (train.label(ia) == train.label(ib) ? same : changing).emplace_back(ia, ib);
      }
    }
    examined += same.size() + changing.size();
    nv.same_label_pairs = same.size();
    nv.changing_pairs = changing.size();

    if (same.empty() && changing.empty()) {
      nv.kind = NeighborVote::Case::NoPairs;
    } else if (changing.empty()) {
      nv.kind = NeighborVote::Case::AllSameLabel;
      nv.vote = lc;
    } else if (same.empty()) {
      nv.kind = NeighborVote::Case::AllChanging;
      nv.vote = tilted_label(train, changing, lc);
    } else {
      nv.kind = NeighborVote::Case::Mixed;
      std::vector<Item> same_items, changing_items;
      same_items.reserve(same.size());
      changing_items.reserve(changing.size());
      for (const auto& pr : same) same_items.push_back(train.item(pr.first));
      for (const auto& pr : changing) changing_items.push_back(train.item(pr.first));
      const auto context = d.agreement();
      nv.property = bongard_separation(same_items, changing_items, context, options.max_literals);
      if (nv.property) {
        nv.vote = nv.property->satisfied_by(query) ? std::optional<Value>(lc) : tilted_label(train, changing, lc);
      }
    }
    if (nv.vote) ++voters;
    trace.push_back(std::move(nv));
  }
  if (pairs_examined) *pairs_examined = examined;
  return trace;
}

Prediction bongard_classify(const Dataset& train, const Item& query, const BongardOptions& options) {
  std::uint64_t examined = 0;
  const auto trace = bongard_trace(train, query, options, &examined);
  std::vector<std::uint64_t> votes(train.classes().size(), 0);
  for (const auto& nv : trace)
    if (nv.vote) ++votes[nv.vote->code];
  return decide(std::move(votes), examined);
}

Prediction knn_classify(const Dataset& train, const Item& query, std::size_t k) {
  require_train(train, query);
  if (k < 1 || k > train.size()) throw ConfigError("k must lie in [1, training size]");
  std::vector<std::pair<std::size_t, std::size_t>> ranked;  // (distance, row)
  ranked.reserve(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) ranked.emplace_back(hamming(train.item(i), query), i);
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k), ranked.end());
  std::vector<std::uint64_t> votes(train.classes().size(), 0);
  for (std::size_t j = 0; j < k; ++j) ++votes[train.label(ranked[j].second).code];
  return decide(std::move(votes), k);
}

}  // namespace aprop
