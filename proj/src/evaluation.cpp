#include "aprop/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "aprop/errors.hpp"
#include "aprop/random.hpp"

namespace aprop {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Baseline: return "baseline";
    case Strategy::Selected: return "selected";
    case Strategy::Bongard: return "bongard";
    case Strategy::Knn: return "knn";
    case Strategy::Constant: return "constant";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::Baseline, Strategy::Selected, Strategy::Bongard, Strategy::Knn, Strategy::Constant})
    if (to_string(s) == name) return s;
  throw ConfigError("unknown strategy '" + std::string(name) + "'");
}

std::string_view to_string(Fallback f) { return f == Fallback::None ? "none" : "knn1"; }

Fallback parse_fallback(std::string_view name) {
  if (name == "none") return Fallback::None;
  if (name == "knn1") return Fallback::Knn1;
  throw ConfigError("unknown fallback '" + std::string(name) + "'");
}

void validate(const EvalParams& params) {
  std::string problems;
  auto fail = [&](const std::string& msg) { problems += (problems.empty() ? "" : "; ") + msg; };
  if (params.neighbor_budget < 1) fail("neighbor_budget must be >= 1");
  if (params.max_literals < 1) fail("max_literals must be >= 1");
  if (params.k < 1) fail("k must be >= 1");
  if (params.mining.min_support < 1) fail("min_support must be >= 1");
  if (!(params.mining.min_confidence >= 0.0 && params.mining.min_confidence <= 1.0))
    fail("min_confidence must lie in [0, 1]");
  if (!(params.subsample > 0.0 && params.subsample <= 1.0)) fail("subsample must lie in (0, 1]");
  if (!problems.empty()) throw ConfigError(problems);
}

std::vector<std::vector<std::size_t>> make_folds(const Dataset& data, std::size_t folds, std::uint64_t seed,
                                                 bool& stratified, std::vector<std::string>& warnings) {
  if (folds < 2) throw ConfigError("folds must be >= 2");
  if (data.size() < folds) throw ConfigError("fewer examples than folds");
  Rng rng(seed);
  std::vector<std::vector<std::size_t>> by_class(data.classes().size());
  for (std::size_t i = 0; i < data.size(); ++i) by_class[data.label(i).code].push_back(i);

  stratified = std::all_of(by_class.begin(), by_class.end(),
                           [&](const auto& members) { return members.empty() || members.size() >= folds; });
  std::vector<std::vector<std::size_t>> out(folds);
  std::size_t next = 0;
  if (stratified) {
    for (auto& members : by_class) {
      rng.shuffle(members);
      for (std::size_t i : members) out[next++ % folds].push_back(i);
    }
  } else {
    warnings.push_back("a class has fewer members than folds; using non-stratified folds");
    std::vector<std::size_t> all(data.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    rng.shuffle(all);
    for (std::size_t i : all) out[next++ % folds].push_back(i);
  }
  for (auto& f : out) std::sort(f.begin(), f.end());
  return out;
}

namespace {

Value majority_label(const Dataset& train) {
  std::vector<std::uint64_t> counts(train.classes().size(), 0);
  for (Value l : train.labels()) ++counts[l.code];
  return Value{static_cast<std::uint16_t>(std::max_element(counts.begin(), counts.end()) - counts.begin())};
}

std::vector<CompetentPair> mine_pairs(const Dataset& train, const EvalParams& params, std::uint64_t seed) {
  if (params.subsample >= 1.0) return extract_competent_pairs(train, params.mining);
  std::vector<std::size_t> rows(train.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  Rng rng(seed);
  rng.shuffle(rows);
  auto keep = static_cast<std::size_t>(std::llround(params.subsample * static_cast<double>(rows.size())));
  keep = std::clamp<std::size_t>(keep, 1, rows.size());
  rows.resize(keep);
  std::sort(rows.begin(), rows.end());
  return extract_competent_pairs(train.subset(rows), params.mining);
}

void summarize(Metrics& m) {
  const double n = static_cast<double>(m.folds.size());
  std::size_t correct = 0, total = 0, abstained = 0;
  double sum = 0.0;
  for (const auto& f : m.folds) {
    sum += f.accuracy;
    correct += f.correct;
    total += f.test_rows.size();
    abstained += f.abstained;
    m.triplets_examined += f.triplets_examined;
    m.seconds += f.seconds;
  }
  m.mean_accuracy = sum / n;
  double sq = 0.0;
  for (const auto& f : m.folds) sq += (f.accuracy - m.mean_accuracy) * (f.accuracy - m.mean_accuracy);
  m.std_accuracy = m.folds.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
  m.pooled_accuracy = total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
  m.abstention_rate = total ? static_cast<double>(abstained) / static_cast<double>(total) : 0.0;
}

}  // namespace

FoldResult evaluate_split(const Dataset& train, const Dataset& test, const EvalParams& params, std::uint64_t seed) {
  validate(params);
  const auto start = std::chrono::steady_clock::now();
  FoldResult r;

  std::vector<CompetentPair> pairs;
  if (params.strategy == Strategy::Selected) pairs = mine_pairs(train, params, seed);
  r.competent_pairs = pairs.size();
  const CompetentPairIndex pair_index(pairs);
  const Value constant = majority_label(train);
  const BongardOptions bongard{params.neighbor_budget, params.max_literals};
  const std::size_t k = std::min(params.k, train.size());

  for (std::size_t i = 0; i < test.size(); ++i) {
    const Item& query = test.item(i);
    Prediction p;
    switch (params.strategy) {
      case Strategy::Baseline: p = brute_force_classify(train, query); break;
      case Strategy::Selected:
        if (!pair_index.empty()) p = selected_triplet_classify(train, pair_index, query, params.radius);
        break;
      case Strategy::Bongard: p = bongard_classify(train, query, bongard); break;
      case Strategy::Knn: p = knn_classify(train, query, k); break;
      case Strategy::Constant:
        p.label = constant;
        p.abstained = false;
        break;
    }
    r.triplets_examined += p.triplets_examined;
    if (p.abstained) {
      ++r.abstained;
      if (params.fallback == Fallback::None) continue;
      p = knn_classify(train, query, 1);
    }
    if (p.label == test.label(i)) ++r.correct;
  }
  r.accuracy = test.empty() ? 0.0 : static_cast<double>(r.correct) / static_cast<double>(test.size());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Metrics cross_validate(const Dataset& data, const EvalParams& params, std::size_t folds, std::uint64_t seed,
                       std::size_t workers) {
  validate(params);
  Metrics m;
  const auto parts = make_folds(data, folds, seed, m.stratified, m.warnings);
  m.folds.resize(folds);

  auto run_fold = [&](std::size_t f) {
    std::vector<std::size_t> train_rows;
    train_rows.reserve(data.size());
    for (std::size_t g = 0; g < folds; ++g)
      if (g != f) train_rows.insert(train_rows.end(), parts[g].begin(), parts[g].end());
    std::sort(train_rows.begin(), train_rows.end());
    FoldResult r = evaluate_split(data.subset(train_rows), data.subset(parts[f]), params, derive_seed(seed, f));
    r.index = f;
    r.test_rows = parts[f];
    m.folds[f] = std::move(r);
  };

  workers = std::clamp<std::size_t>(workers, 1, folds);
  if (workers == 1) {
    for (std::size_t f = 0; f < folds; ++f) run_fold(f);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t f = w; f < folds; f += workers) run_fold(f);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  summarize(m);
  return m;
}

Metrics resubstitution(const Dataset& data, const EvalParams& params, std::uint64_t seed) {
  Metrics m;
  FoldResult r = evaluate_split(data, data, params, derive_seed(seed, 0));
  r.test_rows.resize(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) r.test_rows[i] = i;
  m.folds.push_back(std::move(r));
  summarize(m);
  return m;
}

GridResult grid_search_k(const Dataset& data, const EvalParams& params, const std::vector<std::size_t>& grid,
                         std::size_t folds, std::uint64_t seed, std::size_t workers) {
  if (grid.empty()) throw ConfigError("empty k grid");
  GridResult out;
  for (std::size_t k : grid) {
    EvalParams p = params;
    if (params.strategy == Strategy::Bongard) p.neighbor_budget = k;
    else p.k = k;
    out.runs.push_back({k, cross_validate(data, p, folds, seed, workers)});
  }
  for (std::size_t i = 1; i < out.runs.size(); ++i) {
    const auto& cur = out.runs[i];
    const auto& best = out.runs[out.best];
    if (cur.metrics.mean_accuracy > best.metrics.mean_accuracy ||
        (cur.metrics.mean_accuracy == best.metrics.mean_accuracy && cur.k < best.k))
      out.best = i;
  }
  return out;
}

}  // namespace aprop
