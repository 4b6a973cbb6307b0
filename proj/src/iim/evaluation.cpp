// Copyright 2026 The IIM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iim/evaluation.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <unordered_set>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include "iim/error.hpp"

namespace iim {

PrCurve precision_recall(std::span<const Itemset> mined, std::span<const Itemset> truth) {
  if (truth.empty()) fail(ErrorCode::kInvalidArgument, "truth set is empty");
  const std::unordered_set<Itemset, ItemsetHash> truth_set(truth.begin(), truth.end());
  const std::size_t relevant = truth_set.size();

  PrCurve curve;
  std::size_t hits = 0;
  std::unordered_set<Itemset, ItemsetHash> seen;
  for (std::size_t k = 1; k <= mined.size(); ++k) {
    const Itemset& s = mined[k - 1];
    if (truth_set.contains(s) && seen.insert(s).second) ++hits;
    curve.points.push_back({k, hits, static_cast<double>(hits) / static_cast<double>(relevant),
                            static_cast<double>(hits) / static_cast<double>(k)});
  }
  for (std::size_t level = 0; level < kInterpolationPoints; ++level) {
    double best = 0.0;
    // recall >= level / 10, compared on integers.
    for (const auto& p : curve.points)
      if (p.hits * (kInterpolationPoints - 1) >= level * relevant) best = std::max(best, p.precision);
    curve.interpolated[level] = best;
  }
  return curve;
}

IidResult inter_itemset_distance(std::span<const Itemset> itemsets, std::size_t k) {
  if (k < 2) fail(ErrorCode::kInvalidArgument, "IID needs k >= 2");
  IidResult result;
  result.requested = k;
  result.used = std::min(k, itemsets.size());
  if (result.used < 2) fail(ErrorCode::kInvalidArgument, "IID needs at least 2 itemsets");

  double total = 0.0;
  for (std::size_t a = 0; a < result.used; ++a) {
    std::size_t nearest = std::numeric_limits<std::size_t>::max();
    for (std::size_t b = 0; b < result.used; ++b)
      if (a != b) nearest = std::min(nearest, symmetric_difference_size(itemsets[a], itemsets[b]));
    total += static_cast<double>(nearest);
  }
  result.value = total / static_cast<double>(result.used);
  return result;
}

SampledDatabase sample_database(const ItemsetModel& model, std::size_t m, std::uint64_t seed,
                                std::uint32_t threads) {
  if (m == 0) fail(ErrorCode::kInvalidArgument, "number of transactions must be at least 1");
  SampledDatabase out;
  out.transactions.resize(m);
  std::vector<std::vector<std::size_t>> chosen(m);

  const int concurrency = threads != 0 ? static_cast<int>(threads)
                                       : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  tbb::task_arena arena(concurrency);
  arena.execute([&] {
    tbb::parallel_for(tbb::blocked_range<std::size_t>(0, m, 256),
                      [&](const tbb::blocked_range<std::size_t>& range) {
                        for (std::size_t j = range.begin(); j != range.end(); ++j) {
                          auto rng = substream(seed, j);
                          auto sample = sample_transaction(model, rng);
                          out.transactions[j] = std::move(sample.transaction);
                          chosen[j] = std::move(sample.chosen);
                        }
                      });
  });

  out.fired.assign(model.size(), 0);
  for (const auto& c : chosen)
    for (std::size_t i : c) ++out.fired[i];
  return out;
}

TransactionDb generate_db(const ItemsetModel& model, std::size_t m, std::uint64_t seed,
                          std::uint32_t threads) {
  const auto sampled = sample_database(model, m, seed, threads);
  return TransactionDb::from_transactions(sampled.transactions);
}

}  // namespace iim
