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

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "iim/error.hpp"
#include "iim/model.hpp"

namespace iim {

// The model entries that are subsets of one transaction, each paired with its
// set-cover weight -ln(pi).
struct SupportedSet {
  std::vector<std::size_t> entries;
  std::vector<double> weights;  // parallel to entries

  std::size_t size() const noexcept { return entries.size(); }
};

SupportedSet supported_itemsets(const ItemsetModel& model, const Transaction& transaction);

// Greedy weighted set cover over `candidates` (model entry indices, each a
// subset of the transaction). Repeatedly takes the entry minimising
// weight / newly-covered-items; ties go to more new items, then to the
// lexicographically smaller itemset. Entries adding nothing are never taken.
// Returns the chosen entries in selection order. Throws Error(kInfeasible)
// if some item of the transaction cannot be covered.
//
// `weight_of(entry)` supplies the weight so callers can override individual
// entries (e.g. a forced candidate with weight 0).
template <typename WeightOf>
std::vector<std::size_t> greedy_cover(const ItemsetModel& model,
                                      std::span<const std::size_t> candidates,
                                      const Transaction& transaction, WeightOf&& weight_of);

std::vector<std::size_t> greedy_cover(const ItemsetModel& model, const SupportedSet& supported,
                                      const Transaction& transaction);

// f(C) = |union of C|.
std::size_t coverage(const ItemsetModel& model, std::span<const std::size_t> chosen);

// Sum of -ln(pi) over the chosen entries.
double selection_weight_of(const ItemsetModel& model, std::span<const std::size_t> chosen);

enum class OracleObjective {
  kFullObjective,    // the complete negative log-probability
  kSelectionWeight,  // the weighted set-cover part only
};

inline constexpr std::size_t kOracleMaxCandidates = 25;

// Exhaustive search over every subset of the supported set; returns the
// feasible covering of least objective (ties to the lexicographically
// smallest sorted list of itemsets), as ascending entry indices.
// Throws Error(kInvalidArgument) above kOracleMaxCandidates and
// Error(kInfeasible) if no covering exists.
std::vector<std::size_t> exact_cover_oracle(const ItemsetModel& model, const SupportedSet& supported,
                                            const Transaction& transaction,
                                            OracleObjective objective = OracleObjective::kFullObjective);

namespace detail {

struct GreedyScratch {
  std::vector<unsigned char> covered;
};
GreedyScratch& greedy_scratch();

}  // namespace detail

template <typename WeightOf>
std::vector<std::size_t> greedy_cover(const ItemsetModel& model,
                                      std::span<const std::size_t> candidates,
                                      const Transaction& transaction, WeightOf&& weight_of) {
  struct Key {
    double ratio;
    std::size_t gain;
    std::size_t entry;
  };
  // true when a should be taken before b
  auto before = [&](const Key& a, const Key& b) {
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    if (a.gain != b.gain) return a.gain > b.gain;
    return model[a.entry].itemset < model[b.entry].itemset;
  };
  auto heap_less = [&](const Key& a, const Key& b) { return before(b, a); };

  auto& covered = detail::greedy_scratch().covered;
  const auto items = transaction.items();

  std::vector<Key> heap;
  heap.reserve(candidates.size());
  for (std::size_t entry : candidates) {
    const auto& s = model[entry].itemset;
    if (covered.size() <= s.items().back()) covered.resize(s.items().back() + 1, 0);
    const std::size_t gain = s.size();
    heap.push_back({weight_of(entry) / static_cast<double>(gain), gain, entry});
  }
  std::make_heap(heap.begin(), heap.end(), heap_less);

  std::vector<std::size_t> chosen;
  std::size_t remaining = items.size();
  while (remaining > 0 && !heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    Key top = heap.back();
    heap.pop_back();
    std::size_t gain = 0;
    for (ItemId item : model[top.entry].itemset.items()) gain += covered[item] ? 0 : 1;
    if (gain == 0) continue;
    if (gain != top.gain) {
      // Stale key: ratios only grow as coverage grows, so re-queue.
      heap.push_back({weight_of(top.entry) / static_cast<double>(gain), gain, top.entry});
      std::push_heap(heap.begin(), heap.end(), heap_less);
      continue;
    }
    for (ItemId item : model[top.entry].itemset.items()) covered[item] = 1;
    remaining -= gain;
    chosen.push_back(top.entry);
  }
  for (std::size_t entry : chosen)
    for (ItemId item : model[entry].itemset.items()) covered[item] = 0;
  if (remaining > 0)
    fail(ErrorCode::kInfeasible, "transaction cannot be covered by the supported itemsets");
  return chosen;
}

}  // namespace iim
