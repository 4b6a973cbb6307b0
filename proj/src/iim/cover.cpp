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

#include "iim/cover.hpp"

#include <algorithm>
#include <limits>

#include "iim/error.hpp"

namespace iim {

namespace detail {

GreedyScratch& greedy_scratch() {
  thread_local GreedyScratch scratch;
  return scratch;
}

}  // namespace detail

SupportedSet supported_itemsets(const ItemsetModel& model, const Transaction& transaction) {
  SupportedSet out;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (!transaction.supports(model[i].itemset)) continue;
    out.entries.push_back(i);
    out.weights.push_back(selection_weight(model[i].pi));
  }
  return out;
}

std::vector<std::size_t> greedy_cover(const ItemsetModel& model, const SupportedSet& supported,
                                      const Transaction& transaction) {
  std::vector<double> weight_by_entry(model.size(), 0.0);
  for (std::size_t k = 0; k < supported.size(); ++k)
    weight_by_entry[supported.entries[k]] = supported.weights[k];
  return greedy_cover(model, supported.entries, transaction,
                      [&](std::size_t entry) { return weight_by_entry[entry]; });
}

std::size_t coverage(const ItemsetModel& model, std::span<const std::size_t> chosen) {
  std::vector<ItemId> items;
  for (std::size_t i : chosen) {
    auto s = model[i].itemset.items();
    items.insert(items.end(), s.begin(), s.end());
  }
  std::sort(items.begin(), items.end());
  return static_cast<std::size_t>(std::unique(items.begin(), items.end()) - items.begin());
}

double selection_weight_of(const ItemsetModel& model, std::span<const std::size_t> chosen) {
  double total = 0.0;
  for (std::size_t i : chosen) total += selection_weight(model[i].pi);
  return total;
}

std::vector<std::size_t> exact_cover_oracle(const ItemsetModel& model, const SupportedSet& supported,
                                            const Transaction& transaction,
                                            OracleObjective objective) {
  const std::size_t n = supported.size();
  if (n > kOracleMaxCandidates)
    fail(ErrorCode::kInvalidArgument, "instance too large for exhaustive search (" +
                                          std::to_string(n) + " supported itemsets)");

  // Items of the transaction as bit positions.
  const auto items = transaction.items();
  if (items.size() > 64) fail(ErrorCode::kInvalidArgument, "transaction too large for exhaustive search");
  std::vector<std::uint64_t> masks(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (ItemId item : model[supported.entries[k]].itemset.items()) {
      auto it = std::lower_bound(items.begin(), items.end(), item);
      if (it == items.end() || *it != item)
        fail(ErrorCode::kInvalidArgument, "supported itemset is not a subset of the transaction");
      masks[k] |= std::uint64_t{1} << (it - items.begin());
    }
  }
  const std::uint64_t full = items.size() == 64 ? ~std::uint64_t{0}
                                                : (std::uint64_t{1} << items.size()) - 1;

  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best;
  std::vector<Itemset> best_key;
  std::vector<std::size_t> current;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (subset >> k & 1) mask |= masks[k];
    if (mask != full) continue;

    current.clear();
    for (std::size_t k = 0; k < n; ++k)
      if (subset >> k & 1) current.push_back(supported.entries[k]);
    std::sort(current.begin(), current.end());
    const double cost = objective == OracleObjective::kFullObjective
                            ? objective_cost(model, transaction, current)
                            : selection_weight_of(model, current);
    if (cost > best_cost) continue;

    std::vector<Itemset> key;
    for (std::size_t i : current) key.push_back(model[i].itemset);
    std::sort(key.begin(), key.end());
    if (cost < best_cost || key < best_key) {
      best_cost = cost;
      best = current;
      best_key = std::move(key);
    }
  }
  if (best_cost == std::numeric_limits<double>::infinity())
    fail(ErrorCode::kInfeasible, "transaction cannot be covered by the supported itemsets");
  return best;
}

}  // namespace iim
