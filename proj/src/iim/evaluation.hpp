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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "iim/model.hpp"
#include "iim/transaction_db.hpp"

namespace iim {

struct PrPoint {
  std::size_t k = 0;     // cutoff
  std::size_t hits = 0;  // |top-k ∩ truth|
  double recall = 0.0;
  double precision = 0.0;
};

inline constexpr std::size_t kInterpolationPoints = 11;

struct PrCurve {
  std::vector<PrPoint> points;  // one per cutoff k = 1..|mined|
  // Interpolated precision at recall 0.0, 0.1, ..., 1.0: the best precision
  // among points whose recall is at least that level (0 if none).
  std::array<double, kInterpolationPoints> interpolated{};
};

// Top-k precision and recall of a ranked list against the generating
// itemsets, matching by exact set equality. Throws Error(kInvalidArgument)
// for an empty truth set.
PrCurve precision_recall(std::span<const Itemset> mined, std::span<const Itemset> truth);

struct IidResult {
  double value = 0.0;
  std::size_t requested = 0;
  std::size_t used = 0;  // < requested when the list was shorter

  bool shortfall() const noexcept { return used < requested; }
};

// Average inter-itemset distance over the first k itemsets: the mean, over
// each itemset, of its smallest symmetric difference to any other one.
// Throws Error(kInvalidArgument) if k < 2 or fewer than 2 itemsets exist.
IidResult inter_itemset_distance(std::span<const Itemset> itemsets, std::size_t k);

struct SampledDatabase {
  std::vector<Transaction> transactions;  // in the model's item ids
  std::vector<std::uint64_t> fired;       // per model entry: transactions with z = 1
};

// m independent draws from the generative model. Transaction j uses its own
// random stream derived from (seed, j), so the output does not depend on the
// thread count.
SampledDatabase sample_database(const ItemsetModel& model, std::size_t m, std::uint64_t seed,
                                std::uint32_t threads = 0);

TransactionDb generate_db(const ItemsetModel& model, std::size_t m, std::uint64_t seed,
                          std::uint32_t threads = 0);

}  // namespace iim
