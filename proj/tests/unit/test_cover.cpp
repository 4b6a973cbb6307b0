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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "iim/cover.hpp"
#include "iim/error.hpp"
#include "iim/model.hpp"

using namespace iim;

namespace {

double harmonic(std::size_t n) {
  double h = 0.0;
  for (std::size_t k = 1; k <= n; ++k) h += 1.0 / static_cast<double>(k);
  return h;
}

std::vector<Itemset> itemsets_of(const ItemsetModel& model, std::vector<std::size_t> chosen) {
  std::vector<Itemset> out;
  for (std::size_t i : chosen) out.push_back(model[i].itemset);
  std::sort(out.begin(), out.end());
  return out;
}

// A random instance whose singletons guarantee coverability.
ItemsetModel random_instance(std::mt19937_64& rng, ItemId items, std::size_t extra) {
  ItemsetModel model;
  std::uniform_real_distribution<double> pi(0.05, 0.95);
  for (ItemId i = 0; i < items; ++i) model.add(Itemset{i}, pi(rng));
  std::size_t attempts = 0;
  while (model.size() < items + extra && attempts++ < 1000) {
    std::vector<ItemId> s;
    const std::size_t len = 2 + rng() % 3;
    for (std::size_t k = 0; k < len; ++k) s.push_back(static_cast<ItemId>(rng() % items));
    Itemset set(s);
    if (set.size() >= 2 && !model.contains(set)) model.add(set, pi(rng));
  }
  return model;
}

}  // namespace

TEST_CASE("supported itemsets are exactly the subsets of the transaction") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.5);
  model.add(Itemset{2}, 0.5);
  model.add(Itemset{3}, 0.5);
  model.add(Itemset{1, 2}, 0.5);
  model.add(Itemset{2, 4}, 0.5);
  auto supported = supported_itemsets(model, Transaction{1, 2, 3});
  CHECK(itemsets_of(model, supported.entries) ==
        std::vector<Itemset>{Itemset{1}, Itemset{1, 2}, Itemset{2}, Itemset{3}});
  REQUIRE(supported.weights.size() == supported.size());
  for (std::size_t k = 0; k < supported.size(); ++k)
    CHECK(supported.weights[k] == selection_weight(model[supported.entries[k]].pi));
}

TEST_CASE("greedy takes the cheaper pair then the remaining singleton") {
  ItemsetModel model;
  model.add(Itemset{1, 2}, 0.5);
  model.add(Itemset{2, 3}, 0.25);
  model.add(Itemset{3}, 0.5);
  const Transaction t{1, 2, 3};
  auto supported = supported_itemsets(model, t);
  auto chosen = greedy_cover(model, supported, t);
  REQUIRE(chosen.size() == 2);
  CHECK(model[chosen[0]].itemset == Itemset{1, 2});
  CHECK(model[chosen[1]].itemset == Itemset{3});
}

TEST_CASE("greedy takes a zero-weight itemset first") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.5);
  model.add(Itemset{2}, 0.5);
  model.add(Itemset{1, 2}, 1.0);
  const Transaction t{1, 2};
  auto chosen = greedy_cover(model, supported_itemsets(model, t), t);
  REQUIRE(chosen.size() == 1);
  CHECK(model[chosen[0]].itemset == Itemset{1, 2});
}

TEST_CASE("an empty transaction needs no itemsets") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.5);
  const Transaction t;
  CHECK(greedy_cover(model, supported_itemsets(model, t), t).empty());
}

TEST_CASE("an uncoverable transaction is infeasible") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.5);
  const Transaction t{1, 2};
  try {
    greedy_cover(model, supported_itemsets(model, t), t);
    FAIL("expected infeasible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasible);
  }
}

TEST_CASE("with only singletons every cover is the same") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.3);
  model.add(Itemset{2}, 0.6);
  model.add(Itemset{3}, 0.9);
  const Transaction t{1, 2, 3};
  auto supported = supported_itemsets(model, t);
  auto greedy = greedy_cover(model, supported, t);
  auto oracle = exact_cover_oracle(model, supported, t);
  CHECK(itemsets_of(model, greedy) == itemsets_of(model, oracle));
  CHECK(greedy.size() == 3);
}

TEST_CASE("oracle minimises the full objective") {
  ItemsetModel model;
  model.add(Itemset{1, 2}, 0.5);
  model.add(Itemset{2, 3}, 0.25);
  model.add(Itemset{3}, 0.5);
  const Transaction t{1, 2, 3};
  auto supported = supported_itemsets(model, t);
  auto full = exact_cover_oracle(model, supported, t, OracleObjective::kFullObjective);
  CHECK(itemsets_of(model, full) == std::vector<Itemset>{Itemset{1, 2}, Itemset{3}});
  CHECK(objective_cost(model, t, full) == doctest::Approx(1.6739764335716716).epsilon(1e-12));
  auto sel = exact_cover_oracle(model, supported, t, OracleObjective::kSelectionWeight);
  CHECK(selection_weight_of(model, sel) == doctest::Approx(1.3862943611198906).epsilon(1e-12));
}

TEST_CASE("oracle refuses oversized instances") {
  ItemsetModel model;
  std::vector<ItemId> items;
  for (ItemId i = 0; i < 26; ++i) {
    model.add(Itemset{i}, 0.5);
    items.push_back(i);
  }
  const Transaction t(items);
  auto supported = supported_itemsets(model, t);
  REQUIRE(supported.size() > kOracleMaxCandidates);
  CHECK_THROWS_AS(exact_cover_oracle(model, supported, t), Error);
}

TEST_CASE("greedy stays within the harmonic bound of the optimum") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const ItemId n = 2 + rng() % 7;
    auto model = random_instance(rng, n, rng() % 5);
    std::vector<ItemId> all(n);
    for (ItemId i = 0; i < n; ++i) all[i] = i;
    const Transaction t(all);
    auto supported = supported_itemsets(model, t);
    auto greedy = greedy_cover(model, supported, t);
    auto best = exact_cover_oracle(model, supported, t, OracleObjective::kSelectionWeight);
    const double g = selection_weight_of(model, greedy);
    const double o = selection_weight_of(model, best);
    CHECK(g <= harmonic(t.size()) * o + 1e-9);
    CHECK(g >= o - 1e-9);
    CHECK(coverage(model, greedy) == t.size());
  }
}

TEST_CASE("every greedy pick adds an uncovered item") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    auto model = random_instance(rng, 10, 15);
    std::vector<ItemId> items;
    for (ItemId i = 0; i < 10; ++i)
      if (rng() % 2) items.push_back(i);
    const Transaction t(items);
    auto chosen = greedy_cover(model, supported_itemsets(model, t), t);
    std::vector<bool> covered(10, false);
    for (std::size_t e : chosen) {
      bool adds = false;
      for (ItemId item : model[e].itemset.items()) {
        CHECK(t.contains(item));
        adds = adds || !covered[item];
        covered[item] = true;
      }
      CHECK(adds);
    }
    for (ItemId item : t.items()) CHECK(covered[item]);
  }
}

TEST_CASE("greedy is deterministic under candidate permutation") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    auto model = random_instance(rng, 8, 10);
    std::vector<ItemId> all(8);
    for (ItemId i = 0; i < 8; ++i) all[i] = i;
    const Transaction t(all);
    auto supported = supported_itemsets(model, t);
    auto first = greedy_cover(model, supported, t);
    auto shuffled = supported.entries;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto second = greedy_cover(model, std::span<const std::size_t>(shuffled), t,
                               [&](std::size_t e) { return selection_weight(model[e].pi); });
    CHECK(first == second);
  }
}

TEST_CASE("coverage is submodular") {
  std::mt19937_64 rng(80);
  for (int trial = 0; trial < 300; ++trial) {
    auto model = random_instance(rng, 8, 12);
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < model.size(); ++i) {
      if (rng() % 3 == 0) a.push_back(i);
    }
    b = a;
    for (std::size_t i = 0; i < model.size(); ++i)
      if (rng() % 3 == 0 && std::find(b.begin(), b.end(), i) == b.end()) b.push_back(i);
    std::size_t x = rng() % model.size();
    if (std::find(b.begin(), b.end(), x) != b.end()) continue;
    auto ax = a, bx = b;
    ax.push_back(x);
    bx.push_back(x);
    const auto gain_a = coverage(model, ax) - coverage(model, a);
    const auto gain_b = coverage(model, bx) - coverage(model, b);
    CHECK(gain_a >= gain_b);
  }
}
