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
#include <sstream>

#include "iim/cover.hpp"
#include "iim/error.hpp"
#include "iim/model.hpp"
#include "iim/transaction_db.hpp"

using namespace iim;

namespace {

TransactionDb db_from_text(const std::string& text) {
  std::istringstream in(text);
  return TransactionDb::from_transactions(parse_fimi(in));
}

}  // namespace

TEST_CASE("FIMI lines are deduplicated, sorted and tallied") {
  auto db = db_from_text("1 2 3\n2 2 5\n");
  REQUIRE(db.size() == 2);
  CHECK(db.original_transaction(0) == Transaction{1, 2, 3});
  CHECK(db.original_transaction(1) == Transaction{2, 5});
  auto two = db.dense_id(2);
  REQUIRE(two);
  CHECK(db.item_support(*two) == 2);
  // Dense ids follow decreasing support, ties by original id.
  CHECK(db.original_id(0) == 2);
  CHECK(db.original_id(1) == 1);
  CHECK(db.original_id(2) == 3);
  CHECK(db.original_id(3) == 5);
}

TEST_CASE("empty and single-item FIMI input") {
  CHECK(db_from_text("").size() == 0);
  auto sevens = db_from_text("7\n7\n7\n");
  CHECK(sevens.size() == 3);
  CHECK(sevens.item_support(*sevens.dense_id(7)) == 3);
}

TEST_CASE("blank lines become empty transactions") {
  auto db = db_from_text("1 2\n\n  \n2\n");
  REQUIRE(db.size() == 4);
  CHECK(db[1].empty());
  CHECK(db[2].empty());
}

TEST_CASE("parse errors name the line") {
  std::istringstream in("1 2\n3 x 4\n");
  try {
    parse_fimi(in);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream negative("1 -2\n");
  CHECK_THROWS_AS(parse_fimi(negative), Error);
}

TEST_CASE("missing FIMI file is an I/O error") {
  try {
    load_fimi("/nonexistent/db.dat");
    FAIL("expected an I/O error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
}

TEST_CASE("itemsets are canonical regardless of input order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ItemId> items;
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) items.push_back(static_cast<ItemId>(rng() % 20));
    auto shuffled = items;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(items.front());  // a duplicate
    Itemset a(items), b(shuffled);
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(std::is_sorted(a.items().begin(), a.items().end()));
    CHECK(std::adjacent_find(a.items().begin(), a.items().end()) == a.items().end());
  }
  CHECK_THROWS_AS(Itemset(std::vector<ItemId>{}), Error);
}

TEST_CASE("objective of a single forced itemset") {
  ItemsetModel model;
  model.add(Itemset{1, 2}, 0.5);
  const std::size_t chosen[] = {0};
  CHECK(objective_cost(model, Transaction{1, 2}, chosen) == doctest::Approx(0.6931471805599453));
}

TEST_CASE("objective sums used and unused terms") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.5);   // A
  model.add(Itemset{2}, 0.25);  // B
  const std::size_t chosen[] = {0};
  // -ln 0.5 - ln 0.75
  CHECK(objective_cost(model, Transaction{1}, chosen) == doctest::Approx(0.9808292530117262).epsilon(1e-12));
}

TEST_CASE("an unused itemset adds its absence cost") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.5);
  model.add(Itemset{2}, 0.25);
  const std::size_t chosen[] = {0};
  const double before = objective_cost(model, Transaction{1}, chosen);
  model.add(Itemset{7, 8}, 0.1);
  const double after = objective_cost(model, Transaction{1}, chosen);
  CHECK(after - before == doctest::Approx(0.10536051565782628).epsilon(1e-12));
}

TEST_CASE("objective rejects invalid coverings") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.5);
  model.add(Itemset{2, 3}, 0.5);
  const std::size_t not_subset[] = {0, 1};
  CHECK_THROWS_AS(objective_cost(model, Transaction{1, 2}, not_subset), Error);
  const std::size_t uncovered[] = {0};
  CHECK_THROWS_AS(objective_cost(model, Transaction{1, 4}, uncovered), Error);
  const std::size_t twice[] = {0, 0};
  CHECK_THROWS_AS(objective_cost(model, Transaction{1}, twice), Error);
}

TEST_CASE("objective stays finite at probabilities 0 and 1") {
  ItemsetModel model;
  model.add(Itemset{1}, 1.0);
  model.add(Itemset{2}, 0.0);
  model.add(Itemset{1, 2}, 0.0);
  const std::size_t chosen[] = {0, 1};
  const double cost = objective_cost(model, Transaction{1, 2}, chosen);
  CHECK(std::isfinite(cost));
  CHECK(cost == doctest::Approx(selection_weight(1.0) + selection_weight(0.0) + absence_weight(0.0)));
  CHECK(selection_weight(0.0) == doctest::Approx(-std::log(kProbabilityFloor)));
}

TEST_CASE("objective decomposes into chosen and unchosen sums") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    ItemsetModel model;
    for (ItemId i = 0; i < 6; ++i) model.add(Itemset{i}, unit_uniform(rng));
    for (int k = 0; k < 6; ++k) {
      Itemset s{static_cast<ItemId>(rng() % 6), static_cast<ItemId>(rng() % 6)};
      if (!model.contains(s)) model.add(s, unit_uniform(rng));
    }
    auto sample = sample_transaction(model, rng);
    if (sample.chosen.empty()) continue;
    double used = 0.0, unused = 0.0;
    for (std::size_t i = 0; i < model.size(); ++i) {
      const double p = std::min(std::max(model[i].pi, 1e-12), 1.0 - 1e-12);
      if (std::find(sample.chosen.begin(), sample.chosen.end(), i) != sample.chosen.end())
        used += -std::log(p);
      else
        unused += -std::log(1.0 - p);
    }
    CHECK(objective_cost(model, sample.transaction, sample.chosen) ==
          doctest::Approx(used + unused).epsilon(1e-12));
  }
}

TEST_CASE("sampler with certain and impossible itemsets") {
  std::mt19937_64 rng(1);
  ItemsetModel certain;
  certain.add(Itemset{3, 4}, 1.0);
  for (int i = 0; i < 50; ++i) {
    auto s = sample_transaction(certain, rng);
    CHECK(s.transaction == Transaction{3, 4});
    CHECK(s.chosen == std::vector<std::size_t>{0});
  }
  ItemsetModel never;
  never.add(Itemset{1}, 0.0);
  never.add(Itemset{1, 2}, 0.0);
  for (int i = 0; i < 50; ++i) {
    auto s = sample_transaction(never, rng);
    CHECK(s.transaction.empty());
    CHECK(s.chosen.empty());
  }
}

TEST_CASE("overlapping itemsets generate shared items once") {
  // bacon=1, eggs=2, flour=3, sugar=4
  ItemsetModel model;
  model.add(Itemset{1, 2}, 1.0);
  model.add(Itemset{2, 3, 4}, 1.0);
  std::mt19937_64 rng(3);
  auto s = sample_transaction(model, rng);
  CHECK(s.transaction == Transaction{1, 2, 3, 4});
  CHECK(s.chosen.size() == 2);
}

TEST_CASE("sampler inclusion frequencies match pi") {
  ItemsetModel model;
  const double pis[] = {0.05, 0.2, 0.5, 0.8};
  for (ItemId i = 0; i < 4; ++i) model.add(Itemset{i, i + 10}, pis[i]);
  std::mt19937_64 rng(2024);
  const int n = 100000;
  std::vector<int> fired(4, 0);
  for (int k = 0; k < n; ++k)
    for (std::size_t i : sample_transaction(model, rng).chosen) ++fired[i];
  for (int i = 0; i < 4; ++i) {
    const double rate = fired[i] / static_cast<double>(n);
    CHECK(std::abs(rate - pis[i]) <= 3.0 * std::sqrt(pis[i] * (1 - pis[i]) / n));
  }
}

TEST_CASE("sampled coverings are valid and finite") {
  ItemsetModel model;
  for (ItemId i = 0; i < 5; ++i) model.add(Itemset{i}, 0.3);
  model.add(Itemset{0, 1}, 0.4);
  model.add(Itemset{1, 2, 3}, 0.2);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 500; ++k) {
    auto s = sample_transaction(model, rng);
    const double cost = objective_cost(model, s.transaction, s.chosen);
    CHECK(std::isfinite(cost));
    CHECK(cost >= 0.0);
  }
}

TEST_CASE("model snapshot restores set, probabilities and generation") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.5);
  model.add(Itemset{2}, 0.25);
  const auto snap = model.snapshot();
  const auto generation = model.generation();
  model.add(Itemset{1, 2}, 1.0);
  model.set_pi(0, 0.9);
  CHECK(model.generation() != generation);
  model.restore(snap);
  CHECK(model.size() == 2);
  CHECK_FALSE(model.contains(Itemset{1, 2}));
  CHECK(model[0].pi == 0.5);
  CHECK(model.generation() == generation);
  CHECK_THROWS_AS(model.add(Itemset{1}, 0.1), Error);
  CHECK_THROWS_AS(model.add(Itemset{9}, 1.5), Error);
}
