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

#include "iim/error.hpp"
#include "iim/evaluation.hpp"

using namespace iim;

TEST_CASE("hand-computed precision-recall curve") {
  const std::vector<Itemset> truth{Itemset{1, 2}, Itemset{3, 4}, Itemset{5, 6}};
  const std::vector<Itemset> mined{Itemset{1, 2}, Itemset{3, 4}, Itemset{7, 8}, Itemset{5, 6}};
  auto curve = precision_recall(mined, truth);
  REQUIRE(curve.points.size() == 4);
  const double recall[] = {1.0 / 3, 2.0 / 3, 2.0 / 3, 1.0};
  const double precision[] = {1.0, 1.0, 2.0 / 3, 0.75};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(curve.points[k].k == k + 1);
    CHECK(curve.points[k].recall == doctest::Approx(recall[k]).epsilon(1e-15));
    CHECK(curve.points[k].precision == doctest::Approx(precision[k]).epsilon(1e-15));
  }
  CHECK(curve.interpolated[10] == 0.75);
  CHECK(curve.interpolated[0] == 1.0);
  CHECK(curve.interpolated[6] == 1.0);  // recall 0.6 reached at k = 2
  CHECK(curve.interpolated[7] == 0.75);
}

TEST_CASE("perfect and disjoint rankings") {
  const std::vector<Itemset> truth{Itemset{1, 2}, Itemset{3, 4}, Itemset{5}};
  std::vector<Itemset> mined{Itemset{5}, Itemset{3, 4}, Itemset{1, 2}};
  auto perfect = precision_recall(mined, truth);
  for (double p : perfect.interpolated) CHECK(p == 1.0);
  auto none = precision_recall(std::vector<Itemset>{Itemset{9}, Itemset{8, 9}}, truth);
  for (const auto& point : none.points) CHECK(point.precision == 0.0);
  for (double p : none.interpolated) CHECK(p == 0.0);
  CHECK_THROWS_AS(precision_recall(mined, std::vector<Itemset>{}), Error);
}

TEST_CASE("interpolated precision never increases") {
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Itemset> truth, mined;
    for (ItemId i = 0; i < 10; ++i) truth.push_back(Itemset{i, i + 100});
    const std::size_t n = 1 + rng() % 20;
    for (std::size_t k = 0; k < n; ++k) {
      const ItemId i = static_cast<ItemId>(rng() % 20);
      mined.push_back(Itemset{i, i + 100});
    }
    auto curve = precision_recall(mined, truth);
    for (std::size_t r = 1; r < kInterpolationPoints; ++r)
      CHECK(curve.interpolated[r] <= curve.interpolated[r - 1]);
    for (const auto& point : curve.points) {
      CHECK(point.precision >= 0.0);
      CHECK(point.precision <= 1.0);
      CHECK(point.recall <= 1.0);
    }
  }
}

TEST_CASE("hand-computed inter-itemset distance") {
  const std::vector<Itemset> list{Itemset{1, 2}, Itemset{1, 3}, Itemset{4, 5, 6}};
  auto iid = inter_itemset_distance(list, 3);
  CHECK(iid.value == 3.0);
  CHECK(iid.used == 3);
  CHECK_FALSE(iid.shortfall());
}

TEST_CASE("distance edge cases") {
  const std::vector<Itemset> same(4, Itemset{1, 2, 3});
  CHECK(inter_itemset_distance(same, 4).value == 0.0);
  const std::vector<Itemset> disjoint{Itemset{1, 2}, Itemset{3, 4, 5}};
  CHECK(inter_itemset_distance(disjoint, 2).value == 5.0);
  CHECK_THROWS_AS(inter_itemset_distance(disjoint, 1), Error);
  auto short_list = inter_itemset_distance(disjoint, 50);
  CHECK(short_list.used == 2);
  CHECK(short_list.requested == 50);
  CHECK(short_list.shortfall());
}

TEST_CASE("distance ignores order and item names") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Itemset> list;
    for (int k = 0; k < 8; ++k) {
      std::vector<ItemId> items;
      for (int n = 0; n < 1 + static_cast<int>(rng() % 4); ++n)
        items.push_back(static_cast<ItemId>(rng() % 12));
      list.emplace_back(items);
    }
    const double base = inter_itemset_distance(list, 8).value;
    auto shuffled = list;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(inter_itemset_distance(shuffled, 8).value == doctest::Approx(base));
    std::vector<ItemId> perm(12);
    for (ItemId i = 0; i < 12; ++i) perm[i] = i + 40;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Itemset> relabeled;
    for (const auto& s : list) {
      std::vector<ItemId> items;
      for (ItemId i : s.items()) items.push_back(perm[i]);
      relabeled.emplace_back(items);
    }
    CHECK(inter_itemset_distance(relabeled, 8).value == doctest::Approx(base));
  }
}

TEST_CASE("certain itemsets appear in every sampled transaction") {
  ItemsetModel model;
  model.add(Itemset{1, 2}, 1.0);
  model.add(Itemset{2, 5}, 1.0);
  auto db = sample_database(model, 100, 3, 1);
  for (const auto& t : db.transactions) CHECK(t == Transaction{1, 2, 5});
  CHECK(db.fired == std::vector<std::uint64_t>{100, 100});
}

TEST_CASE("sampling is seeded and thread independent") {
  ItemsetModel model;
  for (ItemId i = 0; i < 6; ++i) model.add(Itemset{i}, 0.2);
  model.add(Itemset{0, 3}, 0.3);
  auto a = sample_database(model, 5000, 42, 1);
  auto b = sample_database(model, 5000, 42, 8);
  auto c = sample_database(model, 5000, 43, 1);
  CHECK(a.transactions == b.transactions);
  CHECK(a.fired == b.fired);
  CHECK(a.transactions != c.transactions);
  CHECK_THROWS_AS(sample_database(model, 0, 1, 1), Error);
}

TEST_CASE("empty draws are kept") {
  ItemsetModel model;
  model.add(Itemset{1}, 0.0);
  auto db = generate_db(model, 10, 1, 1);
  CHECK(db.size() == 10);
  CHECK(db.item_count() == 0);
}
