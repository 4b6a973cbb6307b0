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

#include <optional>
#include <random>

#include "iim/prefix_tree.hpp"
#include "iim/transaction_db.hpp"

using namespace iim;

namespace {

TransactionDb random_db(std::mt19937_64& rng, std::size_t m, ItemId items, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Transaction> raw;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<ItemId> t;
    for (ItemId i = 0; i < items; ++i)
      if (coin(rng)) t.push_back(i);
    raw.emplace_back(std::move(t));
  }
  return TransactionDb::from_transactions(raw);
}

std::uint64_t naive_support(const TransactionDb& db, const Itemset& s) {
  std::uint64_t n = 0;
  for (const auto& t : db.transactions()) n += t.supports(s) ? 1 : 0;
  return n;
}

// Leaves plus the transactions ending at inner nodes.
std::uint64_t path_total(const PrefixTree& tree, const PrefixTree::Node& node) {
  std::uint64_t below = 0;
  for (const auto& child : tree.children(node)) below += child.count;
  std::uint64_t total = node.count - below;
  for (const auto& child : tree.children(node)) total += path_total(tree, child);
  return total;
}

// Items strictly increase along every path; counts never grow downwards.
void check_invariants(const PrefixTree& tree, const PrefixTree::Node& node,
                      std::optional<ItemId> last) {
  for (ItemId item : tree.run(node)) {
    if (last) CHECK(item > *last);
    last = item;
  }
  std::uint64_t below = 0;
  for (const auto& child : tree.children(node)) {
    below += child.count;
    check_invariants(tree, child, last);
  }
  CHECK(node.count >= below);
}

}  // namespace

TEST_CASE("shared prefixes merge") {
  // a=1 (support 3) > b=2 (2) > c=3 (1)
  std::vector<Transaction> raw{{1, 2}, {1, 2}, {1, 3}};
  auto db = TransactionDb::from_transactions(raw);
  PrefixTree tree(db);
  const auto& root = tree.nodes()[0];
  CHECK(root.count == 3);
  REQUIRE(tree.children(root).size() == 1);
  const auto& a = tree.children(root)[0];
  CHECK(a.count == 3);
  REQUIRE(tree.run(a).size() == 1);
  CHECK(db.original_id(tree.run(a)[0]) == 1);
  REQUIRE(tree.children(a).size() == 2);
  CHECK(tree.children(a)[0].count == 2);
  CHECK(db.original_id(tree.run(tree.children(a)[0])[0]) == 2);
  CHECK(tree.children(a)[1].count == 1);
  CHECK(db.original_id(tree.run(tree.children(a)[1])[0]) == 3);
}

TEST_CASE("identical transactions form one compressed path") {
  std::vector<Transaction> raw(50, Transaction{4, 5, 6, 7});
  auto db = TransactionDb::from_transactions(raw);
  PrefixTree tree(db);
  CHECK(tree.node_count() == 2);
  const auto& only = tree.children(tree.nodes()[0])[0];
  CHECK(only.count == 50);
  CHECK(tree.run(only).size() == 4);
  CHECK(tree.support(*db.to_dense(Itemset{5, 7})) == 50);
}

TEST_CASE("path counts add up to the number of transactions") {
  std::mt19937_64 rng(500);
  auto db = random_db(rng, 500, 20, 0.3);
  PrefixTree tree(db);
  CHECK(path_total(tree, tree.nodes()[0]) == 500);
  check_invariants(tree, tree.nodes()[0], std::nullopt);
}

TEST_CASE("singleton support matches the item tally") {
  std::mt19937_64 rng(501);
  auto db = random_db(rng, 300, 15, 0.25);
  PrefixTree tree(db);
  for (ItemId d = 0; d < db.item_count(); ++d)
    CHECK(tree.support(Itemset{d}) == db.item_support(d));
}

TEST_CASE("absent and unknown itemsets have support zero") {
  std::vector<Transaction> raw{{1, 2}, {3}};
  auto db = TransactionDb::from_transactions(raw);
  PrefixTree tree(db);
  CHECK(tree.support(*db.to_dense(Itemset{1, 3})) == 0);
  CHECK(tree.support(Itemset{99}) == 0);
}

TEST_CASE("support matches a naive scan on random queries") {
  std::mt19937_64 rng(502);
  for (double density : {0.1, 0.4}) {
    auto db = random_db(rng, 400, 25, density);
    PrefixTree tree(db);
    for (int q = 0; q < 1000; ++q) {
      std::vector<ItemId> items;
      const std::size_t len = 1 + rng() % 4;
      for (std::size_t k = 0; k < len; ++k)
        items.push_back(static_cast<ItemId>(rng() % db.item_count()));
      Itemset s(items);
      CHECK(tree.support(s) == naive_support(db, s));
      CHECK(tree.support(s) == db.supporting(s).size());
    }
  }
}

TEST_CASE("support is anti-monotone") {
  std::mt19937_64 rng(503);
  auto db = random_db(rng, 300, 12, 0.35);
  PrefixTree tree(db);
  for (int q = 0; q < 500; ++q) {
    Itemset a{static_cast<ItemId>(rng() % 12), static_cast<ItemId>(rng() % 12)};
    Itemset b = a.union_with(Itemset{static_cast<ItemId>(rng() % 12)});
    CHECK(tree.support(a) >= tree.support(b));
  }
}

TEST_CASE("node count is bounded by item occurrences") {
  std::mt19937_64 rng(504);
  for (int trial = 0; trial < 10; ++trial) {
    auto db = random_db(rng, 200, 30, 0.2);
    PrefixTree tree(db);
    CHECK(tree.node_count() - 1 <= db.total_occurrences());
  }
}
