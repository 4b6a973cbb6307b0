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

#include <cstdint>
#include <span>
#include <vector>

#include "iim/itemset.hpp"
#include "iim/transaction_db.hpp"

namespace iim {

// Prefix tree over the transactions of a TransactionDb, keyed by dense item
// id (which is decreasing-support order). Chains of nodes with a single child
// and equal count are stored as one node holding a run of items. There are no
// links between nodes carrying the same item; queries walk the tree.
class PrefixTree {
 public:
  struct Node {
    std::uint32_t run_begin = 0;  // into run_items()
    std::uint32_t run_length = 0;
    std::uint64_t count = 0;      // transactions whose prefix passes through here
    std::uint32_t child_begin = 0;  // into nodes(); children are contiguous
    std::uint32_t child_count = 0;  // and sorted by first item
  };

  PrefixTree() = default;
  explicit PrefixTree(const TransactionDb& db);

  // Number of transactions containing `dense` (exact). Items outside the
  // database's id range simply yield 0.
  std::uint64_t support(const Itemset& dense) const;
  std::uint64_t support(std::span<const ItemId> sorted_dense) const;

  // nodes()[0] is the root sentinel; its count is the number of transactions.
  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::span<const ItemId> run(const Node& node) const noexcept {
    return std::span<const ItemId>(run_items_).subspan(node.run_begin, node.run_length);
  }
  std::span<const Node> children(const Node& node) const noexcept {
    return std::span<const Node>(nodes_).subspan(node.child_begin, node.child_count);
  }
  std::size_t node_count() const noexcept { return nodes_.size(); }

 private:
  std::uint64_t count_from(const Node& node, std::span<const ItemId> query,
                           std::size_t matched) const;

  std::vector<Node> nodes_;
  std::vector<ItemId> run_items_;
};

}  // namespace iim
