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

#include "iim/prefix_tree.hpp"

#include <map>
#include <memory>

namespace iim {
namespace {

// Uncompressed build tree.
struct BuildNode {
  ItemId item = 0;
  std::uint64_t count = 0;
  std::map<ItemId, std::unique_ptr<BuildNode>> children;
};

}  // namespace

PrefixTree::PrefixTree(const TransactionDb& db) {
  BuildNode root;
  for (const auto& t : db.transactions()) {
    BuildNode* node = &root;
    ++node->count;
    for (ItemId item : t.items()) {
      auto& child = node->children[item];
      if (!child) {
        child = std::make_unique<BuildNode>();
        child->item = item;
      }
      node = child.get();
      ++node->count;
    }
  }

  // Breadth-first flattening so that each node's children are contiguous.
  nodes_.push_back(Node{0, 0, root.count, 0, 0});
  std::vector<const BuildNode*> queue{&root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const BuildNode* src = queue[head];
    nodes_[head].child_begin = static_cast<std::uint32_t>(nodes_.size());
    nodes_[head].child_count = static_cast<std::uint32_t>(src->children.size());
    for (const auto& [item, child] : src->children) {
      Node node;
      node.run_begin = static_cast<std::uint32_t>(run_items_.size());
      node.count = child->count;
      // Absorb single-child descendants that no transaction ends before.
      const BuildNode* tail = child.get();
      run_items_.push_back(tail->item);
      while (tail->children.size() == 1 && tail->children.begin()->second->count == tail->count) {
        tail = tail->children.begin()->second.get();
        run_items_.push_back(tail->item);
      }
      node.run_length = static_cast<std::uint32_t>(run_items_.size() - node.run_begin);
      nodes_.push_back(node);
      queue.push_back(tail);
    }
  }
}

std::uint64_t PrefixTree::support(const Itemset& dense) const { return support(dense.items()); }

std::uint64_t PrefixTree::support(std::span<const ItemId> sorted_dense) const {
  if (nodes_.empty()) return 0;
  if (sorted_dense.empty()) return nodes_[0].count;
  return count_from(nodes_[0], sorted_dense, 0);
}

std::uint64_t PrefixTree::count_from(const Node& node, std::span<const ItemId> query,
                                     std::size_t matched) const {
  for (ItemId item : run(node)) {
    if (item == query[matched]) {
      if (++matched == query.size()) return node.count;
    } else if (item > query[matched]) {
      // Items only increase along a path, so query[matched] cannot follow.
      return 0;
    }
  }
  std::uint64_t total = 0;
  for (const Node& child : children(node)) {
    if (run_items_[child.run_begin] > query[matched]) break;
    total += count_from(child, query, matched);
  }
  return total;
}

}  // namespace iim
