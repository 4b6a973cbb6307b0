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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace iim {

using ItemId = std::uint32_t;

// A non-empty set of items kept in canonical (strictly increasing) order, so
// equal memberships compare and hash equal.
class Itemset {
 public:
  explicit Itemset(std::vector<ItemId> items);
  Itemset(std::initializer_list<ItemId> items)
      : Itemset(std::vector<ItemId>(items)) {}

  // Skips canonicalisation; `items` must already be sorted, unique, non-empty.
  static Itemset from_sorted(std::vector<ItemId> items);

  std::span<const ItemId> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool is_singleton() const noexcept { return items_.size() == 1; }
  ItemId front() const noexcept { return items_.front(); }

  bool contains(ItemId item) const noexcept;
  // `sorted` must be strictly increasing.
  bool is_subset_of(std::span<const ItemId> sorted) const noexcept;
  Itemset union_with(const Itemset& other) const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) {
    return a.items_ <=> b.items_;
  }

 private:
  struct Trusted {};
  Itemset(Trusted, std::vector<ItemId> items) : items_(std::move(items)) {}

  std::vector<ItemId> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept { return s.hash(); }
};

// Sorted, duplicate-free item list. Unlike Itemset it may be empty.
class Transaction {
 public:
  Transaction() = default;
  explicit Transaction(std::vector<ItemId> items);
  Transaction(std::initializer_list<ItemId> items)
      : Transaction(std::vector<ItemId>(items)) {}

  std::span<const ItemId> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(ItemId item) const noexcept;
  bool supports(const Itemset& s) const noexcept {
    return s.is_subset_of(items_);
  }

  friend bool operator==(const Transaction&, const Transaction&) = default;

 private:
  std::vector<ItemId> items_;
};

// |A △ B| for two canonical itemsets.
std::size_t symmetric_difference_size(const Itemset& a, const Itemset& b);

}  // namespace iim

template <>
struct std::hash<iim::Itemset> {
  std::size_t operator()(const iim::Itemset& s) const noexcept {
    return s.hash();
  }
};
