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

#include "iim/itemset.hpp"

#include <algorithm>
#include <iterator>

#include "iim/error.hpp"

namespace iim {
namespace {

void canonicalize(std::vector<ItemId>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

}  // namespace

Itemset::Itemset(std::vector<ItemId> items) : items_(std::move(items)) {
  canonicalize(items_);
  if (items_.empty()) fail(ErrorCode::kInvalidArgument, "itemset must be non-empty");
}

Itemset Itemset::from_sorted(std::vector<ItemId> items) {
  return Itemset(Trusted{}, std::move(items));
}

bool Itemset::contains(ItemId item) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::is_subset_of(std::span<const ItemId> sorted) const noexcept {
  if (items_.size() > sorted.size()) return false;
  return std::includes(sorted.begin(), sorted.end(), items_.begin(), items_.end());
}

Itemset Itemset::union_with(const Itemset& other) const {
  std::vector<ItemId> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out));
  return Itemset(Trusted{}, std::move(out));
}

std::size_t Itemset::hash() const noexcept {
  // FNV-1a over the item words.
  std::uint64_t h = 14695981039346656037ull;
  for (ItemId item : items_) {
    h ^= item;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Itemset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(items_[i]);
  }
  out += '}';
  return out;
}

Transaction::Transaction(std::vector<ItemId> items) : items_(std::move(items)) {
  canonicalize(items_);
}

bool Transaction::contains(ItemId item) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), item);
}

std::size_t symmetric_difference_size(const Itemset& a, const Itemset& b) {
  auto x = a.items();
  auto y = b.items();
  std::size_t common = 0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) {
      ++common;
      ++i;
      ++j;
    } else if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return x.size() + y.size() - 2 * common;
}

}  // namespace iim
