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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "iim/itemset.hpp"

namespace iim {

// The transaction database. Items are remapped to dense ids 0..n-1 in
// decreasing-support order (ties by ascending original id); original ids are
// kept for output. Transactions are deduplicated within a line but never
// aggregated across lines, and empty transactions are retained.
class TransactionDb {
 public:
  TransactionDb() = default;

  // Builds a database from transactions expressed in original item ids.
  static TransactionDb from_transactions(std::span<const Transaction> raw);

  std::size_t size() const noexcept { return transactions_.size(); }
  bool empty() const noexcept { return transactions_.empty(); }
  std::size_t item_count() const noexcept { return original_ids_.size(); }

  // Dense-id view.
  const Transaction& operator[](std::size_t j) const { return transactions_[j]; }
  std::span<const Transaction> transactions() const noexcept { return transactions_; }
  std::uint64_t item_support(ItemId dense) const { return tids_[dense].size(); }

  ItemId original_id(ItemId dense) const { return original_ids_[dense]; }
  std::optional<ItemId> dense_id(ItemId original) const;
  Itemset to_original(const Itemset& dense) const;
  // nullopt when some item never occurs in the database.
  std::optional<Itemset> to_dense(const Itemset& original) const;
  Transaction original_transaction(std::size_t j) const;

  // Indices of transactions containing every item of `dense`, ascending.
  std::vector<std::uint32_t> supporting(const Itemset& dense) const;
  std::span<const std::uint32_t> item_tids(ItemId dense) const { return tids_[dense]; }

  std::uint64_t total_occurrences() const noexcept { return occurrences_; }

 private:
  std::vector<Transaction> transactions_;
  std::vector<ItemId> original_ids_;
  std::unordered_map<ItemId, ItemId> dense_of_;
  std::vector<std::vector<std::uint32_t>> tids_;
  std::uint64_t occurrences_ = 0;
};

// FIMI: one transaction per line, whitespace-separated non-negative integers.
// Blank lines are empty transactions. Throws Error(kParse) naming the line.
std::vector<Transaction> parse_fimi(std::istream& in);
TransactionDb load_fimi(const std::filesystem::path& path);

void write_fimi(std::ostream& out, std::span<const Transaction> transactions);
// Writes the database back in original ids.
void write_fimi(std::ostream& out, const TransactionDb& db);
void write_fimi(const std::filesystem::path& path, const TransactionDb& db);

}  // namespace iim
