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

#include "iim/transaction_db.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "iim/error.hpp"

namespace iim {

TransactionDb TransactionDb::from_transactions(std::span<const Transaction> raw) {
  std::unordered_map<ItemId, std::uint64_t> counts;
  for (const auto& t : raw)
    for (ItemId item : t.items()) ++counts[item];

  std::vector<std::pair<ItemId, std::uint64_t>> order(counts.begin(), counts.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  TransactionDb db;
  db.original_ids_.reserve(order.size());
  for (const auto& [item, count] : order) {
    db.dense_of_.emplace(item, static_cast<ItemId>(db.original_ids_.size()));
    db.original_ids_.push_back(item);
  }

  db.tids_.resize(order.size());
  for (std::size_t d = 0; d < order.size(); ++d) db.tids_[d].reserve(order[d].second);

  db.transactions_.reserve(raw.size());
  std::vector<ItemId> dense;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    dense.clear();
    for (ItemId item : raw[j].items()) dense.push_back(db.dense_of_.at(item));
    db.transactions_.emplace_back(dense);
    for (ItemId d : db.transactions_.back().items())
      db.tids_[d].push_back(static_cast<std::uint32_t>(j));
    db.occurrences_ += dense.size();
  }
  return db;
}

std::optional<ItemId> TransactionDb::dense_id(ItemId original) const {
  auto it = dense_of_.find(original);
  if (it == dense_of_.end()) return std::nullopt;
  return it->second;
}

Itemset TransactionDb::to_original(const Itemset& dense) const {
  std::vector<ItemId> out;
  out.reserve(dense.size());
  for (ItemId d : dense.items()) out.push_back(original_ids_.at(d));
  return Itemset(std::move(out));
}

std::optional<Itemset> TransactionDb::to_dense(const Itemset& original) const {
  std::vector<ItemId> out;
  out.reserve(original.size());
  for (ItemId item : original.items()) {
    auto d = dense_id(item);
    if (!d) return std::nullopt;
    out.push_back(*d);
  }
  return Itemset(std::move(out));
}

Transaction TransactionDb::original_transaction(std::size_t j) const {
  std::vector<ItemId> out;
  for (ItemId d : transactions_.at(j).items()) out.push_back(original_ids_[d]);
  return Transaction(std::move(out));
}

std::vector<std::uint32_t> TransactionDb::supporting(const Itemset& dense) const {
  for (ItemId d : dense.items())
    if (d >= tids_.size()) return {};

  // Intersect tid lists, rarest first.
  std::vector<ItemId> by_rarity(dense.items().begin(), dense.items().end());
  std::sort(by_rarity.begin(), by_rarity.end(), [&](ItemId a, ItemId b) {
    return tids_[a].size() < tids_[b].size();
  });
  std::vector<std::uint32_t> result(tids_[by_rarity[0]].begin(),
                                    tids_[by_rarity[0]].end());
  std::vector<std::uint32_t> scratch;
  for (std::size_t k = 1; k < by_rarity.size() && !result.empty(); ++k) {
    const auto& other = tids_[by_rarity[k]];
    scratch.clear();
    std::set_intersection(result.begin(), result.end(), other.begin(), other.end(),
                          std::back_inserter(scratch));
    result.swap(scratch);
  }
  return result;
}

std::vector<Transaction> parse_fimi(std::istream& in) {
  std::vector<Transaction> out;
  std::string line;
  std::vector<ItemId> items;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    items.clear();
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p == end) break;
      const char* token = p;
      while (p < end && *p != ' ' && *p != '\t' && *p != '\r') ++p;
      ItemId value = 0;
      auto [ptr, ec] = std::from_chars(token, p, value);
      if (ec != std::errc() || ptr != p) {
        fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                    ": invalid item '" + std::string(token, p) + "'");
      }
      items.push_back(value);
    }
    out.emplace_back(items);
  }
  if (in.bad()) fail(ErrorCode::kIo, "read error");
  return out;
}

TransactionDb load_fimi(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  auto raw = parse_fimi(in);
  return TransactionDb::from_transactions(raw);
}

void write_fimi(std::ostream& out, std::span<const Transaction> transactions) {
  for (const auto& t : transactions) {
    bool first = true;
    for (ItemId item : t.items()) {
      if (!first) out << ' ';
      out << item;
      first = false;
    }
    out << '\n';
  }
}

void write_fimi(std::ostream& out, const TransactionDb& db) {
  for (std::size_t j = 0; j < db.size(); ++j) {
    auto t = db.original_transaction(j);
    write_fimi(out, std::span<const Transaction>(&t, 1));
  }
}

void write_fimi(const std::filesystem::path& path, const TransactionDb& db) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  write_fimi(out, db);
  if (!out) fail(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

}  // namespace iim
