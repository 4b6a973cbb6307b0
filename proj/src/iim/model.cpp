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

#include "iim/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include <json.hpp>

#include "iim/error.hpp"

namespace iim {

double clamp_probability(double pi) noexcept {
  return std::min(std::max(pi, kProbabilityFloor), 1.0 - kProbabilityFloor);
}

double selection_weight(double pi) noexcept { return -std::log(clamp_probability(pi)); }

double absence_weight(double pi) noexcept { return -std::log1p(-clamp_probability(pi)); }

std::optional<std::size_t> ItemsetModel::find(const Itemset& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ItemsetModel::add(Itemset s, double pi, std::uint64_t support) {
  if (!(pi >= 0.0 && pi <= 1.0))
    fail(ErrorCode::kInvalidArgument, "probability out of range for " + s.to_string());
  if (index_.contains(s))
    fail(ErrorCode::kInvalidArgument, "duplicate itemset " + s.to_string());
  const std::size_t i = entries_.size();
  index_.emplace(s, i);
  entries_.push_back(ModelEntry{std::move(s), pi, support});
  ++generation_;
  return i;
}

void ItemsetModel::set_pi(std::size_t i, double pi) {
  if (!(pi >= 0.0 && pi <= 1.0)) fail(ErrorCode::kInvalidArgument, "probability out of range");
  entries_.at(i).pi = pi;
}

std::vector<std::optional<std::size_t>> ItemsetModel::retain(const std::vector<bool>& keep) {
  std::vector<std::optional<std::size_t>> remap(entries_.size());
  std::vector<ModelEntry> kept;
  kept.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!keep[i]) continue;
    remap[i] = kept.size();
    kept.push_back(std::move(entries_[i]));
  }
  const bool changed = kept.size() != entries_.size();
  entries_ = std::move(kept);
  index_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].itemset, i);
  if (changed) ++generation_;
  return remap;
}

ItemsetModel::Snapshot ItemsetModel::snapshot() const {
  Snapshot snap{entries_.size(), {}, generation_};
  snap.pis.reserve(entries_.size());
  for (const auto& e : entries_) snap.pis.push_back(e.pi);
  return snap;
}

void ItemsetModel::restore(const Snapshot& snap) {
  while (entries_.size() > snap.size) {
    index_.erase(entries_.back().itemset);
    entries_.pop_back();
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i].pi = snap.pis[i];
  generation_ = snap.generation;
}

double objective_cost(const ItemsetModel& model, const Transaction& transaction,
                      std::span<const std::size_t> chosen) {
  std::vector<bool> selected(model.size(), false);
  std::vector<ItemId> covered;
  for (std::size_t i : chosen) {
    if (i >= model.size()) fail(ErrorCode::kInvalidArgument, "chosen index out of range");
    if (selected[i]) fail(ErrorCode::kInvalidArgument, "itemset chosen twice");
    const auto& s = model[i].itemset;
    if (!transaction.supports(s))
      fail(ErrorCode::kInvalidArgument, "chosen itemset " + s.to_string() +
                                            " is not a subset of the transaction");
    selected[i] = true;
    covered.insert(covered.end(), s.items().begin(), s.items().end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (covered.size() != transaction.size())
    fail(ErrorCode::kInvalidArgument, "chosen itemsets do not cover the transaction");

  double cost = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i)
    cost += selected[i] ? selection_weight(model[i].pi) : absence_weight(model[i].pi);
  return cost;
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Sample sample_transaction(const ItemsetModel& model, std::mt19937_64& rng) {
  Sample out;
  std::vector<ItemId> items;
  for (std::size_t i = 0; i < model.size(); ++i) {
    // One draw per entry regardless of pi keeps streams aligned across models.
    const double u = unit_uniform(rng);
    if (u < model[i].pi) {
      out.chosen.push_back(i);
      const auto s = model[i].itemset.items();
      items.insert(items.end(), s.begin(), s.end());
    }
  }
  out.transaction = Transaction(std::move(items));
  return out;
}

namespace {

ItemsetModel model_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("itemsets") || !doc["itemsets"].is_array())
    fail(ErrorCode::kParse, "model JSON must be an object with an 'itemsets' array");
  ItemsetModel model;
  ItemId max_item = 0;
  bool any = false;
  for (const auto& entry : doc["itemsets"]) {
    if (!entry.is_object() || !entry.contains("items") || !entry.contains("pi"))
      fail(ErrorCode::kParse, "each itemset needs 'items' and 'pi'");
    const auto& items_json = entry["items"];
    if (!items_json.is_array() || items_json.empty())
      fail(ErrorCode::kParse, "'items' must be a non-empty array");
    std::vector<ItemId> items;
    for (const auto& v : items_json) {
      if (!v.is_number_unsigned()) fail(ErrorCode::kParse, "item ids must be non-negative integers");
      const auto value = v.get<std::uint64_t>();
      if (value > std::numeric_limits<ItemId>::max()) fail(ErrorCode::kParse, "item id too large");
      items.push_back(static_cast<ItemId>(value));
    }
    if (!entry["pi"].is_number()) fail(ErrorCode::kParse, "'pi' must be a number");
    const double pi = entry["pi"].get<double>();
    if (!(pi >= 0.0 && pi <= 1.0)) fail(ErrorCode::kParse, "'pi' must lie in [0, 1]");
    Itemset s(std::move(items));
    if (model.contains(s)) fail(ErrorCode::kParse, "duplicate itemset " + s.to_string());
    max_item = std::max(max_item, s.items().back());
    any = true;
    std::uint64_t support = 0;
    if (entry.contains("support") && entry["support"].is_number_unsigned())
      support = entry["support"].get<std::uint64_t>();
    model.add(std::move(s), pi, support);
  }
  std::uint32_t universe = any ? max_item + 1 : 0;
  if (doc.contains("universe")) {
    if (!doc["universe"].is_number_unsigned()) fail(ErrorCode::kParse, "'universe' must be a count");
    const auto declared = doc["universe"].get<std::uint64_t>();
    if (declared < universe) fail(ErrorCode::kParse, "item id exceeds 'universe'");
    universe = static_cast<std::uint32_t>(declared);
  }
  model.set_universe(universe);
  return model;
}

}  // namespace

ItemsetModel read_model_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("malformed model JSON: ") + e.what());
  }
  return model_from_json(doc);
}

ItemsetModel load_model_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return read_model_json(in);
}

void write_model_json(std::ostream& out, const ItemsetModel& model) {
  nlohmann::json doc;
  doc["universe"] = model.universe();
  auto& list = doc["itemsets"] = nlohmann::json::array();
  for (const auto& e : model.entries()) {
    nlohmann::json entry;
    entry["items"] = std::vector<ItemId>(e.itemset.items().begin(), e.itemset.items().end());
    entry["pi"] = e.pi;
    list.push_back(std::move(entry));
  }
  out << doc.dump(1) << '\n';
}

void save_model_json(const std::filesystem::path& path, const ItemsetModel& model) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  write_model_json(out, model);
  if (!out) fail(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

bool same_itemsets_and_pi(const ItemsetModel& a, const ItemsetModel& b) {
  if (a.size() != b.size()) return false;
  for (const auto& e : a.entries()) {
    auto j = b.find(e.itemset);
    if (!j || b[*j].pi != e.pi) return false;
  }
  return true;
}

}  // namespace iim
