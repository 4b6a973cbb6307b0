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
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iim/itemset.hpp"

namespace iim {

// Log terms are evaluated at min(max(pi, eps), 1 - eps) so that pi in {0, 1}
// still yields a finite objective.
inline constexpr double kProbabilityFloor = 1e-12;

double clamp_probability(double pi) noexcept;
// -ln(clamped pi): the set-cover weight of an itemset.
double selection_weight(double pi) noexcept;
// -ln(1 - clamped pi): the cost of leaving an itemset unused.
double absence_weight(double pi) noexcept;

struct ModelEntry {
  Itemset itemset;
  double pi = 0.0;
  std::uint64_t support = 0;
};

// The set of itemsets with their Bernoulli probabilities and cached supports.
// Entries are addressed by a stable index until the set is modified.
class ItemsetModel {
 public:
  ItemsetModel() = default;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const ModelEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const ModelEntry> entries() const noexcept { return entries_; }

  std::optional<std::size_t> find(const Itemset& s) const;
  bool contains(const Itemset& s) const { return find(s).has_value(); }

  std::size_t add(Itemset s, double pi, std::uint64_t support = 0);
  void set_pi(std::size_t i, double pi);
  void set_support(std::size_t i, std::uint64_t support) { entries_[i].support = support; }

  // Keeps entries with keep[i] true; returns old index -> new index
  // (nullopt for removed entries).
  std::vector<std::optional<std::size_t>> retain(const std::vector<bool>& keep);

  // Bumped whenever the itemset set changes; restored by restore().
  std::uint64_t generation() const noexcept { return generation_; }

  struct Snapshot {
    std::size_t size;
    std::vector<double> pis;
    std::uint64_t generation;
  };
  // Valid only while the model is modified through add()/set_pi() since.
  Snapshot snapshot() const;
  void restore(const Snapshot& snap);

  // Itemsets expressed in a different id space; entry order is preserved.
  template <typename Map>
  ItemsetModel remapped(Map&& map) const {
    ItemsetModel out;
    out.universe_ = universe_;
    for (const auto& e : entries_) {
      std::vector<ItemId> items;
      items.reserve(e.itemset.size());
      for (ItemId item : e.itemset.items()) items.push_back(map(item));
      out.add(Itemset(std::move(items)), e.pi, e.support);
    }
    return out;
  }

  // Size of the item universe the itemsets are drawn from (ids < universe).
  std::uint32_t universe() const noexcept { return universe_; }
  void set_universe(std::uint32_t n) noexcept { universe_ = n; }

 private:
  std::vector<ModelEntry> entries_;
  std::unordered_map<Itemset, std::size_t, ItemsetHash> index_;
  std::uint64_t generation_ = 0;
  std::uint32_t universe_ = 0;
};

// Negative log-probability of (transaction, z) where z selects exactly the
// entries in `chosen`: sum of -ln pi over chosen plus -ln(1 - pi) over every
// other entry. Throws Error(kInvalidArgument) if a chosen itemset is not a
// subset of the transaction, an index repeats, or the union misses an item.
double objective_cost(const ItemsetModel& model, const Transaction& transaction,
                      std::span<const std::size_t> chosen);

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Independent random stream for (seed, stream) pairs.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream);

struct Sample {
  Transaction transaction;
  std::vector<std::size_t> chosen;  // entries whose z fired, ascending
};

// Draws z_S ~ Bernoulli(pi_S) for each entry and returns the union.
Sample sample_transaction(const ItemsetModel& model, std::mt19937_64& rng);

// JSON: {"itemsets": [{"items": [int...], "pi": float}...], "universe": int}
ItemsetModel read_model_json(std::istream& in);
ItemsetModel load_model_json(const std::filesystem::path& path);
void write_model_json(std::ostream& out, const ItemsetModel& model);
void save_model_json(const std::filesystem::path& path, const ItemsetModel& model);

// Same itemsets with identical probabilities, in any order.
bool same_itemsets_and_pi(const ItemsetModel& a, const ItemsetModel& b);

}  // namespace iim
