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
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "iim/itemset.hpp"
#include "iim/model.hpp"
#include "iim/prefix_tree.hpp"

namespace iim {

// Support-ordered queue of pairwise unions of model itemsets, plus the set of
// candidates already rejected. The queue is rebuilt whenever the model's
// itemset set changes (tracked by ItemsetModel::generation) or it runs dry.
class CandidateQueue {
 public:
  struct Candidate {
    Itemset itemset;
    std::uint64_t support;
  };

  explicit CandidateQueue(std::size_t capacity);

  // Next candidate of highest support, or nullopt when a fresh rebuild still
  // yields nothing. Never returns a model itemset or a rejected one.
  std::optional<Candidate> next(const ItemsetModel& model, const PrefixTree& index);

  void reject(const Itemset& candidate);
  bool is_rejected(const Itemset& candidate) const { return rejected_.contains(candidate); }
  std::size_t rejected_count() const noexcept { return rejected_.size(); }

  std::size_t size() const noexcept { return heap_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t rebuild_count() const noexcept { return rebuilds_; }

  // Pair enumeration order used by a rebuild: model entries sorted by
  // decreasing support (ties by itemset), pairs (i, j) with i < j taken in
  // lexicographic order of ranks.
  static std::vector<std::size_t> rank_by_support(const ItemsetModel& model);

 private:
  struct Slot {
    std::uint64_t support;
    std::uint64_t sequence;  // enumeration order, breaks support ties
    Itemset itemset;
  };
  struct SlotLess {
    bool operator()(const Slot& a, const Slot& b) const {
      if (a.support != b.support) return a.support < b.support;
      return a.sequence > b.sequence;
    }
  };

  void rebuild(const ItemsetModel& model, const PrefixTree& index);
  std::uint64_t cached_support(const Itemset& s, const PrefixTree& index);

  std::size_t capacity_;
  std::vector<Slot> heap_;
  std::optional<std::uint64_t> built_for_generation_;
  std::unordered_set<Itemset, ItemsetHash> rejected_;
  std::unordered_map<Itemset, std::uint64_t, ItemsetHash> support_cache_;
  std::size_t rebuilds_ = 0;
};

}  // namespace iim
