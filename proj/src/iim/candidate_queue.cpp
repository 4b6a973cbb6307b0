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

#include "iim/candidate_queue.hpp"

#include <algorithm>

#include "iim/error.hpp"

namespace iim {

CandidateQueue::CandidateQueue(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) fail(ErrorCode::kInvalidArgument, "queue capacity must be at least 1");
}

std::vector<std::size_t> CandidateQueue::rank_by_support(const ItemsetModel& model) {
  std::vector<std::size_t> order(model.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (model[a].support != model[b].support) return model[a].support > model[b].support;
    return model[a].itemset < model[b].itemset;
  });
  return order;
}

std::uint64_t CandidateQueue::cached_support(const Itemset& s, const PrefixTree& index) {
  auto it = support_cache_.find(s);
  if (it != support_cache_.end()) return it->second;
  const std::uint64_t support = index.support(s);
  support_cache_.emplace(s, support);
  return support;
}

void CandidateQueue::rebuild(const ItemsetModel& model, const PrefixTree& index) {
  ++rebuilds_;
  heap_.clear();
  built_for_generation_ = model.generation();

  const auto order = rank_by_support(model);
  std::unordered_set<Itemset, ItemsetHash> queued;
  std::uint64_t sequence = 0;
  for (std::size_t a = 0; a < order.size() && heap_.size() < capacity_; ++a) {
    const Itemset& first = model[order[a]].itemset;
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      Itemset candidate = first.union_with(model[order[b]].itemset);
      if (model.contains(candidate) || rejected_.contains(candidate) || queued.contains(candidate))
        continue;
      const std::uint64_t support = cached_support(candidate, index);
      // A candidate no transaction supports can never be used, so it would
      // only add its absence cost; it is left out of the queue.
      if (support == 0) continue;
      queued.insert(candidate);
      heap_.push_back(Slot{support, sequence++, std::move(candidate)});
      if (heap_.size() == capacity_) break;
    }
  }
  std::make_heap(heap_.begin(), heap_.end(), SlotLess{});
}

std::optional<CandidateQueue::Candidate> CandidateQueue::next(const ItemsetModel& model,
                                                              const PrefixTree& index) {
  if (model.empty()) fail(ErrorCode::kInvalidArgument, "candidate generation needs a non-empty model");
  bool fresh = false;
  if (built_for_generation_ != model.generation()) {
    rebuild(model, index);
    fresh = true;
  }
  for (;;) {
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), SlotLess{});
      Slot slot = std::move(heap_.back());
      heap_.pop_back();
      if (rejected_.contains(slot.itemset) || model.contains(slot.itemset)) continue;
      return Candidate{std::move(slot.itemset), slot.support};
    }
    if (fresh) return std::nullopt;
    rebuild(model, index);
    fresh = true;
  }
}

void CandidateQueue::reject(const Itemset& candidate) { rejected_.insert(candidate); }

}  // namespace iim
