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
#include <vector>

#include "iim/learning.hpp"
#include "iim/model.hpp"

namespace iim {

struct RankedItemset {
  Itemset itemset;
  double interestingness = 0.0;
  double pi = 0.0;
  std::uint64_t support = 0;
  std::uint64_t usage = 0;
};

// usage / support: the fraction of supporting transactions the itemset is
// used to explain. Throws Error(kInvalidArgument) if usage > support.
// An itemset with no support (and hence no usage) scores 0.
double interestingness(std::uint64_t usage, std::uint64_t support);

enum class RankOrder {
  kInterestingness,  // interestingness, then pi, then itemset
  kProbability,      // pi, then interestingness, then itemset
};

// Ranks every model entry. Usage is counted from the coverings; supports are
// the model's cached supports.
std::vector<RankedItemset> rank(const ItemsetModel& model, const CoveringState& coverings,
                                RankOrder order = RankOrder::kInterestingness);

}  // namespace iim
