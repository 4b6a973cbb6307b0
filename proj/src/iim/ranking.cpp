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

#include "iim/ranking.hpp"

#include <algorithm>

#include "iim/error.hpp"

namespace iim {

double interestingness(std::uint64_t usage, std::uint64_t support) {
  if (usage > support) fail(ErrorCode::kInvalidArgument, "usage exceeds support");
  if (support == 0) return 0.0;
  return static_cast<double>(usage) / static_cast<double>(support);
}

std::vector<RankedItemset> rank(const ItemsetModel& model, const CoveringState& coverings,
                                RankOrder order) {
  const auto usage = usage_counts(coverings, model.size());
  std::vector<RankedItemset> ranked;
  ranked.reserve(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& e = model[i];
    ranked.push_back({e.itemset, interestingness(usage[i], e.support), e.pi, e.support, usage[i]});
  }
  auto by_interest = [](const RankedItemset& a, const RankedItemset& b) {
    if (a.interestingness != b.interestingness) return a.interestingness > b.interestingness;
    if (a.pi != b.pi) return a.pi > b.pi;
    return a.itemset < b.itemset;
  };
  auto by_pi = [](const RankedItemset& a, const RankedItemset& b) {
    if (a.pi != b.pi) return a.pi > b.pi;
    if (a.interestingness != b.interestingness) return a.interestingness > b.interestingness;
    return a.itemset < b.itemset;
  };
  if (order == RankOrder::kInterestingness)
    std::sort(ranked.begin(), ranked.end(), by_interest);
  else
    std::sort(ranked.begin(), ranked.end(), by_pi);
  return ranked;
}

}  // namespace iim
