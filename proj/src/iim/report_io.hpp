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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "iim/evaluation.hpp"
#include "iim/ranking.hpp"

namespace iim {

// Ranked TSV: a header row, then one row per itemset with columns
// rank, interestingness, pi, support, usage, items (space-separated).
// Ranks are 1..N in output order.
void write_ranked_tsv(std::ostream& out, std::span<const RankedItemset> ranked);
void save_ranked_tsv(const std::filesystem::path& path, std::span<const RankedItemset> ranked);

// Rows in file order. Throws Error(kParse) on malformed rows.
std::vector<RankedItemset> read_ranked_tsv(std::istream& in);
std::vector<RankedItemset> load_ranked_tsv(const std::filesystem::path& path);

// Removes singletons, keeping order.
std::vector<RankedItemset> without_singletons(std::span<const RankedItemset> ranked);

// PR table: "k precision recall" rows, a blank line, then the 11-row
// interpolated block "recall interpolated_precision".
void write_pr_report(std::ostream& out, const PrCurve& curve);

// Header plus one row: top, used, iid.
void write_iid_report(std::ostream& out, const IidResult& iid);

}  // namespace iim
