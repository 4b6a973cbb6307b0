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

#include "iim/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "iim/error.hpp"

namespace iim {
namespace {

constexpr const char* kHeader = "rank\tinterestingness\tpi\tsupport\tusage\titems";

std::string fixed(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

template <typename T>
T parse_number(const std::string& field, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad value '" + field + "'");
  return value;
}

}  // namespace

void write_ranked_tsv(std::ostream& out, std::span<const RankedItemset> ranked) {
  out << kHeader << '\n';
  std::size_t rank = 0;
  for (const auto& r : ranked) {
    out << ++rank << '\t' << fixed(r.interestingness) << '\t' << fixed(r.pi) << '\t' << r.support
        << '\t' << r.usage << '\t';
    bool first = true;
    for (ItemId item : r.itemset.items()) {
      if (!first) out << ' ';
      out << item;
      first = false;
    }
    out << '\n';
  }
}

void save_ranked_tsv(const std::filesystem::path& path, std::span<const RankedItemset> ranked) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  write_ranked_tsv(out, ranked);
  if (!out) fail(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

std::vector<RankedItemset> read_ranked_tsv(std::istream& in) {
  std::vector<RankedItemset> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kHeader) fail(ErrorCode::kParse, "line 1: unexpected ranked TSV header");
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 6)
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 6 columns");
    std::vector<ItemId> items;
    std::istringstream item_stream(fields[5]);
    std::string token;
    while (item_stream >> token) items.push_back(parse_number<ItemId>(token, line_no));
    if (items.empty()) fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": no items");
    RankedItemset r{Itemset(std::move(items))};
    r.interestingness = parse_number<double>(fields[1], line_no);
    r.pi = parse_number<double>(fields[2], line_no);
    r.support = parse_number<std::uint64_t>(fields[3], line_no);
    r.usage = parse_number<std::uint64_t>(fields[4], line_no);
    out.push_back(std::move(r));
  }
  if (line_no == 0) fail(ErrorCode::kParse, "ranked TSV is empty");
  return out;
}

std::vector<RankedItemset> load_ranked_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return read_ranked_tsv(in);
}

std::vector<RankedItemset> without_singletons(std::span<const RankedItemset> ranked) {
  std::vector<RankedItemset> out;
  for (const auto& r : ranked)
    if (!r.itemset.is_singleton()) out.push_back(r);
  return out;
}

void write_pr_report(std::ostream& out, const PrCurve& curve) {
  out << "k\tprecision\trecall\n";
  for (const auto& p : curve.points)
    out << p.k << '\t' << fixed(p.precision) << '\t' << fixed(p.recall) << '\n';
  out << "\nrecall\tinterpolated_precision\n";
  for (std::size_t level = 0; level < curve.interpolated.size(); ++level)
    out << fixed(static_cast<double>(level) / 10.0, 1) << '\t' << fixed(curve.interpolated[level])
        << '\n';
}

void write_iid_report(std::ostream& out, const IidResult& iid) {
  out << "top\tused\tiid\n" << iid.requested << '\t' << iid.used << '\t' << fixed(iid.value) << '\n';
}

}  // namespace iim
