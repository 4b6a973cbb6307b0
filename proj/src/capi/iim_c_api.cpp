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

#include "iim/iim.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "iim/error.hpp"
#include "iim/evaluation.hpp"
#include "iim/learning.hpp"
#include "iim/model.hpp"
#include "iim/ranking.hpp"
#include "iim/report_io.hpp"
#include "iim/transaction_db.hpp"

struct iim_db {
  iim::TransactionDb db;
};

struct iim_model {
  iim::ItemsetModel model;
};

struct iim_result {
  iim::ItemsetModel model;  // input ids
  iim::MiningReport report;
  std::vector<iim::RankedItemset> by_interest;
  std::vector<iim::RankedItemset> by_pi;
};

struct iim_itemsets {
  std::vector<iim::Itemset> itemsets;
};

struct iim_pr_curve {
  iim::PrCurve curve;
};

namespace {

thread_local std::string last_error;

iim_status to_status(iim::ErrorCode code) {
  switch (code) {
    case iim::ErrorCode::kInvalidArgument: return IIM_ERR_INVALID_ARGUMENT;
    case iim::ErrorCode::kIo: return IIM_ERR_IO;
    case iim::ErrorCode::kParse: return IIM_ERR_PARSE;
    case iim::ErrorCode::kEmptyDatabase: return IIM_ERR_EMPTY_DATABASE;
    case iim::ErrorCode::kInfeasible: return IIM_ERR_INFEASIBLE;
  }
  return IIM_ERR_INTERNAL;
}

iim_status failure(iim_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
iim_status guarded(Body&& body) {
  try {
    body();
    return IIM_OK;
  } catch (const iim::Error& e) {
    return failure(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return failure(IIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return failure(IIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return failure(IIM_ERR_INTERNAL, "unknown error");
  }
}

#define IIM_REQUIRE(cond)                                                   \
  do {                                                                      \
    if (!(cond)) return failure(IIM_ERR_INVALID_ARGUMENT, #cond " failed"); \
  } while (0)

iim::MiningConfig to_config(const iim_config& c) {
  iim::MiningConfig config;
  config.max_iterations = c.max_iterations;
  config.queue_capacity = static_cast<std::size_t>(c.queue_capacity);
  config.em_tolerance = c.em_tolerance;
  config.em_max_iterations = c.em_max_iterations;
  config.em_every = c.em_every;
  config.threads = c.threads;
  config.seed = c.seed;
  return config;
}

std::vector<iim::Itemset> itemsets_of(std::span<const iim::RankedItemset> ranked) {
  std::vector<iim::Itemset> out;
  out.reserve(ranked.size());
  for (const auto& r : ranked) out.push_back(r.itemset);
  return out;
}

}  // namespace

extern "C" {

const char* iim_status_name(iim_status status) {
  switch (status) {
    case IIM_OK: return "ok";
    case IIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case IIM_ERR_IO: return "I/O error";
    case IIM_ERR_PARSE: return "parse error";
    case IIM_ERR_EMPTY_DATABASE: return "empty database";
    case IIM_ERR_INFEASIBLE: return "infeasible covering";
    case IIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* iim_last_error(void) { return last_error.c_str(); }

iim_status iim_db_load_fimi(const char* path, iim_db** out) {
  IIM_REQUIRE(path && out);
  return guarded([&] { *out = new iim_db{iim::load_fimi(path)}; });
}

iim_status iim_db_from_transactions(const uint32_t* items, const size_t* lengths, size_t count,
                                    iim_db** out) {
  IIM_REQUIRE(out && (count == 0 || lengths));
  return guarded([&] {
    std::vector<iim::Transaction> raw;
    raw.reserve(count);
    std::size_t offset = 0;
    for (std::size_t j = 0; j < count; ++j) {
      if (lengths[j] > 0 && !items) iim::fail(iim::ErrorCode::kInvalidArgument, "items is NULL");
      raw.emplace_back(std::vector<iim::ItemId>(items + offset, items + offset + lengths[j]));
      offset += lengths[j];
    }
    *out = new iim_db{iim::TransactionDb::from_transactions(raw)};
  });
}

iim_status iim_db_write_fimi(const iim_db* db, const char* path) {
  IIM_REQUIRE(db && path);
  return guarded([&] { iim::write_fimi(std::filesystem::path(path), db->db); });
}

size_t iim_db_transaction_count(const iim_db* db) { return db ? db->db.size() : 0; }

size_t iim_db_item_count(const iim_db* db) { return db ? db->db.item_count() : 0; }

iim_status iim_db_support(const iim_db* db, const uint32_t* items, size_t item_count,
                          uint64_t* out) {
  IIM_REQUIRE(db && items && item_count > 0 && out);
  return guarded([&] {
    iim::Itemset original(std::vector<iim::ItemId>(items, items + item_count));
    auto dense = db->db.to_dense(original);
    *out = dense ? db->db.supporting(*dense).size() : 0;
  });
}

void iim_db_free(iim_db* db) { delete db; }

iim_status iim_model_load_json(const char* path, iim_model** out) {
  IIM_REQUIRE(path && out);
  return guarded([&] { *out = new iim_model{iim::load_model_json(path)}; });
}

iim_status iim_model_write_json(const iim_model* model, const char* path) {
  IIM_REQUIRE(model && path);
  return guarded([&] { iim::save_model_json(path, model->model); });
}

size_t iim_model_size(const iim_model* model) { return model ? model->model.size() : 0; }

void iim_model_free(iim_model* model) { delete model; }

iim_status iim_synthesize(const iim_model* model, size_t transactions, uint64_t seed,
                          uint32_t threads, iim_db** out) {
  IIM_REQUIRE(model && out && transactions > 0);
  return guarded([&] {
    *out = new iim_db{iim::generate_db(model->model, transactions, seed, threads)};
  });
}

void iim_config_init(iim_config* config) {
  if (!config) return;
  const iim::MiningConfig defaults;
  config->max_iterations = defaults.max_iterations;
  config->queue_capacity = defaults.queue_capacity;
  config->em_tolerance = defaults.em_tolerance;
  config->em_max_iterations = defaults.em_max_iterations;
  config->em_every = defaults.em_every;
  config->threads = defaults.threads;
  config->seed = defaults.seed;
}

iim_status iim_mine(const iim_db* db, const iim_config* config, iim_result** out) {
  IIM_REQUIRE(db && out);
  return guarded([&] {
    iim_config c;
    iim_config_init(&c);
    if (config) c = *config;
    auto mined = iim::iim_mine(db->db, to_config(c));

    auto result = std::make_unique<iim_result>();
    const auto& source = db->db;
    result->model = mined.model.remapped([&](iim::ItemId d) { return source.original_id(d); });
    iim::ItemId max_id = 0;
    for (std::size_t d = 0; d < source.item_count(); ++d)
      max_id = std::max(max_id, source.original_id(static_cast<iim::ItemId>(d)));
    result->model.set_universe(source.item_count() == 0 ? 0 : max_id + 1);
    result->report = mined.report;
    result->by_interest =
        iim::rank(result->model, mined.coverings, iim::RankOrder::kInterestingness);
    result->by_pi = iim::rank(result->model, mined.coverings, iim::RankOrder::kProbability);
    *out = result.release();
  });
}

void iim_result_free(iim_result* result) { delete result; }

iim_status iim_result_report(const iim_result* result, iim_report* out) {
  IIM_REQUIRE(result && out);
  const auto& r = result->report;
  out->iterations = r.iterations;
  out->candidates_proposed = r.proposed;
  out->candidates_accepted = r.accepted;
  out->candidates_rejected = r.rejected;
  out->hard_em_runs = r.hard_em_runs;
  out->itemsets = r.itemsets;
  out->non_singletons = r.non_singletons;
  out->final_cost = r.final_cost;
  out->seconds_setup = r.seconds_setup;
  out->seconds_structural = r.seconds_structural;
  out->seconds_hard_em = r.seconds_hard_em;
  out->seconds_total = r.seconds_total;
  return IIM_OK;
}

size_t iim_result_size(const iim_result* result) {
  return result ? result->by_interest.size() : 0;
}

iim_status iim_result_get(const iim_result* result, size_t rank, iim_ranked_itemset* out) {
  IIM_REQUIRE(result && out);
  if (rank >= result->by_interest.size())
    return failure(IIM_ERR_INVALID_ARGUMENT, "rank out of range");
  const auto& r = result->by_interest[rank];
  out->items = r.itemset.items().data();
  out->item_count = r.itemset.size();
  out->interestingness = r.interestingness;
  out->pi = r.pi;
  out->support = r.support;
  out->usage = r.usage;
  return IIM_OK;
}

iim_status iim_result_write_tsv(const iim_result* result, const char* path,
                                int include_singletons, iim_rank_order order) {
  IIM_REQUIRE(result && path);
  IIM_REQUIRE(order == IIM_RANK_INTERESTINGNESS || order == IIM_RANK_PROBABILITY);
  return guarded([&] {
    const auto& all = order == IIM_RANK_INTERESTINGNESS ? result->by_interest : result->by_pi;
    const auto ranked = include_singletons ? all : iim::without_singletons(all);
    if (std::string(path) == "-") {
      iim::write_ranked_tsv(std::cout, ranked);
      std::cout.flush();
    } else {
      iim::save_ranked_tsv(path, ranked);
    }
  });
}

iim_status iim_result_model(const iim_result* result, iim_model** out) {
  IIM_REQUIRE(result && out);
  return guarded([&] { *out = new iim_model{result->model}; });
}

iim_status iim_itemsets_load_tsv(const char* path, int include_singletons, iim_itemsets** out) {
  IIM_REQUIRE(path && out);
  return guarded([&] {
    auto ranked = iim::load_ranked_tsv(path);
    if (!include_singletons) ranked = iim::without_singletons(ranked);
    *out = new iim_itemsets{itemsets_of(ranked)};
  });
}

iim_status iim_itemsets_from_model(const iim_model* model, int include_singletons,
                                   iim_itemsets** out) {
  IIM_REQUIRE(model && out);
  return guarded([&] {
    auto list = std::make_unique<iim_itemsets>();
    for (const auto& e : model->model.entries())
      if (include_singletons || !e.itemset.is_singleton()) list->itemsets.push_back(e.itemset);
    *out = list.release();
  });
}

size_t iim_itemsets_size(const iim_itemsets* list) { return list ? list->itemsets.size() : 0; }

void iim_itemsets_free(iim_itemsets* list) { delete list; }

iim_status iim_eval_pr(const iim_itemsets* mined, const iim_itemsets* truth, iim_pr_curve** out) {
  IIM_REQUIRE(mined && truth && out);
  return guarded(
      [&] { *out = new iim_pr_curve{iim::precision_recall(mined->itemsets, truth->itemsets)}; });
}

size_t iim_pr_curve_size(const iim_pr_curve* curve) {
  return curve ? curve->curve.points.size() : 0;
}

iim_status iim_pr_curve_point(const iim_pr_curve* curve, size_t index, iim_pr_point* out) {
  IIM_REQUIRE(curve && out);
  if (index >= curve->curve.points.size())
    return failure(IIM_ERR_INVALID_ARGUMENT, "point index out of range");
  const auto& p = curve->curve.points[index];
  *out = iim_pr_point{p.k, p.precision, p.recall};
  return IIM_OK;
}

iim_status iim_pr_curve_interpolated(const iim_pr_curve* curve, double out[11]) {
  IIM_REQUIRE(curve && out);
  for (std::size_t i = 0; i < iim::kInterpolationPoints; ++i) out[i] = curve->curve.interpolated[i];
  return IIM_OK;
}

iim_status iim_pr_curve_write(const iim_pr_curve* curve, const char* path) {
  IIM_REQUIRE(curve);
  return guarded([&] {
    if (!path || std::string(path) == "-") {
      iim::write_pr_report(std::cout, curve->curve);
      std::cout.flush();
      return;
    }
    std::ofstream out(path);
    if (!out) iim::fail(iim::ErrorCode::kIo, std::string("cannot write '") + path + "'");
    iim::write_pr_report(out, curve->curve);
  });
}

void iim_pr_curve_free(iim_pr_curve* curve) { delete curve; }

iim_status iim_eval_iid(const iim_itemsets* list, size_t top, double* iid, size_t* used) {
  IIM_REQUIRE(list && iid);
  return guarded([&] {
    const auto result = iim::inter_itemset_distance(list->itemsets, top);
    *iid = result.value;
    if (used) *used = result.used;
  });
}

}  // extern "C"
