/*
 * Copyright 2026 The IIM Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the interesting itemset miner.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function (which accepts NULL). Every fallible call returns
 * an iim_status; on failure iim_last_error() describes the problem for the
 * calling thread until its next failing call.
 *
 * Item ids crossing this interface are always the ids used in the input
 * files.
 */

#ifndef IIM_IIM_H_
#define IIM_IIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IIM_BUILDING_LIBRARY)
#    define IIM_API __declspec(dllexport)
#  else
#    define IIM_API __declspec(dllimport)
#  endif
#else
#  define IIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iim_status {
  IIM_OK = 0,
  IIM_ERR_INVALID_ARGUMENT = 1,
  IIM_ERR_IO = 2,
  IIM_ERR_PARSE = 3,
  IIM_ERR_EMPTY_DATABASE = 4,
  IIM_ERR_INFEASIBLE = 5,
  IIM_ERR_INTERNAL = 6
} iim_status;

typedef struct iim_db iim_db;
typedef struct iim_model iim_model;
typedef struct iim_result iim_result;
typedef struct iim_itemsets iim_itemsets;
typedef struct iim_pr_curve iim_pr_curve;

IIM_API const char* iim_status_name(iim_status status);
IIM_API const char* iim_last_error(void);

/* ---- transaction databases ---------------------------------------------- */

IIM_API iim_status iim_db_load_fimi(const char* path, iim_db** out);
/* `items` holds `count` transactions back to back; `lengths[j]` is the number
 * of items of transaction j. Duplicates within a transaction are collapsed. */
IIM_API iim_status iim_db_from_transactions(const uint32_t* items, const size_t* lengths,
                                            size_t count, iim_db** out);
IIM_API iim_status iim_db_write_fimi(const iim_db* db, const char* path);
IIM_API size_t iim_db_transaction_count(const iim_db* db);
IIM_API size_t iim_db_item_count(const iim_db* db);
/* Number of transactions containing every item of the itemset (0 for items
 * that never occur). */
IIM_API iim_status iim_db_support(const iim_db* db, const uint32_t* items, size_t item_count,
                                  uint64_t* out);
IIM_API void iim_db_free(iim_db* db);

/* ---- itemset models (JSON: {"itemsets":[{"items":[..],"pi":..}],"universe":n}) */

IIM_API iim_status iim_model_load_json(const char* path, iim_model** out);
IIM_API iim_status iim_model_write_json(const iim_model* model, const char* path);
IIM_API size_t iim_model_size(const iim_model* model);
IIM_API void iim_model_free(iim_model* model);

/* Draws `transactions` independent transactions from the generative model.
 * The result depends only on (model, transactions, seed). */
IIM_API iim_status iim_synthesize(const iim_model* model, size_t transactions, uint64_t seed,
                                  uint32_t threads, iim_db** out);

/* ---- mining -------------------------------------------------------------- */

typedef struct iim_config {
  uint32_t max_iterations;    /* structural EM steps; default 1000 */
  uint64_t queue_capacity;    /* candidate queue size; default 100000 */
  double em_tolerance;        /* hard EM stop on L2 change of pi; default 1e-5 */
  uint32_t em_max_iterations; /* default 100 */
  uint32_t em_every;          /* accepted candidates between hard EM runs; default 5 */
  uint32_t threads;           /* 0 = all cores */
  uint64_t seed;              /* echoed in the report; default 0 */
} iim_config;

IIM_API void iim_config_init(iim_config* config);

IIM_API iim_status iim_mine(const iim_db* db, const iim_config* config, iim_result** out);
IIM_API void iim_result_free(iim_result* result);

typedef struct iim_report {
  uint32_t iterations;
  uint64_t candidates_proposed;
  uint64_t candidates_accepted;
  uint64_t candidates_rejected;
  uint32_t hard_em_runs;
  size_t itemsets;
  size_t non_singletons;
  double final_cost;
  double seconds_setup;
  double seconds_structural;
  double seconds_hard_em;
  double seconds_total;
} iim_report;

IIM_API iim_status iim_result_report(const iim_result* result, iim_report* out);

typedef enum iim_rank_order {
  IIM_RANK_INTERESTINGNESS = 0,
  IIM_RANK_PROBABILITY = 1
} iim_rank_order;

typedef struct iim_ranked_itemset {
  const uint32_t* items; /* owned by the result */
  size_t item_count;
  double interestingness;
  double pi;
  uint64_t support;
  uint64_t usage;
} iim_ranked_itemset;

/* Number of ranked itemsets (all model itemsets, singletons included). */
IIM_API size_t iim_result_size(const iim_result* result);
/* The itemset at 0-based position `rank` in interestingness order. */
IIM_API iim_status iim_result_get(const iim_result* result, size_t rank, iim_ranked_itemset* out);
/* `path` "-" writes to standard output. */
IIM_API iim_status iim_result_write_tsv(const iim_result* result, const char* path,
                                        int include_singletons, iim_rank_order order);
/* The mined model in input ids; release with iim_model_free. */
IIM_API iim_status iim_result_model(const iim_result* result, iim_model** out);

/* ---- evaluation ---------------------------------------------------------- */

/* Itemsets of a ranked TSV in rank order. */
IIM_API iim_status iim_itemsets_load_tsv(const char* path, int include_singletons,
                                         iim_itemsets** out);
IIM_API iim_status iim_itemsets_from_model(const iim_model* model, int include_singletons,
                                           iim_itemsets** out);
IIM_API size_t iim_itemsets_size(const iim_itemsets* list);
IIM_API void iim_itemsets_free(iim_itemsets* list);

typedef struct iim_pr_point {
  size_t k;
  double precision;
  double recall;
} iim_pr_point;

IIM_API iim_status iim_eval_pr(const iim_itemsets* mined, const iim_itemsets* truth,
                               iim_pr_curve** out);
IIM_API size_t iim_pr_curve_size(const iim_pr_curve* curve);
IIM_API iim_status iim_pr_curve_point(const iim_pr_curve* curve, size_t index, iim_pr_point* out);
/* Precision at recall 0.0, 0.1, ..., 1.0. */
IIM_API iim_status iim_pr_curve_interpolated(const iim_pr_curve* curve, double out[11]);
/* NULL or "-" writes to standard output. */
IIM_API iim_status iim_pr_curve_write(const iim_pr_curve* curve, const char* path);
IIM_API void iim_pr_curve_free(iim_pr_curve* curve);

/* Average inter-itemset distance of the first `top` itemsets. `used` receives
 * the number actually available (less than `top` for short lists). */
IIM_API iim_status iim_eval_iid(const iim_itemsets* list, size_t top, double* iid, size_t* used);

#ifdef __cplusplus
}
#endif

#endif /* IIM_IIM_H_ */
