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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <tbb/task_arena.h>

#include "iim/candidate_queue.hpp"
#include "iim/model.hpp"
#include "iim/prefix_tree.hpp"
#include "iim/transaction_db.hpp"

namespace iim {

struct MiningConfig {
  std::uint32_t max_iterations = 1000;   // structural steps
  std::size_t queue_capacity = 100000;
  double em_tolerance = 1e-5;            // L2 change in pi that stops hard EM
  std::uint32_t em_max_iterations = 100;
  std::uint32_t em_every = 5;            // accepted candidates between hard EM runs
  std::uint32_t threads = 0;             // 0 = all available cores
  std::uint64_t seed = 0;                // echoed in reports; mining draws no randomness

  // Throws Error(kInvalidArgument).
  void validate() const;
};

// Per-transaction latent assignment: the entries with z_S = 1 and the value
// of the objective at the current model.
struct CoveringState {
  std::vector<std::vector<std::size_t>> chosen;
  std::vector<double> cost;

  std::size_t size() const noexcept { return chosen.size(); }
};

// Number of transactions whose covering uses each entry.
std::vector<std::uint64_t> usage_counts(const CoveringState& coverings, std::size_t model_size);

// Mean objective over m transactions when entry i is used by usage[i] of
// them and has probability pis[i]. Equal to averaging objective_cost over the
// transactions, but computed per entry.
double average_cost(std::span<const double> pis, std::span<const std::uint64_t> usage,
                    std::size_t m);

struct HardEmStats {
  std::uint32_t iterations = 0;
  bool converged = false;
  double last_change = 0.0;
  std::size_t pruned = 0;
};

struct StructuralOutcome {
  bool accepted = false;  // false: candidate queue exhausted
  std::optional<Itemset> itemset;
  std::size_t proposed = 0;
  std::size_t rejected = 0;
  double cost_before = 0.0;
  double cost_after = 0.0;
};

// Called after every M-step whose result is written into the model.
using MStepObserver = std::function<void(const ItemsetModel&, const CoveringState&)>;

// Mutable learning state for one database: the model, the per-transaction
// supported lists and coverings, entry usage counts, the support index and
// the candidate queue. Transactions are processed in parallel on a private
// task arena; results do not depend on the thread count.
class Learner {
 public:
  // Entry supports are recomputed from the database. Runs an initial E-step
  // at the given probabilities; throws Error(kInfeasible) if some
  // transaction cannot be covered.
  Learner(const TransactionDb& db, ItemsetModel model, const MiningConfig& config);

  // Hard EM: alternate E-steps and M-steps until the L2 change of the
  // probability vector is at most em_tolerance (or em_max_iterations), then
  // drop non-singleton entries that no transaction uses.
  HardEmStats hard_em();

  // One structural EM step: try candidates until one lowers the average
  // objective or the queue is exhausted.
  StructuralOutcome structural_step();

  // Next candidate from the queue (rebuilt if the model changed).
  std::optional<CandidateQueue::Candidate> candidate_gen();

  double average_cost() const;

  const TransactionDb& db() const noexcept { return db_; }
  const ItemsetModel& model() const noexcept { return model_; }
  const CoveringState& coverings() const noexcept { return coverings_; }
  std::span<const std::uint64_t> usage() const noexcept { return usage_; }
  const PrefixTree& index() const noexcept { return index_; }
  const CandidateQueue& queue() const noexcept { return queue_; }

  void set_m_step_observer(MStepObserver observer) { observer_ = std::move(observer); }

  // Moves the state out; the learner must not be used afterwards.
  ItemsetModel release_model() { return std::move(model_); }
  CoveringState release_coverings() { return std::move(coverings_); }

 private:
  void rebuild_supported_lists();
  void refresh_weights();
  void refresh_costs();
  void solve(std::span<const std::uint32_t> tids);
  void solve_all();
  void notify();

  const TransactionDb& db_;
  MiningConfig config_;
  ItemsetModel model_;
  PrefixTree index_;
  CandidateQueue queue_;
  tbb::task_arena arena_;

  std::vector<std::vector<std::size_t>> supported_;  // entries supported by each transaction
  std::vector<double> weights_;                      // selection weight per entry
  CoveringState coverings_;
  std::vector<std::uint64_t> usage_;
  MStepObserver observer_;
};

struct MiningReport {
  std::uint32_t iterations = 0;
  std::uint64_t proposed = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  std::uint32_t hard_em_runs = 0;
  std::size_t itemsets = 0;
  std::size_t non_singletons = 0;
  double final_cost = 0.0;
  double seconds_setup = 0.0;
  double seconds_structural = 0.0;
  double seconds_hard_em = 0.0;
  double seconds_total = 0.0;
  MiningConfig config;
};

struct MiningResult {
  ItemsetModel model;  // dense item ids of the database
  CoveringState coverings;
  MiningReport report;
};

// Seeds the model with every singleton at its relative support, then
// alternates structural steps with a hard EM run every em_every acceptances
// until max_iterations steps or the candidate queue is exhausted.
// Throws Error(kEmptyDatabase) for a database without transactions.
MiningResult iim_mine(const TransactionDb& db, const MiningConfig& config,
                      MStepObserver observer = {});

// Singleton model of `db`: every item with pi = support / m.
ItemsetModel singleton_model(const TransactionDb& db);

}  // namespace iim
