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

#include "iim/learning.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

#include "iim/cover.hpp"
#include "iim/error.hpp"

namespace iim {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int arena_threads(std::uint32_t requested) {
  if (requested != 0) return static_cast<int>(requested);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void MiningConfig::validate() const {
  if (queue_capacity < 1) fail(ErrorCode::kInvalidArgument, "queue size must be at least 1");
  if (!(em_tolerance > 0.0)) fail(ErrorCode::kInvalidArgument, "EM tolerance must be positive");
  if (em_max_iterations < 1) fail(ErrorCode::kInvalidArgument, "EM iterations must be at least 1");
  if (em_every < 1) fail(ErrorCode::kInvalidArgument, "em-every must be at least 1");
}

std::vector<std::uint64_t> usage_counts(const CoveringState& coverings, std::size_t model_size) {
  std::vector<std::uint64_t> usage(model_size, 0);
  for (const auto& chosen : coverings.chosen)
    for (std::size_t i : chosen) ++usage.at(i);
  return usage;
}

double average_cost(std::span<const double> pis, std::span<const std::uint64_t> usage,
                    std::size_t m) {
  double total = 0.0;
  const double md = static_cast<double>(m);
  for (std::size_t i = 0; i < pis.size(); ++i) {
    const double rate = static_cast<double>(usage[i]) / md;
    total += rate * selection_weight(pis[i]) + (1.0 - rate) * absence_weight(pis[i]);
  }
  return total;
}

ItemsetModel singleton_model(const TransactionDb& db) {
  ItemsetModel model;
  const double m = static_cast<double>(db.size());
  for (ItemId d = 0; d < db.item_count(); ++d) {
    const std::uint64_t support = db.item_support(d);
    model.add(Itemset::from_sorted({d}), static_cast<double>(support) / m, support);
  }
  model.set_universe(static_cast<std::uint32_t>(db.item_count()));
  return model;
}

Learner::Learner(const TransactionDb& db, ItemsetModel model, const MiningConfig& config)
    : db_(db),
      config_(config),
      model_(std::move(model)),
      index_(db),
      queue_(config.queue_capacity),
      arena_(arena_threads(config.threads)) {
  config_.validate();
  for (std::size_t i = 0; i < model_.size(); ++i)
    model_.set_support(i, db_.supporting(model_[i].itemset).size());
  rebuild_supported_lists();
  refresh_weights();
  coverings_.chosen.resize(db_.size());
  solve_all();
  usage_ = usage_counts(coverings_, model_.size());
  refresh_costs();
}

void Learner::rebuild_supported_lists() {
  supported_.assign(db_.size(), {});
  for (std::size_t i = 0; i < model_.size(); ++i)
    for (std::uint32_t tid : db_.supporting(model_[i].itemset)) supported_[tid].push_back(i);
}

void Learner::refresh_weights() {
  weights_.resize(model_.size());
  for (std::size_t i = 0; i < model_.size(); ++i) weights_[i] = selection_weight(model_[i].pi);
}

void Learner::refresh_costs() {
  double absent_total = 0.0;
  for (const auto& e : model_.entries()) absent_total += absence_weight(e.pi);
  coverings_.cost.resize(db_.size());
  for (std::size_t j = 0; j < db_.size(); ++j) {
    double cost = absent_total;
    for (std::size_t i : coverings_.chosen[j])
      cost += selection_weight(model_[i].pi) - absence_weight(model_[i].pi);
    coverings_.cost[j] = cost;
  }
}

void Learner::solve(std::span<const std::uint32_t> tids) {
  arena_.execute([&] {
    tbb::parallel_for(tbb::blocked_range<std::size_t>(0, tids.size(), 64),
                      [&](const tbb::blocked_range<std::size_t>& range) {
                        for (std::size_t k = range.begin(); k != range.end(); ++k) {
                          const std::uint32_t j = tids[k];
                          coverings_.chosen[j] =
                              greedy_cover(model_, supported_[j], db_[j],
                                           [&](std::size_t e) { return weights_[e]; });
                        }
                      });
  });
}

void Learner::solve_all() {
  arena_.execute([&] {
    tbb::parallel_for(tbb::blocked_range<std::size_t>(0, db_.size(), 64),
                      [&](const tbb::blocked_range<std::size_t>& range) {
                        for (std::size_t j = range.begin(); j != range.end(); ++j)
                          coverings_.chosen[j] =
                              greedy_cover(model_, supported_[j], db_[j],
                                           [&](std::size_t e) { return weights_[e]; });
                      });
  });
}

void Learner::notify() {
  if (observer_) observer_(model_, coverings_);
}

double Learner::average_cost() const {
  std::vector<double> pis;
  pis.reserve(model_.size());
  for (const auto& e : model_.entries()) pis.push_back(e.pi);
  return iim::average_cost(pis, usage_, db_.size());
}

HardEmStats Learner::hard_em() {
  HardEmStats stats;
  const double m = static_cast<double>(db_.size());
  for (std::uint32_t k = 0; k < config_.em_max_iterations; ++k) {
    solve_all();
    usage_ = usage_counts(coverings_, model_.size());
    double change = 0.0;
    for (std::size_t i = 0; i < model_.size(); ++i) {
      const double pi = static_cast<double>(usage_[i]) / m;
      change += (pi - model_[i].pi) * (pi - model_[i].pi);
      model_.set_pi(i, pi);
    }
    refresh_weights();
    stats.iterations = k + 1;
    stats.last_change = std::sqrt(change);
    notify();
    if (stats.last_change <= config_.em_tolerance) {
      stats.converged = true;
      break;
    }
  }

  // Unused itemsets leave the model; singletons stay so every item remains
  // coverable and available to candidate generation.
  std::vector<bool> keep(model_.size(), true);
  for (std::size_t i = 0; i < model_.size(); ++i) {
    if (usage_[i] == 0 && !model_[i].itemset.is_singleton()) {
      keep[i] = false;
      ++stats.pruned;
    }
  }
  if (stats.pruned > 0) {
    const auto remap = model_.retain(keep);
    for (auto& chosen : coverings_.chosen)
      for (auto& i : chosen) i = *remap[i];
    std::vector<std::uint64_t> usage(model_.size());
    for (std::size_t i = 0; i < remap.size(); ++i)
      if (remap[i]) usage[*remap[i]] = usage_[i];
    usage_ = std::move(usage);
    rebuild_supported_lists();
    refresh_weights();
  }
  refresh_costs();
  return stats;
}

std::optional<CandidateQueue::Candidate> Learner::candidate_gen() {
  return queue_.next(model_, index_);
}

StructuralOutcome Learner::structural_step() {
  StructuralOutcome out;
  out.cost_before = average_cost();
  const std::size_t m = db_.size();

  std::vector<std::vector<std::size_t>> saved;
  std::vector<std::uint64_t> trial_usage;
  std::vector<double> trial_pi;
  while (auto candidate = candidate_gen()) {
    ++out.proposed;
    const auto tids = db_.supporting(candidate->itemset);

    // Force the candidate: pi = 1, i.e. selection weight exactly 0.
    const auto snap = model_.snapshot();
    const std::size_t e = model_.add(candidate->itemset, 1.0, tids.size());
    weights_.push_back(0.0);
    saved.clear();
    for (std::uint32_t j : tids) {
      supported_[j].push_back(e);
      saved.push_back(coverings_.chosen[j]);
    }
    solve(tids);

    // M-step on the changed usage.
    trial_usage = usage_;
    trial_usage.push_back(0);
    for (std::size_t k = 0; k < tids.size(); ++k) {
      for (std::size_t i : saved[k]) --trial_usage[i];
      for (std::size_t i : coverings_.chosen[tids[k]]) ++trial_usage[i];
    }
    trial_pi.resize(model_.size());
    for (std::size_t i = 0; i < model_.size(); ++i)
      trial_pi[i] = static_cast<double>(trial_usage[i]) / static_cast<double>(m);
    const double trial_cost = iim::average_cost(trial_pi, trial_usage, m);

    if (trial_cost < out.cost_before) {
      for (std::size_t i = 0; i < model_.size(); ++i) model_.set_pi(i, trial_pi[i]);
      usage_ = std::move(trial_usage);
      refresh_weights();
      refresh_costs();
      out.accepted = true;
      out.itemset = std::move(candidate->itemset);
      out.cost_after = trial_cost;
      notify();
      return out;
    }

    for (std::size_t k = 0; k < tids.size(); ++k) {
      supported_[tids[k]].pop_back();
      coverings_.chosen[tids[k]] = std::move(saved[k]);
    }
    weights_.pop_back();
    model_.restore(snap);
    queue_.reject(candidate->itemset);
    ++out.rejected;
  }
  out.cost_after = out.cost_before;
  return out;
}

MiningResult iim_mine(const TransactionDb& db, const MiningConfig& config, MStepObserver observer) {
  config.validate();
  if (db.empty()) fail(ErrorCode::kEmptyDatabase, "empty database");
  const auto start = Clock::now();

  MiningResult result;
  result.report.config = config;
  auto& report = result.report;

  auto phase = Clock::now();
  Learner learner(db, singleton_model(db), config);
  report.seconds_setup = seconds_since(phase);
  learner.set_m_step_observer(std::move(observer));

  std::uint32_t since_em = 0;
  auto run_hard_em = [&] {
    const auto t = Clock::now();
    learner.hard_em();
    ++report.hard_em_runs;
    report.seconds_hard_em += seconds_since(t);
    since_em = 0;
  };

  for (std::uint32_t it = 0; it < config.max_iterations; ++it) {
    const auto t = Clock::now();
    const auto outcome = learner.structural_step();
    report.seconds_structural += seconds_since(t);
    ++report.iterations;
    report.proposed += outcome.proposed;
    report.rejected += outcome.rejected;
    if (!outcome.accepted) break;
    ++report.accepted;
    if (++since_em >= config.em_every) run_hard_em();
  }
  if (since_em > 0) run_hard_em();

  report.final_cost = learner.average_cost();
  result.model = learner.release_model();
  result.coverings = learner.release_coverings();
  report.itemsets = result.model.size();
  for (const auto& e : result.model.entries())
    if (!e.itemset.is_singleton()) ++report.non_singletons;
  report.seconds_total = seconds_since(start);
  return result;
}

}  // namespace iim
