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

// iim: mine interesting itemsets, synthesise databases from a model, and
// evaluate mined lists.
//
//   iim mine  --input db.dat --output out.tsv [--model-out model.json] ...
//   iim synth --model truth.json --transactions 10000 --seed 42 --output db.dat
//   iim eval pr      --mined out.tsv --truth truth.json
//   iim eval iid     --mined out.tsv --top 50 --no-singletons
//   iim eval scaling --model truth.json --sizes 10000,20000,40000 --iterations 100
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iim/iim.h"

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct DbDeleter {
  void operator()(iim_db* p) const { iim_db_free(p); }
};
struct ModelDeleter {
  void operator()(iim_model* p) const { iim_model_free(p); }
};
struct ResultDeleter {
  void operator()(iim_result* p) const { iim_result_free(p); }
};
struct ItemsetsDeleter {
  void operator()(iim_itemsets* p) const { iim_itemsets_free(p); }
};
struct CurveDeleter {
  void operator()(iim_pr_curve* p) const { iim_pr_curve_free(p); }
};
using DbPtr = std::unique_ptr<iim_db, DbDeleter>;
using ModelPtr = std::unique_ptr<iim_model, ModelDeleter>;
using ResultPtr = std::unique_ptr<iim_result, ResultDeleter>;
using ItemsetsPtr = std::unique_ptr<iim_itemsets, ItemsetsDeleter>;
using CurvePtr = std::unique_ptr<iim_pr_curve, CurveDeleter>;

// Carries a failed status out of a subcommand.
struct Failure {
  iim_status status;
  std::string message;
};

void check(iim_status status) {
  if (status != IIM_OK) throw Failure{status, iim_last_error()};
}

int exit_code(iim_status status) {
  return status == IIM_ERR_INVALID_ARGUMENT ? kUsageError : kDataError;
}

struct MineOptions {
  std::string input;
  std::string output = "-";
  std::string model_out;
  std::string sort = "interestingness";
  bool no_singletons = false;
  iim_config config{};
};

void add_mining_flags(CLI::App* cmd, iim_config& config) {
  cmd->add_option("--iterations", config.max_iterations, "Structural EM steps")
      ->capture_default_str();
  cmd->add_option("--queue-size", config.queue_capacity, "Candidate queue capacity")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--em-tolerance", config.em_tolerance, "Hard EM stop: L2 change in pi")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--em-iterations", config.em_max_iterations, "Hard EM iteration cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--em-every", config.em_every, "Accepted candidates between hard EM runs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", config.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
}

void print_report(const iim_report& r, const iim_config& c) {
  std::fprintf(stderr,
               "iterations\t%u\n"
               "candidates_proposed\t%llu\n"
               "candidates_accepted\t%llu\n"
               "candidates_rejected\t%llu\n"
               "hard_em_runs\t%u\n"
               "itemsets\t%zu\n"
               "non_singleton_itemsets\t%zu\n"
               "average_cost\t%.9f\n"
               "seconds_setup\t%.3f\n"
               "seconds_structural\t%.3f\n"
               "seconds_hard_em\t%.3f\n"
               "seconds_total\t%.3f\n"
               "seed\t%llu\n"
               "config\titerations=%u queue_size=%llu em_tolerance=%g em_iterations=%u "
               "em_every=%u threads=%u\n",
               r.iterations, static_cast<unsigned long long>(r.candidates_proposed),
               static_cast<unsigned long long>(r.candidates_accepted),
               static_cast<unsigned long long>(r.candidates_rejected), r.hard_em_runs, r.itemsets,
               r.non_singletons, r.final_cost, r.seconds_setup, r.seconds_structural,
               r.seconds_hard_em, r.seconds_total, static_cast<unsigned long long>(c.seed),
               c.max_iterations, static_cast<unsigned long long>(c.queue_capacity), c.em_tolerance,
               c.em_max_iterations, c.em_every, c.threads);
}

void run_mine(const MineOptions& opt) {
  iim_db* raw_db = nullptr;
  check(iim_db_load_fimi(opt.input.c_str(), &raw_db));
  DbPtr db(raw_db);

  iim_result* raw_result = nullptr;
  check(iim_mine(db.get(), &opt.config, &raw_result));
  ResultPtr result(raw_result);

  const auto order = opt.sort == "probability" ? IIM_RANK_PROBABILITY : IIM_RANK_INTERESTINGNESS;
  check(iim_result_write_tsv(result.get(), opt.output.c_str(), opt.no_singletons ? 0 : 1, order));
  if (!opt.model_out.empty()) {
    iim_model* raw_model = nullptr;
    check(iim_result_model(result.get(), &raw_model));
    ModelPtr model(raw_model);
    check(iim_model_write_json(model.get(), opt.model_out.c_str()));
  }
  iim_report report;
  check(iim_result_report(result.get(), &report));
  print_report(report, opt.config);
}

struct SynthOptions {
  std::string model;
  std::string output;
  std::size_t transactions = 0;
  std::uint64_t seed = 0;
  std::uint32_t threads = 0;
};

void run_synth(const SynthOptions& opt) {
  iim_model* raw_model = nullptr;
  check(iim_model_load_json(opt.model.c_str(), &raw_model));
  ModelPtr model(raw_model);
  iim_db* raw_db = nullptr;
  check(iim_synthesize(model.get(), opt.transactions, opt.seed, opt.threads, &raw_db));
  DbPtr db(raw_db);
  check(iim_db_write_fimi(db.get(), opt.output.c_str()));
}

struct PrOptions {
  std::string mined;
  std::string truth;
  std::string output = "-";
  bool no_singletons = false;
};

void run_pr(const PrOptions& opt) {
  const int singletons = opt.no_singletons ? 0 : 1;
  iim_itemsets* raw_mined = nullptr;
  check(iim_itemsets_load_tsv(opt.mined.c_str(), singletons, &raw_mined));
  ItemsetsPtr mined(raw_mined);
  iim_model* raw_truth_model = nullptr;
  check(iim_model_load_json(opt.truth.c_str(), &raw_truth_model));
  ModelPtr truth_model(raw_truth_model);
  iim_itemsets* raw_truth = nullptr;
  check(iim_itemsets_from_model(truth_model.get(), singletons, &raw_truth));
  ItemsetsPtr truth(raw_truth);

  iim_pr_curve* raw_curve = nullptr;
  check(iim_eval_pr(mined.get(), truth.get(), &raw_curve));
  CurvePtr curve(raw_curve);
  check(iim_pr_curve_write(curve.get(), opt.output.c_str()));
}

struct IidOptions {
  std::string mined;
  std::size_t top = 50;
  bool no_singletons = false;
};

void run_iid(const IidOptions& opt) {
  iim_itemsets* raw_list = nullptr;
  check(iim_itemsets_load_tsv(opt.mined.c_str(), opt.no_singletons ? 0 : 1, &raw_list));
  ItemsetsPtr list(raw_list);
  double iid = 0.0;
  std::size_t used = 0;
  check(iim_eval_iid(list.get(), opt.top, &iid, &used));
  std::printf("top\tused\tiid\n%zu\t%zu\t%.6f\n", opt.top, used, iid);
  if (used < opt.top)
    std::fprintf(stderr, "note: only %zu itemsets available (requested %zu)\n", used, opt.top);
}

struct ScalingOptions {
  std::string model;
  std::vector<std::size_t> sizes{10000, 20000, 40000};
  std::uint64_t seed = 0;
  iim_config config{};
};

void run_scaling(const ScalingOptions& opt) {
  iim_model* raw_model = nullptr;
  check(iim_model_load_json(opt.model.c_str(), &raw_model));
  ModelPtr model(raw_model);

  std::printf("transactions\tseconds\titerations\titemsets\tnon_singletons\n");
  for (std::size_t m : opt.sizes) {
    iim_db* raw_db = nullptr;
    check(iim_synthesize(model.get(), m, opt.seed, opt.config.threads, &raw_db));
    DbPtr db(raw_db);

    const auto start = std::chrono::steady_clock::now();
    iim_result* raw_result = nullptr;
    check(iim_mine(db.get(), &opt.config, &raw_result));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ResultPtr result(raw_result);
    iim_report report;
    check(iim_result_report(result.get(), &report));
    std::printf("%zu\t%.3f\t%u\t%zu\t%zu\n", m, seconds, report.iterations, report.itemsets,
                report.non_singletons);
    std::fflush(stdout);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interesting itemset miner"};
  app.require_subcommand(1);

  MineOptions mine;
  iim_config_init(&mine.config);
  auto* mine_cmd = app.add_subcommand("mine", "Mine interesting itemsets from a FIMI database");
  mine_cmd->add_option("--input", mine.input, "FIMI transaction file")->required();
  mine_cmd->add_option("--output", mine.output, "Ranked TSV output ('-' = stdout)")
      ->capture_default_str();
  mine_cmd->add_option("--model-out", mine.model_out, "Write the mined model as JSON");
  mine_cmd->add_option("--seed", mine.config.seed, "Seed (echoed in the report)")
      ->capture_default_str();
  mine_cmd->add_flag("--no-singletons", mine.no_singletons, "Omit singleton itemsets");
  mine_cmd->add_option("--sort", mine.sort, "Ranking order")
      ->check(CLI::IsMember({"interestingness", "probability"}))
      ->capture_default_str();
  add_mining_flags(mine_cmd, mine.config);

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Sample a FIMI database from a JSON model");
  synth_cmd->add_option("--model", synth.model, "JSON model")->required();
  synth_cmd->add_option("--transactions", synth.transactions, "Number of transactions")
      ->required()
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", synth.seed, "Random seed")->required();
  synth_cmd->add_option("--output", synth.output, "FIMI output file")->required();
  synth_cmd->add_option("--threads", synth.threads, "Worker threads (0 = all cores)");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate mined itemsets");
  eval_cmd->require_subcommand(1);

  PrOptions pr;
  auto* pr_cmd = eval_cmd->add_subcommand("pr", "Precision/recall against generating itemsets");
  pr_cmd->add_option("--mined", pr.mined, "Ranked TSV")->required();
  pr_cmd->add_option("--truth", pr.truth, "JSON model of the generating itemsets")->required();
  pr_cmd->add_option("--output", pr.output, "Report file ('-' = stdout)")->capture_default_str();
  pr_cmd->add_flag("--no-singletons", pr.no_singletons, "Ignore singleton itemsets");

  IidOptions iid;
  auto* iid_cmd = eval_cmd->add_subcommand("iid", "Average inter-itemset distance");
  iid_cmd->add_option("--mined", iid.mined, "Ranked TSV")->required();
  iid_cmd->add_option("--top", iid.top, "Number of top itemsets")->capture_default_str();
  iid_cmd->add_flag("--no-singletons", iid.no_singletons, "Ignore singleton itemsets");

  ScalingOptions scaling;
  iim_config_init(&scaling.config);
  scaling.config.max_iterations = 100;
  auto* scaling_cmd = eval_cmd->add_subcommand("scaling", "Mining time against database size");
  scaling_cmd->add_option("--model", scaling.model, "JSON model to sample from")->required();
  scaling_cmd->add_option("--sizes", scaling.sizes, "Comma-separated transaction counts")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  scaling_cmd->add_option("--seed", scaling.seed, "Sampling seed")->capture_default_str();
  add_mining_flags(scaling_cmd, scaling.config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*mine_cmd) run_mine(mine);
    else if (*synth_cmd) run_synth(synth);
    else if (*pr_cmd) run_pr(pr);
    else if (*iid_cmd) run_iid(iid);
    else if (*scaling_cmd) run_scaling(scaling);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return exit_code(f.status);
  }
  return 0;
}
