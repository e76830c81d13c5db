#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qubofit/annealer.hpp"
#include "qubofit/datagen.hpp"
#include "qubofit/encoding.hpp"
#include "qubofit/sampler.hpp"

namespace qubofit {

/// How pairs of continuous variables are chosen for bit sharing.
///   Proposed — Metropolis sampling, correlation estimate, greedy pairing.
///   Random   — uniformly drawn disjoint pairs, matched in count to what
///              the Proposed pipeline selects on the same trial.
///   None     — no sharing; the full per-variable expansion.
enum class Method { Proposed, Random, None };

std::string to_string(Method m);
Method method_from_string(const std::string& name);

/**
 * Everything one benchmark run needs. Seeds inside the nested configs are
 * ignored: the harness derives every RNG stream from master_seed, so a run
 * is reproducible end to end and trials are independent of execution order.
 * sampler.interval <= 0 means "2 * dataset dimension".
 */
struct ExperimentConfig {
  GeneratorConfig generator;
  std::vector<double> basis = {0.5, -0.5, 1.0, -1.0, 2.0,
                               -2.0, 4.0, -4.0, 8.0, -8.0};
  SamplerConfig sampler = {0.1, 0.5, 0, 100, 0, 0};
  AnnealSchedule schedule;
  double threshold = 0.8;
  std::vector<int> cut_values = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<Method> methods = {Method::Proposed, Method::Random, Method::None};
  int trials = 10;
  std::uint64_t master_seed = 0;
};

/// Dataset and trial partition shared by every (method, cut, trial) cell.
struct ExperimentContext {
  RegressionDataset data;
  std::vector<TrialSplit> splits;
};

ExperimentContext make_context(const ExperimentConfig& cfg);

struct TrialReport {
  Method method = Method::None;
  int cut = 0;
  int trial = 0;
  int n_bits = 0;
  std::vector<VarPair> pairs;
  double mae_test = 0.0;
  double best_energy = 0.0;
  double seconds = 0.0;  // anneal call only
  std::uint64_t seed = 0;
};

struct AggregateRow {
  Method method = Method::None;
  int cut = 0;
  int count = 0;
  double mean_mae = 0.0, std_mae = 0.0;
  double mean_bits = 0.0, std_bits = 0.0;
  double mean_seconds = 0.0, std_seconds = 0.0;
};

struct ExperimentResult {
  std::vector<TrialReport> rows;
  std::vector<AggregateRow> aggregates;
};

/// `count` disjoint pairs drawn uniformly over disjoint-pair configurations
/// (requires 2 * count <= dim), returned as (low, high) sorted ascending.
std::vector<VarPair> random_disjoint_pairs(int dim, int count, std::uint64_t seed);

/// Sampling + correlation + greedy pairing on one trial's training block.
/// Depends on (master_seed, trial) only, so the same pairs serve every cut.
std::vector<SelectedPair> proposed_pairs(const ExperimentConfig& cfg,
                                         const ExperimentContext& ctx, int trial);

/// One cell of the sweep: pick pairs per `method`, reduce the full plan by
/// `cut` shared bits, build the QUBO on the trial's training block, anneal,
/// decode, and score MAE on the held-out samples.
TrialReport run_trial(const ExperimentConfig& cfg, const ExperimentContext& ctx,
                      Method method, int cut, int trial);

/// Full methods x cut_values x trials sweep with per-(method, cut)
/// mean/standard-deviation aggregates. Any trial failure propagates.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::vector<AggregateRow> aggregate(const std::vector<TrialReport>& rows);

/// CSV with header method,cut,trial,n_bits,pairs,mae,energy,seconds,seed.
/// Every column except seconds is deterministic under a fixed master seed.
void write_results_csv(std::ostream& out, const std::vector<TrialReport>& rows);

/// Human-readable aggregate table.
void write_summary(std::ostream& out, const std::vector<AggregateRow>& aggregates);

}  // namespace qubofit
