#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qubofit/dense.hpp"
#include "qubofit/encoding.hpp"
#include "qubofit/regression.hpp"

namespace qubofit {

/// Metropolis chain settings for sampling the continuous regression cost at
/// a fixed temperature. One elementary step proposes a normal perturbation
/// of a single randomly chosen parameter; every `interval` steps the current
/// state is retained.
struct SamplerConfig {
  double temperature = 0.1;
  double proposal_sigma = 0.5;
  int interval = 1;
  int chain_length = 100;
  /// Intervals discarded before the first retained sample (0 = none; a
  /// rough correlation estimate rarely needs any).
  int burn_in = 0;
  std::uint64_t seed = 0;
};

/**
 * Metropolis chain on cost_reduced at cfg.temperature, started at w = 0.
 * Each elementary step picks one parameter uniformly, proposes w_d + delta
 * with delta ~ Normal(0, proposal_sigma), and accepts with probability
 * min[1, exp(-dcost / T)]. Returns a chain_length x dim() matrix of retained
 * states; bit-for-bit reproducible for a fixed seed.
 */
Mat sample_chain(const RegressionDataset& ds, const SamplerConfig& cfg);

/// Pearson correlation per column pair; symmetric with unit diagonal.
/// Constant columns correlate 0 with everything (their diagonal is 0 too),
/// so a frozen parameter never produces sharing evidence. Needs >= 2 rows.
Mat correlation_matrix(const Mat& samples);

struct SelectedPair {
  int a;  // a < b
  int b;
  double rho;
};

/**
 * Greedy disjoint pairing: off-diagonal entries with rho >= threshold are
 * taken in descending rho (ties broken by smallest (a, b)), skipping any
 * pair whose member already appears in an accepted pair. The threshold
 * compares signed correlation; anti-correlated pairs are never selected.
 */
std::vector<SelectedPair> select_pairs(const Mat& corr, double threshold);

/// Correlation estimate plus the pairs it selects, for logging/inspection.
struct CorrelationReport {
  Mat corr;
  std::vector<SelectedPair> pairs;
  double threshold = 0.0;
};

CorrelationReport correlation_report(const Mat& samples, double threshold);

/// One matrix row per line, space-delimited.
void write_matrix(std::ostream& out, const Mat& m);
/// One "a b rho" line per selected pair.
void write_pairs(std::ostream& out, const std::vector<SelectedPair>& pairs);

}  // namespace qubofit
