#pragma once

#include <cstdint>
#include <vector>

#include "qubofit/regression.hpp"

namespace qubofit {

/// Synthetic benchmark settings: n_total samples from the planted linear
/// model, of which train_size per trial are used for fitting.
struct GeneratorConfig {
  int n_total = 1000;
  int train_size = 100;
  double noise_sigma = 1.0;
  std::uint64_t seed = 0;
};

/// Coefficients of the planted model (intercept first, 9 features):
/// 15.5, 15.5, 10, 10, 5, 5, -0.5, -0.5, -15.5, -15.5.
const WeightVector& planted_weights();

/// Draws features uniformly on [-1, 1], targets from the planted model plus
/// Normal(0, noise_sigma^2) observation noise. The constant column is
/// prepended; deterministic for a fixed seed, and the feature draw does not
/// depend on noise_sigma.
RegressionDataset generate(const GeneratorConfig& cfg);

struct TrialSplit {
  std::vector<int> train;
  std::vector<int> test;
};

/// Splits the sample indices into n_trials disjoint training blocks of
/// train_size consecutive samples; trial i trains on block i and tests on
/// the complementary N - train_size samples. Requires
/// n_trials * train_size <= N.
std::vector<TrialSplit> trial_splits(const RegressionDataset& ds, int train_size,
                                     int n_trials);

}  // namespace qubofit
