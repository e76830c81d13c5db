#include "qubofit/datagen.hpp"

#include <random>

namespace qubofit {

const WeightVector& planted_weights() {
  static const WeightVector w = {15.5, 15.5, 10.0, 10.0, 5.0,
                                 5.0,  -0.5, -0.5, -15.5, -15.5};
  return w;
}

RegressionDataset generate(const GeneratorConfig& cfg) {
  if (cfg.n_total < 1)
    throw std::invalid_argument("generate: sample count must be >= 1");
  if (cfg.train_size < 1 || cfg.train_size >= cfg.n_total)
    throw std::invalid_argument("generate: train size must be in [1, n_total)");
  if (cfg.noise_sigma < 0.0)
    throw std::invalid_argument("generate: noise sigma must be >= 0");

  const WeightVector& w = planted_weights();
  const int dim = static_cast<int>(w.size());

  std::mt19937_64 eng(cfg.seed);
  std::uniform_real_distribution<double> feature(-1.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);

  Mat x(cfg.n_total, dim, 0.0);
  std::vector<double> y(static_cast<std::size_t>(cfg.n_total), 0.0);
  for (int i = 0; i < cfg.n_total; ++i) {
    x(i, 0) = 1.0;
    double truth = w[0];
    for (int d = 1; d < dim; ++d) {
      x(i, d) = feature(eng);
      truth += w[static_cast<std::size_t>(d)] * x(i, d);
    }
    // drawn unconditionally so the feature stream is independent of sigma
    const double eta = noise(eng);
    y[static_cast<std::size_t>(i)] = truth + cfg.noise_sigma * eta;
  }
  return RegressionDataset(std::move(x), std::move(y));
}

std::vector<TrialSplit> trial_splits(const RegressionDataset& ds, int train_size,
                                     int n_trials) {
  if (train_size < 1) throw std::invalid_argument("trial_splits: train size must be >= 1");
  if (n_trials < 1) throw std::invalid_argument("trial_splits: trial count must be >= 1");
  const int n = ds.n_samples();
  if (static_cast<long long>(train_size) * n_trials > n)
    throw std::invalid_argument("trial_splits: n_trials * train_size exceeds sample count");

  std::vector<TrialSplit> splits(static_cast<std::size_t>(n_trials));
  for (int t = 0; t < n_trials; ++t) {
    TrialSplit& s = splits[static_cast<std::size_t>(t)];
    const int begin = t * train_size;
    const int end = begin + train_size;
    s.train.reserve(static_cast<std::size_t>(train_size));
    s.test.reserve(static_cast<std::size_t>(n - train_size));
    for (int i = 0; i < n; ++i) {
      if (i >= begin && i < end)
        s.train.push_back(i);
      else
        s.test.push_back(i);
    }
  }
  return splits;
}

}  // namespace qubofit
