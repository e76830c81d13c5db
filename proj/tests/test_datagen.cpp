#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qubofit/datagen.hpp"
#include "qubofit/regression.hpp"

using namespace qubofit;

TEST_SUITE("datagen") {

TEST_CASE("planted model values") {
  const WeightVector& w = planted_weights();
  REQUIRE(w.size() == 10);
  CHECK(w[0] == 15.5);   // prediction at the all-zero feature point
  CHECK(w[1] == 15.5);   // adding feature 1 at 1.0 doubles it to 31.0
  CHECK(w[0] + w[1] == 31.0);
  CHECK(w[8] == -15.5);
}

TEST_CASE("noiseless targets follow the planted model exactly") {
  GeneratorConfig cfg;
  cfg.n_total = 50;
  cfg.train_size = 10;
  cfg.noise_sigma = 0.0;
  cfg.seed = 5;
  const RegressionDataset ds = generate(cfg);
  REQUIRE(ds.dim() == 10);
  const WeightVector& w = planted_weights();
  for (int i = 0; i < ds.n_samples(); ++i) {
    double expected = 0.0;
    for (int d = 0; d < 10; ++d) expected += w[static_cast<std::size_t>(d)] * ds.x()(i, d);
    CHECK(ds.y()[static_cast<std::size_t>(i)] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("features stay in [-1, 1] and the constant column is intact") {
  GeneratorConfig cfg;
  cfg.n_total = 200;
  cfg.seed = 17;
  const RegressionDataset ds = generate(cfg);
  for (int i = 0; i < ds.n_samples(); ++i) {
    CHECK(ds.x()(i, 0) == 1.0);
    for (int d = 1; d < ds.dim(); ++d) {
      CHECK(ds.x()(i, d) >= -1.0);
      CHECK(ds.x()(i, d) <= 1.0);
    }
  }
}

TEST_CASE("generation is seed-deterministic; noise does not shift features") {
  GeneratorConfig cfg;
  cfg.n_total = 30;
  cfg.train_size = 10;
  cfg.seed = 99;
  const RegressionDataset a = generate(cfg);
  const RegressionDataset b = generate(cfg);
  CHECK(a.x().data() == b.x().data());
  CHECK(a.y() == b.y());

  cfg.noise_sigma = 0.0;
  const RegressionDataset quiet = generate(cfg);
  CHECK(quiet.x().data() == a.x().data());
  CHECK(quiet.y() != a.y());
}

TEST_CASE("exact solve on a large noiseless set recovers the planted weights") {
  GeneratorConfig cfg;
  cfg.n_total = 4000;
  cfg.train_size = 100;
  cfg.noise_sigma = 0.0;
  cfg.seed = 123;
  const WeightVector solved = exact_solve(generate(cfg));
  const WeightVector& truth = planted_weights();
  for (std::size_t d = 0; d < truth.size(); ++d)
    CHECK(std::fabs(solved[d] - truth[d]) < 1e-6);
}

TEST_CASE("config validation") {
  GeneratorConfig cfg;
  cfg.noise_sigma = -1.0;
  CHECK_THROWS_AS(generate(cfg), std::invalid_argument);
  cfg = GeneratorConfig{};
  cfg.train_size = cfg.n_total;
  CHECK_THROWS_AS(generate(cfg), std::invalid_argument);
}

TEST_CASE("trial splits partition the samples") {
  GeneratorConfig cfg;
  cfg.seed = 7;
  const RegressionDataset ds = generate(cfg);  // 1000 samples
  const auto splits = trial_splits(ds, 100, 10);
  REQUIRE(splits.size() == 10);

  std::set<int> train_union;
  for (const TrialSplit& s : splits) {
    CHECK(s.train.size() == 100);
    CHECK(s.test.size() == 900);
    std::set<int> train(s.train.begin(), s.train.end());
    for (int idx : s.test) CHECK(train.count(idx) == 0);
    for (int idx : s.train) {
      CHECK(train_union.count(idx) == 0);  // blocks are pairwise disjoint
      train_union.insert(idx);
    }
    // train and test together cover everything
    CHECK(s.train.size() + s.test.size() == static_cast<std::size_t>(ds.n_samples()));
  }
  CHECK(train_union.size() == 1000);  // blocks cover the whole index set
}

TEST_CASE("single-trial split and size validation") {
  GeneratorConfig cfg;
  cfg.n_total = 20;
  cfg.train_size = 5;
  const RegressionDataset ds = generate(cfg);
  const auto splits = trial_splits(ds, 5, 1);
  REQUIRE(splits.size() == 1);
  CHECK(splits[0].train == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(splits[0].test.size() == 15);

  CHECK_THROWS_AS(trial_splits(ds, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(trial_splits(ds, 0, 1), std::invalid_argument);
}

}  // TEST_SUITE
