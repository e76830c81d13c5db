#include "qubofit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include "qubofit/random.hpp"
#include "qubofit/regression.hpp"
#include "qubofit/textio.hpp"

namespace qubofit {

namespace {

// stream tags for deriving independent RNGs from the master seed
enum StreamTag : std::uint64_t {
  kDatasetStream = 1,
  kSamplerStream = 2,
  kRandomPairStream = 3,
  kAnnealStream = 4,
};

std::uint64_t method_id(Method m) {
  switch (m) {
    case Method::Proposed: return 0;
    case Method::Random: return 1;
    case Method::None: return 2;
  }
  throw std::logic_error("method_id: unknown method");
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Proposed: return "proposed";
    case Method::Random: return "random";
    case Method::None: return "none";
  }
  throw std::logic_error("to_string: unknown method");
}

Method method_from_string(const std::string& name) {
  if (name == "proposed") return Method::Proposed;
  if (name == "random") return Method::Random;
  if (name == "none") return Method::None;
  throw std::invalid_argument("unknown method \"" + name +
                              "\" (expected proposed, random, or none)");
}

ExperimentContext make_context(const ExperimentConfig& cfg) {
  GeneratorConfig gen = cfg.generator;
  gen.seed = mix_seed(cfg.master_seed, kDatasetStream);
  RegressionDataset data = generate(gen);
  std::vector<TrialSplit> splits = trial_splits(data, gen.train_size, cfg.trials);
  return ExperimentContext{std::move(data), std::move(splits)};
}

std::vector<VarPair> random_disjoint_pairs(int dim, int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("random_disjoint_pairs: negative count");
  if (2 * count > dim)
    throw std::invalid_argument("random_disjoint_pairs: not enough variables for that many disjoint pairs");

  std::mt19937_64 eng(seed);
  std::vector<int> order(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) order[static_cast<std::size_t>(i)] = i;
  // partial Fisher-Yates: the first 2*count entries are a uniform sample
  for (int i = 0; i < 2 * count; ++i) {
    std::uniform_int_distribution<int> pick(i, dim - 1);
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(pick(eng))]);
  }

  std::vector<VarPair> pairs;
  pairs.reserve(static_cast<std::size_t>(count));
  for (int p = 0; p < count; ++p) {
    const int a = order[static_cast<std::size_t>(2 * p)];
    const int b = order[static_cast<std::size_t>(2 * p + 1)];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<SelectedPair> proposed_pairs(const ExperimentConfig& cfg,
                                         const ExperimentContext& ctx, int trial) {
  const TrialSplit& split = ctx.splits.at(static_cast<std::size_t>(trial));
  RegressionDataset train = subset(ctx.data, split.train);

  SamplerConfig sampler = cfg.sampler;
  if (sampler.interval <= 0) sampler.interval = 2 * train.dim();
  sampler.seed = mix_seed(cfg.master_seed, kSamplerStream, static_cast<std::uint64_t>(trial));

  Mat chain = sample_chain(train, sampler);
  return select_pairs(correlation_matrix(chain), cfg.threshold);
}

TrialReport run_trial(const ExperimentConfig& cfg, const ExperimentContext& ctx,
                      Method method, int cut, int trial) {
  if (trial < 0 || trial >= static_cast<int>(ctx.splits.size()))
    throw std::out_of_range("run_trial: trial index out of range");

  const TrialSplit& split = ctx.splits[static_cast<std::size_t>(trial)];
  RegressionDataset train = subset(ctx.data, split.train);
  RegressionDataset test = subset(ctx.data, split.test);

  std::vector<VarPair> pairs;
  if (method == Method::Proposed) {
    for (const SelectedPair& p : proposed_pairs(cfg, ctx, trial))
      pairs.emplace_back(p.a, p.b);
  } else if (method == Method::Random) {
    // matched in pair count to the proposed pipeline on this trial
    const std::size_t count = proposed_pairs(cfg, ctx, trial).size();
    pairs = random_disjoint_pairs(
        train.dim(), static_cast<int>(count),
        mix_seed(cfg.master_seed, kRandomPairStream, static_cast<std::uint64_t>(trial)));
  }

  EncodingPlan plan =
      reduce_plan(full_plan(train.dim(), BasisVector(cfg.basis)), pairs, cut);
  QuboProblem qubo = build_qubo(train, plan);

  AnnealSchedule schedule = cfg.schedule;
  schedule.seed = mix_seed(cfg.master_seed, kAnnealStream,
                           method_id(method) * 1024 + static_cast<std::uint64_t>(cut),
                           static_cast<std::uint64_t>(trial));
  AnnealResult annealed = anneal(qubo, schedule);

  TrialReport report;
  report.method = method;
  report.cut = cut;
  report.trial = trial;
  report.n_bits = plan.bit_count();
  report.pairs = std::move(pairs);
  report.mae_test = mae(decode(plan, annealed.best_state), test);
  report.best_energy = annealed.best_energy;
  report.seconds = annealed.wall_time_seconds;
  report.seed = schedule.seed;
  return report;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentContext ctx = make_context(cfg);
  ExperimentResult result;
  result.rows.reserve(cfg.methods.size() * cfg.cut_values.size() *
                      static_cast<std::size_t>(cfg.trials));
  for (Method method : cfg.methods)
    for (int cut : cfg.cut_values)
      for (int trial = 0; trial < cfg.trials; ++trial)
        result.rows.push_back(run_trial(cfg, ctx, method, cut, trial));
  result.aggregates = aggregate(result.rows);
  return result;
}

std::vector<AggregateRow> aggregate(const std::vector<TrialReport>& rows) {
  std::vector<AggregateRow> out;
  for (const TrialReport& row : rows) {
    AggregateRow* agg = nullptr;
    for (AggregateRow& a : out)
      if (a.method == row.method && a.cut == row.cut) {
        agg = &a;
        break;
      }
    if (!agg) {
      out.push_back(AggregateRow{row.method, row.cut, 0, 0, 0, 0, 0, 0, 0});
      agg = &out.back();
    }
    ++agg->count;
  }

  for (AggregateRow& agg : out) {
    std::vector<double> maes, bits, secs;
    for (const TrialReport& row : rows) {
      if (row.method != agg.method || row.cut != agg.cut) continue;
      maes.push_back(row.mae_test);
      bits.push_back(static_cast<double>(row.n_bits));
      secs.push_back(row.seconds);
    }
    agg.mean_mae = mean_of(maes);
    agg.std_mae = stddev_of(maes, agg.mean_mae);
    agg.mean_bits = mean_of(bits);
    agg.std_bits = stddev_of(bits, agg.mean_bits);
    agg.mean_seconds = mean_of(secs);
    agg.std_seconds = stddev_of(secs, agg.mean_seconds);
  }
  return out;
}

void write_results_csv(std::ostream& out, const std::vector<TrialReport>& rows) {
  out << "method,cut,trial,n_bits,pairs,mae,energy,seconds,seed\n";
  for (const TrialReport& row : rows) {
    out << to_string(row.method) << ',' << row.cut << ',' << row.trial << ','
        << row.n_bits << ',';
    for (std::size_t p = 0; p < row.pairs.size(); ++p)
      out << (p ? ";" : "") << row.pairs[p].first << '-' << row.pairs[p].second;
    out << ',' << format_double(row.mae_test) << ','
        << format_double(row.best_energy) << ',' << format_double(row.seconds)
        << ',' << row.seed << '\n';
  }
}

void write_summary(std::ostream& out, const std::vector<AggregateRow>& aggregates) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-9s %4s %7s %16s %18s %19s\n", "method",
                "cut", "trials", "bits(mean+-sd)", "mae(mean+-sd)",
                "seconds(mean+-sd)");
  out << line;
  for (const AggregateRow& a : aggregates) {
    std::snprintf(line, sizeof(line),
                  "%-9s %4d %7d %9.1f +- %4.1f %9.4f +- %6.4f %9.3f +- %6.3f\n",
                  to_string(a.method).c_str(), a.cut, a.count, a.mean_bits,
                  a.std_bits, a.mean_mae, a.std_mae, a.mean_seconds,
                  a.std_seconds);
    out << line;
  }
}

}  // namespace qubofit
