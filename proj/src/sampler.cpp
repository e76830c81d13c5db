#include "qubofit/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "qubofit/random.hpp"
#include "qubofit/textio.hpp"

namespace qubofit {

Mat sample_chain(const RegressionDataset& ds, const SamplerConfig& cfg) {
  if (cfg.temperature <= 0.0)
    throw std::invalid_argument("sample_chain: temperature must be positive");
  if (cfg.proposal_sigma <= 0.0)
    throw std::invalid_argument("sample_chain: proposal sigma must be positive");
  if (cfg.interval < 1)
    throw std::invalid_argument("sample_chain: interval must be >= 1");
  if (cfg.chain_length < 2)
    throw std::invalid_argument("sample_chain: chain length must be >= 2");
  if (cfg.burn_in < 0)
    throw std::invalid_argument("sample_chain: burn-in must be >= 0");

  const int dim = ds.dim();
  const Mat& a = ds.xtx();
  const std::vector<double>& b = ds.xty();

  std::mt19937_64 eng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::normal_distribution<double> perturb(0.0, cfg.proposal_sigma);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<double> w(static_cast<std::size_t>(dim), 0.0);
  std::vector<double> aw(static_cast<std::size_t>(dim), 0.0);  // running X^T X w

  Mat samples(cfg.chain_length, dim, 0.0);
  for (int rec = 0; rec < cfg.burn_in + cfg.chain_length; ++rec) {
    for (int step = 0; step < cfg.interval; ++step) {
      const int d = pick(eng);
      const double delta = perturb(eng);
      // cost change when only w_d moves by delta
      const double dcost = 2.0 * delta * aw[static_cast<std::size_t>(d)] +
                           delta * delta * a(d, d) -
                           2.0 * delta * b[static_cast<std::size_t>(d)];
      const double u = dcost > 0.0 ? unit(eng) : 0.0;
      if (metropolis_accept(dcost, cfg.temperature, u)) {
        w[static_cast<std::size_t>(d)] += delta;
        for (int j = 0; j < dim; ++j)
          aw[static_cast<std::size_t>(j)] += a(j, d) * delta;
      }
    }
    if (rec >= cfg.burn_in) {
      double* row = samples.row(rec - cfg.burn_in);
      for (int j = 0; j < dim; ++j) row[j] = w[static_cast<std::size_t>(j)];
      // resynchronize the running product; bounds float drift over long chains
      for (int j = 0; j < dim; ++j) {
        double s = 0.0;
        for (int k = 0; k < dim; ++k) s += a(j, k) * w[static_cast<std::size_t>(k)];
        aw[static_cast<std::size_t>(j)] = s;
      }
    }
  }
  return samples;
}

Mat correlation_matrix(const Mat& samples) {
  const int n = samples.rows();
  const int dim = samples.cols();
  if (n < 2)
    throw std::invalid_argument("correlation_matrix: need at least two samples");

  std::vector<double> mean(static_cast<std::size_t>(dim), 0.0);
  std::vector<char> constant(static_cast<std::size_t>(dim), 1);
  for (int j = 0; j < dim; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += samples(i, j);
    mean[static_cast<std::size_t>(j)] = s / n;
    for (int i = 1; i < n; ++i)
      if (samples(i, j) != samples(0, j)) {
        constant[static_cast<std::size_t>(j)] = 0;
        break;
      }
  }

  Mat cov(dim, dim, 0.0);
  for (int i = 0; i < n; ++i)
    for (int aa = 0; aa < dim; ++aa) {
      const double da = samples(i, aa) - mean[static_cast<std::size_t>(aa)];
      for (int bb = aa; bb < dim; ++bb)
        cov(aa, bb) += da * (samples(i, bb) - mean[static_cast<std::size_t>(bb)]);
    }

  Mat corr(dim, dim, 0.0);
  for (int aa = 0; aa < dim; ++aa) {
    if (constant[static_cast<std::size_t>(aa)]) continue;  // whole row stays 0
    for (int bb = aa; bb < dim; ++bb) {
      if (constant[static_cast<std::size_t>(bb)]) continue;
      const double denom = std::sqrt(cov(aa, aa) * cov(bb, bb));
      const double rho = aa == bb ? 1.0 : cov(aa, bb) / denom;
      corr(aa, bb) = rho;
      corr(bb, aa) = rho;
    }
  }
  return corr;
}

std::vector<SelectedPair> select_pairs(const Mat& corr, double threshold) {
  if (corr.rows() != corr.cols())
    throw std::invalid_argument("select_pairs: correlation matrix must be square");
  if (!(threshold > 0.0) || threshold > 1.0)
    throw std::invalid_argument("select_pairs: threshold must be in (0, 1]");

  std::vector<SelectedPair> candidates;
  for (int a = 0; a < corr.rows(); ++a)
    for (int b = a + 1; b < corr.cols(); ++b)
      if (corr(a, b) >= threshold) candidates.push_back({a, b, corr(a, b)});

  std::sort(candidates.begin(), candidates.end(),
            [](const SelectedPair& x, const SelectedPair& y) {
              if (x.rho != y.rho) return x.rho > y.rho;
              if (x.a != y.a) return x.a < y.a;
              return x.b < y.b;
            });

  std::vector<char> used(static_cast<std::size_t>(corr.rows()), 0);
  std::vector<SelectedPair> picked;
  for (const SelectedPair& c : candidates) {
    if (used[static_cast<std::size_t>(c.a)] || used[static_cast<std::size_t>(c.b)])
      continue;
    used[static_cast<std::size_t>(c.a)] = used[static_cast<std::size_t>(c.b)] = 1;
    picked.push_back(c);
  }
  return picked;
}

CorrelationReport correlation_report(const Mat& samples, double threshold) {
  CorrelationReport report;
  report.corr = correlation_matrix(samples);
  report.pairs = select_pairs(report.corr, threshold);
  report.threshold = threshold;
  return report;
}

void write_matrix(std::ostream& out, const Mat& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << format_double(m(i, j));
    out << '\n';
  }
}

void write_pairs(std::ostream& out, const std::vector<SelectedPair>& pairs) {
  for (const SelectedPair& p : pairs)
    out << p.a << ' ' << p.b << ' ' << format_double(p.rho) << '\n';
}

}  // namespace qubofit
