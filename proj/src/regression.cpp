#include "qubofit/regression.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "qubofit/textio.hpp"

namespace qubofit {

RegressionDataset::RegressionDataset(Mat x, std::vector<double> y)
    : n_(x.rows()), d_(x.cols()), x_(std::move(x)), y_(std::move(y)) {
  if (n_ < 1 || d_ < 1)
    throw std::invalid_argument("RegressionDataset: need at least one sample and one column");
  if (static_cast<int>(y_.size()) != n_)
    throw std::invalid_argument("RegressionDataset: target length must match sample count");
  for (int i = 0; i < n_; ++i) {
    if (x_(i, 0) != 1.0)
      throw std::invalid_argument("RegressionDataset: first column must be the constant 1");
    for (int d = 0; d < d_; ++d)
      if (!std::isfinite(x_(i, d)))
        throw std::invalid_argument("RegressionDataset: non-finite feature");
    if (!std::isfinite(y_[static_cast<std::size_t>(i)]))
      throw std::invalid_argument("RegressionDataset: non-finite target");
  }

  xtx_ = Mat(d_, d_, 0.0);
  xty_.assign(static_cast<std::size_t>(d_), 0.0);
  for (int i = 0; i < n_; ++i) {
    const double* row = x_.row(i);
    for (int a = 0; a < d_; ++a) {
      for (int b = a; b < d_; ++b) xtx_(a, b) += row[a] * row[b];
      xty_[static_cast<std::size_t>(a)] += row[a] * y_[static_cast<std::size_t>(i)];
    }
  }
  for (int a = 0; a < d_; ++a)
    for (int b = 0; b < a; ++b) xtx_(a, b) = xtx_(b, a);
}

double cost_reduced(const WeightVector& w, const RegressionDataset& ds) {
  if (static_cast<int>(w.size()) != ds.dim())
    throw std::invalid_argument("cost_reduced: weight length does not match dataset dim");
  double quad = 0.0;
  double cross = 0.0;
  for (int i = 0; i < ds.n_samples(); ++i) {
    const double* row = ds.x().row(i);
    double pred = 0.0;
    for (int d = 0; d < ds.dim(); ++d) pred += row[d] * w[static_cast<std::size_t>(d)];
    quad += pred * pred;
    cross += pred * ds.y()[static_cast<std::size_t>(i)];
  }
  return quad - 2.0 * cross;
}

double mae(const WeightVector& w, const RegressionDataset& ds) {
  if (static_cast<int>(w.size()) != ds.dim())
    throw std::invalid_argument("mae: weight length does not match dataset dim");
  double total = 0.0;
  for (int i = 0; i < ds.n_samples(); ++i) {
    const double* row = ds.x().row(i);
    double pred = 0.0;
    for (int d = 0; d < ds.dim(); ++d) pred += row[d] * w[static_cast<std::size_t>(d)];
    total += std::abs(ds.y()[static_cast<std::size_t>(i)] - pred);
  }
  return total / ds.n_samples();
}

WeightVector exact_solve(const RegressionDataset& ds) {
  const int d = ds.dim();
  Mat chol(d, d, 0.0);  // lower factor of X^T X
  double max_diag = 0.0;
  for (int i = 0; i < d; ++i) max_diag = std::max(max_diag, ds.xtx()(i, i));

  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = ds.xtx()(i, j);
      for (int k = 0; k < j; ++k) s -= chol(i, k) * chol(j, k);
      if (i == j) {
        if (s <= 1e-12 * max_diag)
          throw std::runtime_error("exact_solve: singular normal equations");
        chol(i, i) = std::sqrt(s);
      } else {
        chol(i, j) = s / chol(j, j);
      }
    }
  }

  // forward then back substitution on L L^T w = X^T y
  WeightVector w(ds.xty());
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < i; ++k)
      w[static_cast<std::size_t>(i)] -= chol(i, k) * w[static_cast<std::size_t>(k)];
    w[static_cast<std::size_t>(i)] /= chol(i, i);
  }
  for (int i = d - 1; i >= 0; --i) {
    for (int k = i + 1; k < d; ++k)
      w[static_cast<std::size_t>(i)] -= chol(k, i) * w[static_cast<std::size_t>(k)];
    w[static_cast<std::size_t>(i)] /= chol(i, i);
  }
  return w;
}

QuboProblem build_qubo(const RegressionDataset& ds, const EncodingPlan& plan) {
  if (plan.dim() != ds.dim())
    throw std::invalid_argument("build_qubo: plan dim does not match dataset dim");
  const int n = plan.bit_count();

  // Sparse columns of the basis matrix: bit g carries basis coefficient
  // entries[g] = {(d, basis[k])}, at most one entry per variable d.
  struct Entry {
    int d;
    double coef;
  };
  std::vector<std::vector<Entry>> cols(static_cast<std::size_t>(n));
  for (int d = 0; d < plan.dim(); ++d)
    for (int k = 0; k < plan.basis_size(); ++k)
      cols[static_cast<std::size_t>(plan.slot(d, k))].push_back({d, plan.basis()[k]});

  Mat quad(n, n, 0.0);
  for (int g = 0; g < n; ++g) {
    for (int h = g; h < n; ++h) {
      double v = 0.0;
      for (const Entry& a : cols[static_cast<std::size_t>(g)])
        for (const Entry& b : cols[static_cast<std::size_t>(h)])
          v += a.coef * ds.xtx()(a.d, b.d) * b.coef;
      quad(g, h) = v;
      quad(h, g) = v;
    }
    double linear = 0.0;
    for (const Entry& a : cols[static_cast<std::size_t>(g)])
      linear += a.coef * ds.xty()[static_cast<std::size_t>(a.d)];
    quad(g, g) -= 2.0 * linear;
  }
  return QuboProblem(std::move(quad), 0.0);
}

RegressionDataset subset(const RegressionDataset& ds, const std::vector<int>& rows) {
  if (rows.empty()) throw std::invalid_argument("subset: row selection is empty");
  Mat x(static_cast<int>(rows.size()), ds.dim(), 0.0);
  std::vector<double> y(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int src = rows[r];
    if (src < 0 || src >= ds.n_samples())
      throw std::out_of_range("subset: row index out of range");
    for (int d = 0; d < ds.dim(); ++d) x(static_cast<int>(r), d) = ds.x()(src, d);
    y[r] = ds.y()[static_cast<std::size_t>(src)];
  }
  return RegressionDataset(std::move(x), std::move(y));
}

void write_dataset(std::ostream& out, const RegressionDataset& ds) {
  for (int i = 0; i < ds.n_samples(); ++i) {
    for (int d = 1; d < ds.dim(); ++d)
      out << format_double(ds.x()(i, d)) << ' ';
    out << format_double(ds.y()[static_cast<std::size_t>(i)]) << '\n';
  }
}

RegressionDataset read_dataset(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<double> vals;
    double v = 0.0;
    while (ls >> v) vals.push_back(v);
    if (!ls.eof())
      throw std::runtime_error("read_dataset: malformed line: " + line);
    if (vals.empty()) continue;
    if (!rows.empty() && vals.size() != rows.front().size())
      throw std::runtime_error("read_dataset: inconsistent column count");
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw std::runtime_error("read_dataset: no samples");

  const int n = static_cast<int>(rows.size());
  const int d = static_cast<int>(rows.front().size());  // D-1 features + target
  Mat x(n, d, 0.0);
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x(i, 0) = 1.0;
    for (int c = 0; c + 1 < d; ++c) x(i, c + 1) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    y[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)].back();
  }
  return RegressionDataset(std::move(x), std::move(y));
}

}  // namespace qubofit
