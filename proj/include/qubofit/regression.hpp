#pragma once

#include <iosfwd>
#include <vector>

#include "qubofit/dense.hpp"
#include "qubofit/encoding.hpp"
#include "qubofit/qubo.hpp"

namespace qubofit {

using WeightVector = std::vector<double>;

/**
 * Samples for a linear model y ~ X w. The first column of X is the constant
 * 1 (the intercept slot), so dim() counts the intercept. X^T X and X^T y are
 * computed once at construction and reused by everything downstream; the
 * dataset is immutable and shareable.
 */
class RegressionDataset {
 public:
  /// Throws std::invalid_argument unless X is N x D with first column all
  /// ones, y has N finite entries, N >= 1 and D >= 1.
  RegressionDataset(Mat x, std::vector<double> y);

  int n_samples() const { return n_; }
  int dim() const { return d_; }
  const Mat& x() const { return x_; }
  const std::vector<double>& y() const { return y_; }
  /// X^T X, D x D.
  const Mat& xtx() const { return xtx_; }
  /// X^T y, length D.
  const std::vector<double>& xty() const { return xty_; }

 private:
  int n_;
  int d_;
  Mat x_;
  std::vector<double> y_;
  Mat xtx_;
  std::vector<double> xty_;
};

/// Least-squares objective with the constant y^T y dropped:
///   w^T X^T X w - 2 w^T X^T y  ==  |y - Xw|^2 - y^T y.
double cost_reduced(const WeightVector& w, const RegressionDataset& ds);

/// Mean absolute prediction error, (1/N) sum_i |y_i - x_i^T w|.
double mae(const WeightVector& w, const RegressionDataset& ds);

/// Normal-equation solution (Cholesky). Throws std::runtime_error when
/// X^T X is singular.
WeightVector exact_solve(const RegressionDataset& ds);

/**
 * Discretizes the regression objective through an encoding plan: for every
 * bit vector z, energy(result, z) equals cost_reduced(decode(plan, z), ds).
 * Quadratic part B^T X^T X B with the linear part -2 B^T X^T y folded into
 * the diagonal; offset 0. Throws when plan.dim() != ds.dim().
 */
QuboProblem build_qubo(const RegressionDataset& ds, const EncodingPlan& plan);

/// Dataset restricted to the given sample rows (order preserved).
RegressionDataset subset(const RegressionDataset& ds, const std::vector<int>& rows);

/// Plain-text dataset format: one sample per line, D-1 feature values then
/// the target; the constant column is implicit and re-added on load.
void write_dataset(std::ostream& out, const RegressionDataset& ds);
RegressionDataset read_dataset(std::istream& in);

}  // namespace qubofit
