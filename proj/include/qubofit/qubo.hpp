#pragma once

#include <iosfwd>

#include "qubofit/dense.hpp"

namespace qubofit {

/**
 * Quadratic objective over binary variables z_i in {0, 1}:
 *
 *   E(z) = sum_{i,j} quad(i,j) * z_i * z_j + offset
 *
 * The sum runs over all ordered index pairs, so an off-diagonal interaction
 * between i and j contributes quad(i,j) + quad(j,i) = 2*quad(i,j). Linear
 * terms are folded into the diagonal (z_i^2 = z_i), so one symmetric matrix
 * carries the whole objective. The stored form is minimized directly;
 * callers with a maximization convention negate their coefficients up front.
 *
 * Immutable after construction and safe to share across concurrent solver
 * runs; state vectors are per-run.
 */
class QuboProblem {
 public:
  /// Takes ownership of a symmetric coefficient matrix. Throws
  /// std::invalid_argument if the matrix is not square, not symmetric,
  /// or contains non-finite entries.
  explicit QuboProblem(Mat quad, double offset = 0.0);

  int size() const { return n_; }
  double offset() const { return offset_; }
  double coeff(int i, int j) const { return quad_(i, j); }
  const Mat& quad() const { return quad_; }

 private:
  int n_;
  Mat quad_;
  double offset_;
};

/**
 * Spin formulation equivalent to QuboProblem, variables sigma_i in {-1, +1}:
 *
 *   E(sigma) = -sum_{i<j} J(i,j) sigma_i sigma_j - sum_i h(i) sigma_i + offset
 *
 * Couplings are stored strictly upper-triangular (i < j).
 */
class IsingProblem {
 public:
  IsingProblem(Mat couplings, std::vector<double> fields, double offset = 0.0);

  int size() const { return n_; }
  double offset() const { return offset_; }
  /// Coupling between distinct spins, order-insensitive.
  double coupling(int i, int j) const;
  double field(int i) const { return fields_[static_cast<std::size_t>(i)]; }
  const Mat& couplings() const { return couplings_; }
  const std::vector<double>& fields() const { return fields_; }

 private:
  int n_;
  Mat couplings_;
  std::vector<double> fields_;
  double offset_;
};

/// Full objective value. Throws on state-length mismatch.
double energy(const QuboProblem& q, const BitVec& z);
double energy(const IsingProblem& p, const SpinVec& spins);

/// Energy change from flipping bit `flip_index`, computed in O(n) from one
/// matrix row (never by re-evaluating the full objective).
/// Throws std::out_of_range for a bad index.
double delta_energy(const QuboProblem& q, const BitVec& z, int flip_index);

/// Exact conversions via z_i = (1 + sigma_i) / 2: energies agree on every
/// assignment, constants are absorbed into the offset.
IsingProblem qubo_to_ising(const QuboProblem& q);
QuboProblem ising_to_qubo(const IsingProblem& p);

/// State mapping that matches the conversions: z=0 <-> sigma=-1, z=1 <-> +1.
SpinVec spins_from_bits(const BitVec& z);
BitVec bits_from_spins(const SpinVec& spins);

/// Plain-text problem format: header line "n offset", then one line
/// "i j value" per nonzero with i <= j (symmetric entries listed once).
void write_qubo(std::ostream& out, const QuboProblem& q);
QuboProblem read_qubo(std::istream& in);

}  // namespace qubofit
