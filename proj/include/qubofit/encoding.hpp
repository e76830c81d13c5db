#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "qubofit/dense.hpp"

namespace qubofit {

/**
 * Fixed basis for expanding one continuous value into binary flags:
 * the encoded value is the sum of the basis entries whose flag is set.
 * Entries are kept in ascending order of absolute value (ties allowed,
 * e.g. 0.5 and -0.5), because variable sharing always starts from the
 * largest-magnitude entry.
 */
class BasisVector {
 public:
  /// Throws std::invalid_argument on empty input, non-finite or zero
  /// entries, or entries not ascending in |value|.
  explicit BasisVector(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// An unordered pair of continuous-variable indices selected for sharing.
using VarPair = std::pair<int, int>;

/**
 * A discretization plan for D continuous variables over a common basis of
 * length K. slot(d, k) is the global binary-variable index that carries
 * basis entry k for variable d; decoding is
 *
 *   w_d = sum_k basis[k] * z[slot(d, k)]
 *
 * The full plan is block-diagonal (slot(d, k) = d*K + k, bit_count() = D*K,
 * equivalent to the Kronecker product of an identity with the basis
 * column). Reduction merges the top-|value| slots of selected variable
 * pairs so that both variables read the same bit; global indices are then
 * renumbered densely. Plans are immutable and decode is pure.
 */
class EncodingPlan {
 public:
  /// Builds a plan from an explicit slot table (row-major, D*K entries).
  /// Validates: indices dense in [0, bit_count), distinct within each
  /// variable, and any shared index carries the same basis position k.
  EncodingPlan(int dim, BasisVector basis, std::vector<int> slots);

  int dim() const { return dim_; }
  int basis_size() const { return basis_.size(); }
  const BasisVector& basis() const { return basis_; }
  int slot(int d, int k) const {
    return slots_[static_cast<std::size_t>(d) * basis_.size() + k];
  }
  /// Number of distinct binary variables the plan uses.
  int bit_count() const { return bit_count_; }

 private:
  int dim_;
  BasisVector basis_;
  std::vector<int> slots_;
  int bit_count_;
};

/// One block of K private bits per continuous variable.
EncodingPlan full_plan(int dim, BasisVector basis);

/**
 * Shares the `shared_bits` largest-|value| basis slots within each selected
 * pair: the lower-index variable of a pair adopts the higher-index
 * variable's slots. Pairs must be disjoint; 0 <= shared_bits <= K.
 * shared_bits = 0 (or no pairs) returns an equivalent plan.
 * Starting from a full plan, bit_count() drops by pairs * shared_bits.
 */
EncodingPlan reduce_plan(const EncodingPlan& plan,
                         const std::vector<VarPair>& pairs, int shared_bits);

/// w_d = sum_k basis[k] * z[slot(d, k)]. Throws on length mismatch.
std::vector<double> decode(const EncodingPlan& plan, const BitVec& z);

/// Plain-text plan format: header "D K n_bits", one line with the K basis
/// values, then one "d k g" triple per slot.
void write_plan(std::ostream& out, const EncodingPlan& plan);
EncodingPlan read_plan(std::istream& in);

}  // namespace qubofit
