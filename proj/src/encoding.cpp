#include "qubofit/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qubofit/textio.hpp"

namespace qubofit {

BasisVector::BasisVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("BasisVector: at least one entry required");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k]) || values_[k] == 0.0)
      throw std::invalid_argument("BasisVector: entries must be finite and nonzero");
    if (k > 0 && std::abs(values_[k - 1]) > std::abs(values_[k]))
      throw std::invalid_argument("BasisVector: entries must ascend in absolute value");
  }
}

EncodingPlan::EncodingPlan(int dim, BasisVector basis, std::vector<int> slots)
    : dim_(dim), basis_(std::move(basis)), slots_(std::move(slots)), bit_count_(0) {
  const int k_count = basis_.size();
  if (dim_ < 1) throw std::invalid_argument("EncodingPlan: dim must be >= 1");
  if (slots_.size() != static_cast<std::size_t>(dim_) * k_count)
    throw std::invalid_argument("EncodingPlan: slot table must have dim * K entries");

  std::vector<int> owner_k;  // basis position carried by each global index
  for (int d = 0; d < dim_; ++d) {
    std::vector<int> row(slots_.begin() + static_cast<std::size_t>(d) * k_count,
                         slots_.begin() + static_cast<std::size_t>(d + 1) * k_count);
    for (int k = 0; k < k_count; ++k) {
      const int g = row[static_cast<std::size_t>(k)];
      if (g < 0)
        throw std::invalid_argument("EncodingPlan: negative global index");
      if (g >= static_cast<int>(owner_k.size()))
        owner_k.resize(static_cast<std::size_t>(g) + 1, -1);
      if (owner_k[static_cast<std::size_t>(g)] == -1)
        owner_k[static_cast<std::size_t>(g)] = k;
      else if (owner_k[static_cast<std::size_t>(g)] != k)
        throw std::invalid_argument(
            "EncodingPlan: a shared global index must carry one basis position");
    }
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument(
          "EncodingPlan: each variable needs K distinct global indices");
  }
  for (int k : owner_k)
    if (k == -1)
      throw std::invalid_argument("EncodingPlan: global indices must be dense");
  bit_count_ = static_cast<int>(owner_k.size());
}

EncodingPlan full_plan(int dim, BasisVector basis) {
  if (dim < 1) throw std::invalid_argument("full_plan: dim must be >= 1");
  const int k_count = basis.size();
  std::vector<int> slots(static_cast<std::size_t>(dim) * k_count);
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
  return EncodingPlan(dim, std::move(basis), std::move(slots));
}

EncodingPlan reduce_plan(const EncodingPlan& plan,
                         const std::vector<VarPair>& pairs, int shared_bits) {
  const int dim = plan.dim();
  const int k_count = plan.basis_size();
  if (shared_bits < 0 || shared_bits > k_count)
    throw std::invalid_argument("reduce_plan: shared-bit count must be in [0, K]");

  std::vector<char> used(static_cast<std::size_t>(dim), 0);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= dim || b >= dim)
      throw std::invalid_argument("reduce_plan: pair index out of range");
    if (a == b) throw std::invalid_argument("reduce_plan: pair members must differ");
    if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)])
      throw std::invalid_argument("reduce_plan: pairs must be disjoint");
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
  }

  std::vector<int> slots(static_cast<std::size_t>(dim) * k_count);
  for (int d = 0; d < dim; ++d)
    for (int k = 0; k < k_count; ++k)
      slots[static_cast<std::size_t>(d) * k_count + k] = plan.slot(d, k);

  // Largest-|value| slots first; the lower variable index adopts the
  // higher one's bits.
  for (const auto& [a, b] : pairs) {
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    for (int t = 0; t < shared_bits; ++t) {
      const int k = k_count - 1 - t;
      slots[static_cast<std::size_t>(lo) * k_count + k] =
          slots[static_cast<std::size_t>(hi) * k_count + k];
    }
  }

  // Renumber surviving global indices densely, ascending in original order.
  std::vector<int> survivors(slots);
  std::sort(survivors.begin(), survivors.end());
  survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
  std::vector<int> remap(static_cast<std::size_t>(survivors.back()) + 1, -1);
  for (std::size_t i = 0; i < survivors.size(); ++i)
    remap[static_cast<std::size_t>(survivors[i])] = static_cast<int>(i);
  for (int& g : slots) g = remap[static_cast<std::size_t>(g)];

  return EncodingPlan(dim, plan.basis(), std::move(slots));
}

std::vector<double> decode(const EncodingPlan& plan, const BitVec& z) {
  if (static_cast<int>(z.size()) != plan.bit_count())
    throw std::invalid_argument("decode: state length does not match plan bit count");
  std::vector<double> w(static_cast<std::size_t>(plan.dim()), 0.0);
  for (int d = 0; d < plan.dim(); ++d) {
    double acc = 0.0;
    for (int k = 0; k < plan.basis_size(); ++k)
      if (z[static_cast<std::size_t>(plan.slot(d, k))]) acc += plan.basis()[k];
    w[static_cast<std::size_t>(d)] = acc;
  }
  return w;
}

void write_plan(std::ostream& out, const EncodingPlan& plan) {
  out << plan.dim() << ' ' << plan.basis_size() << ' ' << plan.bit_count() << '\n';
  for (int k = 0; k < plan.basis_size(); ++k)
    out << (k ? " " : "") << format_double(plan.basis()[k]);
  out << '\n';
  for (int d = 0; d < plan.dim(); ++d)
    for (int k = 0; k < plan.basis_size(); ++k)
      out << d << ' ' << k << ' ' << plan.slot(d, k) << '\n';
}

EncodingPlan read_plan(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("read_plan: empty input");
  std::istringstream header(line);
  int dim = 0, k_count = 0, bits = 0;
  if (!(header >> dim >> k_count >> bits) || dim < 1 || k_count < 1)
    throw std::runtime_error("read_plan: malformed header, expected \"D K n_bits\"");
  if (!std::getline(in, line))
    throw std::runtime_error("read_plan: missing basis line");
  std::istringstream basis_line(line);
  std::vector<double> values(static_cast<std::size_t>(k_count));
  for (double& v : values)
    if (!(basis_line >> v))
      throw std::runtime_error("read_plan: basis line must hold K values");

  std::vector<int> slots(static_cast<std::size_t>(dim) * k_count, -1);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("read_plan: expected D*K slot triples");
    std::istringstream ls(line);
    int d = 0, k = 0, g = 0;
    if (!(ls >> d >> k >> g) || d < 0 || d >= dim || k < 0 || k >= k_count)
      throw std::runtime_error("read_plan: malformed slot triple: " + line);
    slots[static_cast<std::size_t>(d) * k_count + k] = g;
  }
  EncodingPlan plan(dim, BasisVector(std::move(values)), std::move(slots));
  if (plan.bit_count() != bits)
    throw std::runtime_error("read_plan: header bit count does not match slot table");
  return plan;
}

}  // namespace qubofit
