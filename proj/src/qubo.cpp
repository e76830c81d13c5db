#include "qubofit/qubo.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "qubofit/textio.hpp"

namespace qubofit {

QuboProblem::QuboProblem(Mat quad, double offset)
    : n_(quad.rows()), quad_(std::move(quad)), offset_(offset) {
  if (quad_.rows() != quad_.cols() || n_ < 1)
    throw std::invalid_argument("QuboProblem: coefficient matrix must be square and nonempty");
  if (!std::isfinite(offset_))
    throw std::invalid_argument("QuboProblem: offset must be finite");
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!std::isfinite(quad_(i, j)))
        throw std::invalid_argument("QuboProblem: non-finite coefficient");
      if (quad_(i, j) != quad_(j, i))
        throw std::invalid_argument("QuboProblem: coefficient matrix must be symmetric");
    }
  }
}

IsingProblem::IsingProblem(Mat couplings, std::vector<double> fields,
                           double offset)
    : n_(couplings.rows()),
      couplings_(std::move(couplings)),
      fields_(std::move(fields)),
      offset_(offset) {
  if (couplings_.rows() != couplings_.cols() || n_ < 1)
    throw std::invalid_argument("IsingProblem: coupling matrix must be square and nonempty");
  if (static_cast<int>(fields_.size()) != n_)
    throw std::invalid_argument("IsingProblem: field count must match spin count");
  if (!std::isfinite(offset_))
    throw std::invalid_argument("IsingProblem: offset must be finite");
  for (int i = 0; i < n_; ++i) {
    if (!std::isfinite(fields_[static_cast<std::size_t>(i)]))
      throw std::invalid_argument("IsingProblem: non-finite field");
    for (int j = 0; j < n_; ++j) {
      if (!std::isfinite(couplings_(i, j)))
        throw std::invalid_argument("IsingProblem: non-finite coupling");
      if (j <= i && couplings_(i, j) != 0.0)
        throw std::invalid_argument("IsingProblem: couplings must be strictly upper-triangular");
    }
  }
}

double IsingProblem::coupling(int i, int j) const {
  if (i == j) throw std::invalid_argument("IsingProblem: no self-coupling");
  return i < j ? couplings_(i, j) : couplings_(j, i);
}

double energy(const QuboProblem& q, const BitVec& z) {
  const int n = q.size();
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("energy: state length does not match problem size");
  double total = q.offset();
  for (int i = 0; i < n; ++i) {
    if (!z[static_cast<std::size_t>(i)]) continue;
    const double* row = q.quad().row(i);
    double s = 0.0;
    for (int j = 0; j < n; ++j)
      if (z[static_cast<std::size_t>(j)]) s += row[j];
    total += s;
  }
  return total;
}

double energy(const IsingProblem& p, const SpinVec& spins) {
  const int n = p.size();
  if (static_cast<int>(spins.size()) != n)
    throw std::invalid_argument("energy: state length does not match problem size");
  double total = p.offset();
  for (int i = 0; i < n; ++i) {
    const double* row = p.couplings().row(i);
    for (int j = i + 1; j < n; ++j)
      total -= row[j] * spins[static_cast<std::size_t>(i)] *
               spins[static_cast<std::size_t>(j)];
    total -= p.field(i) * spins[static_cast<std::size_t>(i)];
  }
  return total;
}

double delta_energy(const QuboProblem& q, const BitVec& z, int flip_index) {
  const int n = q.size();
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("delta_energy: state length does not match problem size");
  if (flip_index < 0 || flip_index >= n)
    throw std::out_of_range("delta_energy: flip index out of range");
  const double* row = q.quad().row(flip_index);
  double s = 0.0;
  for (int j = 0; j < n; ++j)
    if (z[static_cast<std::size_t>(j)] && j != flip_index) s += row[j];
  const double sign = z[static_cast<std::size_t>(flip_index)] ? -1.0 : 1.0;
  return sign * (row[flip_index] + 2.0 * s);
}

IsingProblem qubo_to_ising(const QuboProblem& q) {
  const int n = q.size();
  Mat j(n, n, 0.0);
  std::vector<double> h(static_cast<std::size_t>(n), 0.0);
  double diag_sum = 0.0;
  double upper_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double* row = q.quad().row(i);
    double row_sum = 0.0;
    for (int k = 0; k < n; ++k) row_sum += row[k];
    h[static_cast<std::size_t>(i)] = -0.5 * row_sum;
    diag_sum += row[i];
    for (int k = i + 1; k < n; ++k) {
      j(i, k) = -0.5 * row[k];
      upper_sum += row[k];
    }
  }
  const double offset = q.offset() + 0.5 * diag_sum + 0.5 * upper_sum;
  return IsingProblem(std::move(j), std::move(h), offset);
}

QuboProblem ising_to_qubo(const IsingProblem& p) {
  const int n = p.size();
  Mat quad(n, n, 0.0);
  double upper_sum = 0.0;
  double field_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      const double jik = p.coupling(i, k);
      row_sum += jik;
      if (k > i) {
        quad(i, k) = -2.0 * jik;
        quad(k, i) = -2.0 * jik;
        upper_sum += jik;
      }
    }
    quad(i, i) = 2.0 * row_sum - 2.0 * p.field(i);
    field_sum += p.field(i);
  }
  const double offset = p.offset() - upper_sum + field_sum;
  return QuboProblem(std::move(quad), offset);
}

SpinVec spins_from_bits(const BitVec& z) {
  SpinVec s(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) s[i] = z[i] ? 1 : -1;
  return s;
}

BitVec bits_from_spins(const SpinVec& spins) {
  BitVec z(spins.size());
  for (std::size_t i = 0; i < spins.size(); ++i) z[i] = spins[i] > 0 ? 1 : 0;
  return z;
}

void write_qubo(std::ostream& out, const QuboProblem& q) {
  out << q.size() << ' ' << format_double(q.offset()) << '\n';
  for (int i = 0; i < q.size(); ++i)
    for (int j = i; j < q.size(); ++j)
      if (q.coeff(i, j) != 0.0)
        out << i << ' ' << j << ' ' << format_double(q.coeff(i, j)) << '\n';
}

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

QuboProblem read_qubo(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("read_qubo: empty input, expected \"n offset\" header");
  std::istringstream header(line);
  int n = 0;
  double offset = 0.0;
  if (!(header >> n >> offset) || n < 1)
    throw std::runtime_error("read_qubo: malformed header, expected \"n offset\"");
  Mat quad(n, n, 0.0);
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    std::istringstream ls(line);
    int i = 0, j = 0;
    double v = 0.0;
    if (!(ls >> i >> j >> v))
      throw std::runtime_error("read_qubo: malformed entry line: " + line);
    if (i < 0 || j < 0 || i >= n || j >= n || i > j)
      throw std::runtime_error("read_qubo: entry indices out of range (need 0 <= i <= j < n)");
    quad(i, j) = v;
    quad(j, i) = v;
  }
  return QuboProblem(std::move(quad), offset);
}

}  // namespace qubofit
