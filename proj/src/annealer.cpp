#include "qubofit/annealer.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>

#include "qubofit/random.hpp"
#include "qubofit/textio.hpp"

namespace qubofit {

namespace {

constexpr std::int64_t kResyncIterations = 10000;
constexpr std::int64_t kMaxTraceRows = 10000;

}  // namespace

AnnealResult anneal(const QuboProblem& q, const AnnealSchedule& schedule,
                    std::vector<TraceRow>* trace) {
  if (schedule.iterations < 1)
    throw std::invalid_argument("anneal: iteration count must be >= 1");
  if (!(schedule.t0 > 0.0))
    throw std::invalid_argument("anneal: initial temperature must be positive");
  if (!(schedule.gamma > 0.0) || !(schedule.gamma < 1.0))
    throw std::invalid_argument("anneal: decay rate must be in (0, 1)");

  const auto start = std::chrono::steady_clock::now();
  const int n = q.size();
  const int updates_per_iteration = 2 * n;

  std::mt19937_64 eng(schedule.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  BitVec z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    z[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(eng() & 1u);

  // row_product[i] = sum_j quad(i,j) z_j, kept current across flips so a
  // proposal costs O(1) and an accepted flip O(n)
  std::vector<double> row_product(static_cast<std::size_t>(n), 0.0);
  auto resync = [&] {
    for (int i = 0; i < n; ++i) {
      const double* row = q.quad().row(i);
      double s = 0.0;
      for (int j = 0; j < n; ++j)
        if (z[static_cast<std::size_t>(j)]) s += row[j];
      row_product[static_cast<std::size_t>(i)] = s;
    }
    return energy(q, z);
  };
  double current = resync();

  BitVec best = z;
  double best_energy = current;
  std::int64_t accepted = 0;

  const std::int64_t stride =
      std::max<std::int64_t>(1, (schedule.iterations + kMaxTraceRows - 1) / kMaxTraceRows);
  if (trace) trace->clear();

  double temperature = schedule.t0;
  for (std::int64_t t = 0; t < schedule.iterations; ++t) {
    if (t > 0 && t % kResyncIterations == 0) current = resync();
    if (trace && t % stride == 0)
      trace->push_back({t, temperature, current, best_energy});

    for (int u = 0; u < updates_per_iteration; ++u) {
      const int i = pick(eng);
      const double diag = q.coeff(i, i);
      const double zi = z[static_cast<std::size_t>(i)] ? 1.0 : 0.0;
      const double sign = 1.0 - 2.0 * zi;
      const double delta =
          sign * (diag + 2.0 * (row_product[static_cast<std::size_t>(i)] - diag * zi));
      const double u01 = delta > 0.0 ? unit(eng) : 0.0;
      if (!metropolis_accept(delta, temperature, u01)) continue;

      const double dz = z[static_cast<std::size_t>(i)] ? -1.0 : 1.0;
      z[static_cast<std::size_t>(i)] ^= 1u;
      current += delta;
      ++accepted;
      const double* row = q.quad().row(i);
      for (int j = 0; j < n; ++j) row_product[static_cast<std::size_t>(j)] += row[j] * dz;
      if (current < best_energy) {
        best_energy = current;
        best = z;
      }
    }
    temperature *= schedule.gamma;
  }

  AnnealResult result;
  result.best_state = std::move(best);
  result.best_energy = energy(q, result.best_state);
  result.flips_attempted = schedule.iterations * updates_per_iteration;
  result.flips_accepted = accepted;
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void write_trace(std::ostream& out, const std::vector<TraceRow>& trace) {
  out << "iteration temperature energy best_energy\n";
  for (const TraceRow& row : trace)
    out << row.iteration << ' ' << format_double(row.temperature) << ' '
        << format_double(row.energy) << ' ' << format_double(row.best_energy) << '\n';
}

}  // namespace qubofit
