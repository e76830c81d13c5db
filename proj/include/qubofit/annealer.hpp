#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qubofit/qubo.hpp"

namespace qubofit {

/// Geometric cooling: iteration t (0-based) runs at temperature t0 * gamma^t.
/// One iteration performs 2 * n single-bit Metropolis updates.
struct AnnealSchedule {
  std::int64_t iterations = 1000000;
  double t0 = 500.0;
  double gamma = 0.99996;
  std::uint64_t seed = 0;
};

struct AnnealResult {
  BitVec best_state;
  double best_energy = 0.0;
  double wall_time_seconds = 0.0;
  std::int64_t flips_attempted = 0;
  std::int64_t flips_accepted = 0;
};

struct TraceRow {
  std::int64_t iteration;
  double temperature;
  double energy;       // current chain energy
  double best_energy;  // best seen so far
};

/**
 * Simulated annealing over a QUBO. The state starts at uniformly random
 * bits from the seed; each update picks a bit uniformly at random and flips
 * it with probability min[1, exp(-dE / T_t)]. Energy is maintained
 * incrementally through a cached row product and resynchronized against a
 * full evaluation every 10^4 iterations; the returned best_energy is always
 * a full evaluation of best_state. The lowest-energy state seen anywhere in
 * the run is returned. Deterministic for a fixed (problem, schedule) apart
 * from wall_time_seconds.
 *
 * When `trace` is non-null it receives (iteration, temperature, energy,
 * best energy) rows decimated to at most 10^4 entries.
 */
AnnealResult anneal(const QuboProblem& q, const AnnealSchedule& schedule,
                    std::vector<TraceRow>* trace = nullptr);

/// Space-delimited trace rows with a header line.
void write_trace(std::ostream& out, const std::vector<TraceRow>& trace);

}  // namespace qubofit
