#include <cmath>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qubofit/qubo.hpp"

using namespace qubofit;

namespace {

QuboProblem two_var_example() {
  Mat quad(2, 2, 0.0);
  quad(0, 0) = 1.0;
  quad(1, 1) = 1.0;
  quad(0, 1) = -2.0;
  quad(1, 0) = -2.0;
  return QuboProblem(std::move(quad), 0.0);
}

QuboProblem single_var(double diag, double offset = 0.0) {
  Mat quad(1, 1, diag);
  return QuboProblem(std::move(quad), offset);
}

}  // namespace

TEST_SUITE("qubo") {

TEST_CASE("energy matches hand-expanded values") {
  const QuboProblem q1 = single_var(-3.0);
  CHECK(energy(q1, {1}) == -3.0);
  CHECK(energy(q1, {0}) == 0.0);

  const QuboProblem q2 = two_var_example();
  CHECK(energy(q2, {1, 1}) == -2.0);  // 1 - 2 - 2 + 1
  // brute force over all four assignments against the naive loop
  for (std::uint64_t a = 0; a < 4; ++a) {
    const BitVec z = oracles::bits_of(a, 2);
    CHECK(energy(q2, z) == doctest::Approx(oracles::naive_qubo_energy(q2, z)).epsilon(1e-12));
  }
}

TEST_CASE("all-zero state returns the offset") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const QuboProblem q = oracles::random_qubo(6, seed);
    CHECK(energy(q, BitVec(6, 0)) == q.offset());
  }
}

TEST_CASE("energy rejects a state of the wrong length") {
  const QuboProblem q = two_var_example();
  CHECK_THROWS_AS(energy(q, {1}), std::invalid_argument);
}

TEST_CASE("construction rejects asymmetric or non-finite input") {
  Mat bad(2, 2, 0.0);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(QuboProblem{bad}, std::invalid_argument);
  Mat inf(1, 1, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(QuboProblem{inf}, std::invalid_argument);
}

TEST_CASE("delta_energy frozen examples") {
  const QuboProblem q1 = single_var(-3.0);
  CHECK(delta_energy(q1, {0}, 0) == -3.0);  // energy([1]) - energy([0])

  const QuboProblem q2 = two_var_example();
  CHECK(delta_energy(q2, {1, 0}, 1) == -3.0);  // energy([1,1]) - energy([1,0])
}

TEST_CASE("delta_energy equals a full recomputation on random instances") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const QuboProblem q = oracles::random_qubo(n, 100 + seed);
    std::mt19937_64 eng(seed);
    BitVec z(static_cast<std::size_t>(n));
    for (auto& bit : z) bit = static_cast<std::uint8_t>(eng() & 1u);
    for (int i = 0; i < n; ++i) {
      BitVec flipped = z;
      flipped[static_cast<std::size_t>(i)] ^= 1u;
      const double expected = energy(q, flipped) - energy(q, z);
      CHECK(oracles::close(delta_energy(q, z, i), expected, 1e-12));
      // involution: flipping back negates the delta
      CHECK(oracles::close(delta_energy(q, flipped, i), -delta_energy(q, z, i), 1e-12));
    }
  }
}

TEST_CASE("delta_energy rejects out-of-range indices") {
  const QuboProblem q = two_var_example();
  CHECK_THROWS_AS(delta_energy(q, {0, 0}, 2), std::out_of_range);
  CHECK_THROWS_AS(delta_energy(q, {0, 0}, -1), std::out_of_range);
}

TEST_CASE("state mapping endpoints") {
  CHECK(spins_from_bits({0}) == SpinVec{-1});
  CHECK(spins_from_bits({1}) == SpinVec{1});
  CHECK(bits_from_spins({-1, 1}) == BitVec{0, 1});
}

TEST_CASE("single-variable conversion endpoints") {
  const QuboProblem q = single_var(-3.0);
  const IsingProblem p = qubo_to_ising(q);
  CHECK(energy(p, {1}) == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(energy(p, {-1}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("conversion preserves energy on every assignment, n <= 12") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 1 + static_cast<int>(seed);
    const QuboProblem q = oracles::random_qubo(n, 7000 + seed);
    const IsingProblem p = qubo_to_ising(q);
    const QuboProblem round_trip = ising_to_qubo(p);

    double max_coef = 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) max_coef = std::max(max_coef, std::fabs(q.coeff(i, j)));
    const double tol = 1e-12 * max_coef;

    double best_q = 1e300, best_i = 1e300;
    std::uint64_t argmin_q = 0, argmin_i = 0;
    for (std::uint64_t a = 0; a < (1ull << n); ++a) {
      const BitVec z = oracles::bits_of(a, n);
      const double eq = energy(q, z);
      const double ei = energy(p, spins_from_bits(z));
      CHECK(std::fabs(eq - ei) <= tol);
      CHECK(std::fabs(eq - energy(round_trip, z)) <= tol);
      if (eq < best_q) {
        best_q = eq;
        argmin_q = a;
      }
      if (ei < best_i) {
        best_i = ei;
        argmin_i = a;
      }
    }
    CHECK(argmin_q == argmin_i);  // ground state invariant under conversion
  }
}

TEST_CASE("qubo file round trip is exact") {
  const QuboProblem q = oracles::random_qubo(7, 42);
  std::stringstream buffer;
  write_qubo(buffer, q);
  const QuboProblem back = read_qubo(buffer);
  REQUIRE(back.size() == q.size());
  CHECK(back.offset() == q.offset());
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) CHECK(back.coeff(i, j) == q.coeff(i, j));
}

TEST_CASE("qubo file rejects malformed input") {
  std::stringstream no_header("");
  CHECK_THROWS_AS(read_qubo(no_header), std::runtime_error);
  std::stringstream bad_index("2 0\n0 5 1.0\n");
  CHECK_THROWS_AS(read_qubo(bad_index), std::runtime_error);
  std::stringstream lower_triangle("2 0\n1 0 1.0\n");
  CHECK_THROWS_AS(read_qubo(lower_triangle), std::runtime_error);
}

}  // TEST_SUITE
