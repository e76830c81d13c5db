#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qubofit/encoding.hpp"

using namespace qubofit;

namespace {

BasisVector small_basis() { return BasisVector({0.5, -0.5, 1.0, -1.0, 2.0, -2.0}); }

// all reachable values of variable d over every bit assignment of the plan
std::set<double> reachable_values(const EncodingPlan& plan, int d) {
  std::set<double> values;
  for (std::uint64_t a = 0; a < (1ull << plan.bit_count()); ++a) {
    const BitVec z = oracles::bits_of(a, plan.bit_count());
    values.insert(decode(plan, z)[static_cast<std::size_t>(d)]);
  }
  return values;
}

}  // namespace

TEST_SUITE("encoding") {

TEST_CASE("basis validation") {
  CHECK_THROWS_AS(BasisVector({}), std::invalid_argument);
  CHECK_THROWS_AS(BasisVector({1.0, 0.5}), std::invalid_argument);  // not ascending |.|
  CHECK_THROWS_AS(BasisVector({0.0, 1.0}), std::invalid_argument);  // zero entry
  CHECK_NOTHROW(BasisVector({0.5, -0.5, 1.0}));                     // ties allowed
}

TEST_CASE("full plan is block diagonal") {
  const EncodingPlan plan = full_plan(2, BasisVector({1.0, 2.0, 4.0}));
  CHECK(plan.bit_count() == 6);
  for (int d = 0; d < 2; ++d)
    for (int k = 0; k < 3; ++k) CHECK(plan.slot(d, k) == d * 3 + k);

  CHECK(full_plan(10, BasisVector(std::vector<double>{0.5, -0.5, 1, -1, 2, -2, 4, -4, 8, -8}))
            .bit_count() == 100);
  CHECK(full_plan(1, small_basis()).bit_count() == 6);  // identity expansion
}

TEST_CASE("decode frozen values") {
  const EncodingPlan plan = full_plan(1, small_basis());
  CHECK(decode(plan, {0, 1, 0, 0, 0, 1})[0] == -2.5);
  CHECK(decode(plan, {1, 0, 0, 0, 0, 1})[0] == -1.5);
  CHECK(decode(plan, BitVec(6, 0))[0] == 0.0);
}

TEST_CASE("decode rejects wrong state length") {
  const EncodingPlan plan = full_plan(1, small_basis());
  CHECK_THROWS_AS(decode(plan, BitVec(5, 0)), std::invalid_argument);
}

TEST_CASE("full-plan decode equals the dense basis-matrix product") {
  std::mt19937_64 eng(11);
  for (int round = 0; round < 50; ++round) {
    const int dim = 1 + static_cast<int>(eng() % 5);
    const int k_count = 1 + static_cast<int>(eng() % 5);
    std::vector<double> values(static_cast<std::size_t>(k_count));
    double mag = 0.25;
    for (auto& v : values) {
      mag *= 2.0;
      v = (eng() & 1u) ? mag : -mag;
    }
    const BasisVector basis(values);
    const EncodingPlan plan = full_plan(dim, basis);
    BitVec z(static_cast<std::size_t>(plan.bit_count()));
    for (auto& bit : z) bit = static_cast<std::uint8_t>(eng() & 1u);
    const auto expected = oracles::kron_decode(basis, dim, z);
    const auto actual = decode(plan, z);
    REQUIRE(actual.size() == expected.size());
    for (std::size_t d = 0; d < actual.size(); ++d)
      CHECK(oracles::close(actual[d], expected[d], 1e-12));
  }
}

TEST_CASE("one shared slot reproduces the worked 2x3 reduction") {
  const BasisVector basis({1.0, 2.0, 4.0});
  const EncodingPlan reduced = reduce_plan(full_plan(2, basis), {{0, 1}}, 1);
  CHECK(reduced.bit_count() == 5);
  CHECK(reduced.slot(0, 2) == reduced.slot(1, 2));  // largest entry shared

  // against the explicit reduced matrix
  //   [ b1 b2  0  0 b3 ]
  //   [  0  0 b1 b2 b3 ]
  // with bit order (0,0) (0,1) (1,0) (1,1) (shared)
  for (std::uint64_t a = 0; a < 32; ++a) {
    const BitVec z = oracles::bits_of(a, 5);
    const auto w = decode(reduced, z);
    const double b1 = 1.0, b2 = 2.0, b3 = 4.0;
    CHECK(w[0] == b1 * z[0] + b2 * z[1] + b3 * z[4]);
    CHECK(w[1] == b1 * z[2] + b2 * z[3] + b3 * z[4]);
  }
}

TEST_CASE("two shared slots drop two variables") {
  const BasisVector basis({1.0, 2.0, 4.0});
  const EncodingPlan reduced = reduce_plan(full_plan(2, basis), {{0, 1}}, 2);
  CHECK(reduced.bit_count() == 4);
  for (std::uint64_t a = 0; a < 16; ++a) {
    const BitVec z = oracles::bits_of(a, 4);
    const auto w = decode(reduced, z);
    CHECK(w[0] == 1.0 * z[0] + 2.0 * z[2] + 4.0 * z[3]);
    CHECK(w[1] == 1.0 * z[1] + 2.0 * z[2] + 4.0 * z[3]);
  }
}

TEST_CASE("empty reduction and zero shared bits change nothing") {
  const EncodingPlan plan = full_plan(3, small_basis());
  for (const auto& reduced : {reduce_plan(plan, {}, 4), reduce_plan(plan, {{0, 2}}, 0)}) {
    CHECK(reduced.bit_count() == plan.bit_count());
    for (int d = 0; d < 3; ++d)
      for (int k = 0; k < plan.basis_size(); ++k)
        CHECK(reduced.slot(d, k) == plan.slot(d, k));
  }
}

TEST_CASE("slot-table validation") {
  // duplicate global index within one variable
  CHECK_THROWS_AS(EncodingPlan(1, BasisVector({1.0, 2.0}), {0, 0}), std::invalid_argument);
  // shared index carrying two different basis positions
  CHECK_THROWS_AS(EncodingPlan(2, BasisVector({1.0, 2.0}), {0, 1, 1, 2}),
                  std::invalid_argument);
  // gap in the global numbering
  CHECK_THROWS_AS(EncodingPlan(1, BasisVector({1.0, 2.0}), {0, 2}), std::invalid_argument);
}

TEST_CASE("reduce_plan validation") {
  const EncodingPlan plan = full_plan(4, small_basis());
  CHECK_THROWS_AS(reduce_plan(plan, {{0, 1}, {1, 2}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(reduce_plan(plan, {{2, 2}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(reduce_plan(plan, {{0, 4}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(reduce_plan(plan, {{0, 1}}, 7), std::invalid_argument);
  CHECK_THROWS_AS(reduce_plan(plan, {{0, 1}}, -1), std::invalid_argument);
}

TEST_CASE("bit count follows dim*K - pairs*shared and sharing moves both variables") {
  std::mt19937_64 eng(99);
  for (int round = 0; round < 30; ++round) {
    const int dim = 2 + static_cast<int>(eng() % 5);
    const int k_count = 1 + static_cast<int>(eng() % 4);
    std::vector<double> values(static_cast<std::size_t>(k_count));
    double mag = 0.5;
    for (auto& v : values) {
      v = mag;
      mag *= 2.0;
    }
    const int max_pairs = dim / 2;
    const int n_pairs = static_cast<int>(eng() % (max_pairs + 1));
    std::vector<int> order(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), eng);
    std::vector<VarPair> pairs;
    for (int p = 0; p < n_pairs; ++p)
      pairs.emplace_back(std::min(order[2 * p], order[2 * p + 1]),
                         std::max(order[2 * p], order[2 * p + 1]));
    const int cut = static_cast<int>(eng() % (k_count + 1));

    const EncodingPlan plan = reduce_plan(full_plan(dim, BasisVector(values)), pairs, cut);
    CHECK(plan.bit_count() == dim * k_count - n_pairs * cut);

    // flipping a shared bit shifts both members by the same basis value
    if (n_pairs > 0 && cut > 0) {
      const auto& [a, b] = pairs.front();
      const int k = k_count - 1;
      CHECK(plan.slot(a, k) == plan.slot(b, k));
      BitVec z(static_cast<std::size_t>(plan.bit_count()), 0);
      const auto before = decode(plan, z);
      z[static_cast<std::size_t>(plan.slot(a, k))] = 1;
      const auto after = decode(plan, z);
      CHECK(after[static_cast<std::size_t>(a)] - before[static_cast<std::size_t>(a)] ==
            values[static_cast<std::size_t>(k)]);
      CHECK(after[static_cast<std::size_t>(b)] - before[static_cast<std::size_t>(b)] ==
            values[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("per-variable representable values survive reduction") {
  const BasisVector basis({0.5, -0.5, 1.0});
  const EncodingPlan full = full_plan(2, basis);
  const EncodingPlan reduced = reduce_plan(full, {{0, 1}}, 2);
  for (int d = 0; d < 2; ++d)
    CHECK(reachable_values(full, d) == reachable_values(reduced, d));
}

TEST_CASE("plan file round trip") {
  const EncodingPlan plan = reduce_plan(full_plan(3, small_basis()), {{0, 2}}, 2);
  std::stringstream buffer;
  write_plan(buffer, plan);

  // header + basis + one triple per (d, k)
  std::string text = buffer.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 3 * 6);

  std::stringstream reader(text);
  const EncodingPlan back = read_plan(reader);
  CHECK(back.dim() == plan.dim());
  CHECK(back.bit_count() == plan.bit_count());
  for (int d = 0; d < plan.dim(); ++d)
    for (int k = 0; k < plan.basis_size(); ++k)
      CHECK(back.slot(d, k) == plan.slot(d, k));
  for (int k = 0; k < plan.basis_size(); ++k) CHECK(back.basis()[k] == plan.basis()[k]);
}

}  // TEST_SUITE
