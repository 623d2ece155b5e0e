#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "qhop/counting.hpp"
#include "qhop/oracle.hpp"
#include "qhop/rng.hpp"

using namespace qhop;

namespace {

OracleTable all_n3_table(std::size_t bits) {
  std::vector<std::uint8_t> table(8);
  for (std::size_t b = 0; b < 8; ++b) table[b] = (bits >> b) & 1;
  return OracleTable(3, std::move(table));
}

}  // namespace

TEST_CASE("brute_force_count sums the table") {
  CHECK(brute_force_count(OracleTable(2, {0, 0, 0, 0})) == 0);
  CHECK(brute_force_count(OracleTable(2, {0, 1, 1, 0})) == 2);

  const OracleTable random = OracleTable::random(8, 99);
  std::size_t expected = 0;
  for (std::uint8_t v : random.table()) expected += v;
  CHECK(brute_force_count(random) == expected);
}

TEST_CASE("oracle construction validates its inputs") {
  CHECK_THROWS_AS(OracleTable(2, {0, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(OracleTable(1, {0, 2}), std::domain_error);
  CHECK_THROWS_AS(OracleTable::from_solutions(2, {4}), std::domain_error);
  CHECK_THROWS_AS(OracleTable::from_solutions(2, {1, 1}), std::domain_error);
  CHECK_THROWS_AS(OracleTable(30, {}), std::length_error);
}

TEST_CASE("encode_count maps n to the angle n / 2^N") {
  const EncodedState zero = encode_count(0, 4);
  CHECK(zero.theta == 0.0);
  CHECK(zero.c0 == 1.0);
  CHECK(zero.c1 == 0.0);

  const EncodedState one = encode_count(1, 4);
  CHECK(one.theta == 0.0625);
  CHECK(one.c0 == Catch::Approx(0.998047).epsilon(1e-5));
  CHECK(one.c1 == Catch::Approx(0.062459).epsilon(1e-5));

  const EncodedState full = encode_count(8, 3);
  CHECK(full.theta == 1.0);
  CHECK(full.c0 == Catch::Approx(0.540302).epsilon(1e-6));
  CHECK(full.c1 == Catch::Approx(0.841471).epsilon(1e-6));

  CHECK(full.c0 * full.c0 + full.c1 * full.c1 == Catch::Approx(1.0).margin(1e-12));

  CHECK_THROWS_AS(encode_count(17, 4), std::domain_error);
}

TEST_CASE("all-zero oracles never leave the fixed point") {
  const OracleTable oracle(6, std::vector<std::uint8_t>(64, 0));
  const CountResult result = count_solutions(oracle, NonlinearMap::doubling());
  CHECK(result.n_estimated == 0);
  CHECK(result.iterations == 8);  // the N + 2 cap certifies n = 0
  CHECK(result.final_theta == 0.0);
  CHECK(result.decision == Decision::kNotExists);
}

TEST_CASE("a single solution at N=4 doubles up in exactly 4 steps") {
  const OracleTable oracle = OracleTable::from_solutions(4, {11});
  const CountResult result = count_solutions(oracle, NonlinearMap::doubling());
  CHECK(result.iterations == 4);  // 0.0625 -> 0.125 -> 0.25 -> 0.5 -> 1.0
  CHECK(result.final_theta == 1.0);
  CHECK(result.n_estimated == 1);
  CHECK(result.decision == Decision::kExists);
}

TEST_CASE("four solutions at N=3 cross in one step") {
  const OracleTable oracle = OracleTable::from_solutions(3, {0, 3, 5, 6});
  const CountResult result = count_solutions(oracle, NonlinearMap::doubling());
  CHECK(result.iterations == 1);
  CHECK(result.n_estimated == 4);
}

TEST_CASE("count_solutions rejects smooth maps and bad thresholds") {
  const OracleTable oracle = OracleTable::from_solutions(3, {1});
  CHECK_THROWS_AS(count_solutions(oracle, NonlinearMap::smooth(0.5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_solutions(oracle, NonlinearMap::doubling(), 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(count_solutions(oracle, NonlinearMap::doubling(), 0.0),
                  std::domain_error);
}

TEST_CASE("counting is exact for all 256 oracles at N=3") {
  for (std::size_t bits = 0; bits < 256; ++bits) {
    const OracleTable oracle = all_n3_table(bits);
    const CountResult result = count_solutions(oracle, NonlinearMap::doubling());
    REQUIRE(result.n_estimated == brute_force_count(oracle));
    REQUIRE(oracle.consultations() == 1);
    REQUIRE(result.iterations <= 5);
  }
}

TEST_CASE("counting is exact on random oracles for N in 4..10") {
  SplitMix64 seeder(31337);
  for (std::size_t n_bits = 4; n_bits <= 10; ++n_bits) {
    for (int trial = 0; trial < 60; ++trial) {
      const OracleTable oracle = OracleTable::random(n_bits, seeder.next_u64());
      const CountResult result =
          count_solutions(oracle, NonlinearMap::doubling());
      REQUIRE(result.n_estimated == brute_force_count(oracle));
      REQUIRE(result.iterations <= n_bits + 2);
    }
  }
}

TEST_CASE("one oracle consultation per counting run") {
  const OracleTable oracle = OracleTable::random(6, 7);
  CHECK(oracle.consultations() == 0);
  (void)count_solutions(oracle, NonlinearMap::doubling());
  CHECK(oracle.consultations() == 1);
  (void)count_solutions(oracle, NonlinearMap::doubling());
  CHECK(oracle.consultations() == 2);
}

TEST_CASE("worst-case n=1 iteration counts stay within [N-1, N+1]") {
  SplitMix64 rng(404);
  for (std::size_t n_bits = 3; n_bits <= 12; ++n_bits) {
    const std::size_t x = rng.next_below(std::size_t{1} << n_bits);
    const OracleTable oracle = OracleTable::from_solutions(n_bits, {x});
    const CountResult result = count_solutions(oracle, NonlinearMap::doubling());
    REQUIRE(result.n_estimated == 1);
    REQUIRE(result.iterations >= n_bits - 1);
    REQUIRE(result.iterations <= n_bits + 1);
  }
}

TEST_CASE("n = 0 is never misreported for N up to 12") {
  for (std::size_t n_bits = 1; n_bits <= 12; ++n_bits) {
    const OracleTable oracle(
        n_bits, std::vector<std::uint8_t>(std::size_t{1} << n_bits, 0));
    const CountResult result = count_solutions(oracle, NonlinearMap::doubling());
    REQUIRE(result.n_estimated == 0);
    REQUIRE(result.decision == Decision::kNotExists);
    REQUIRE_FALSE(decide_existence(oracle, NonlinearMap::doubling()));
    REQUIRE_FALSE(decide_existence(oracle, NonlinearMap::smooth(0.9)));
  }
}

TEST_CASE("existence decisions match brute force exhaustively at N=3") {
  for (std::size_t bits = 0; bits < 256; ++bits) {
    const OracleTable oracle = all_n3_table(bits);
    const bool expected = brute_force_count(oracle) > 0;
    REQUIRE(decide_existence(oracle, NonlinearMap::doubling()) == expected);
    REQUIRE(decide_existence(oracle, NonlinearMap::smooth(std::numbers::ln2)) ==
            expected);
    // Slow spreading still decides correctly below its attractor.
    REQUIRE(decide_existence(oracle, NonlinearMap::smooth(0.25), 0.45) ==
            expected);
  }
}

TEST_CASE("single-solution existence at N=5") {
  const OracleTable oracle = OracleTable::from_solutions(5, {19});
  CHECK(decide_existence(oracle, NonlinearMap::doubling()));
  CHECK(decide_existence(oracle, NonlinearMap::smooth(std::numbers::ln2)));
}

TEST_CASE("unreachable smooth thresholds are rejected up front") {
  const OracleTable oracle = OracleTable::from_solutions(3, {1});
  CHECK_THROWS_AS(decide_existence(oracle, NonlinearMap::smooth(0.25)),
                  std::domain_error);
}
