#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "nilcount/stirling.hpp"
#include "test_support.hpp"

using namespace nilcount;

TEST_CASE("stirling2 matches known values and boundaries", "[stirling]") {
  REQUIRE(stirling2(5, 2) == 15);
  REQUIRE(stirling2(0, 0) == 1);
  REQUIRE(stirling2(7, 9) == 0);
  REQUIRE(stirling2(10, 2) == 511);
  REQUIRE(stirling2(4, 0) == 0);
  REQUIRE(stirling2(4, -1) == 0);
  REQUIRE_THROWS_AS(stirling2(-1, 0), std::invalid_argument);
}

TEST_CASE("stirling2 satisfies the additive recurrence", "[stirling]") {
  for (long n = 1; n <= 30; ++n) {
    for (long k = 1; k <= n; ++k) {
      REQUIRE(stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1));
    }
  }
}

TEST_CASE("partial partition count is the shifted Stirling number", "[stirling]") {
  REQUIRE(partial_partition_count(4, 1) == 15);
  for (long n = 0; n <= 10; ++n) {
    REQUIRE(partial_partition_count(n, 0) == 1);
  }
  // Independent oracle: enumerate the 2-block partial partitions of a 4-set.
  REQUIRE(partial_partition_count(4, 2) == 25);
  REQUIRE(testsupport::brute_partial_partition_count(4, 2) == 25);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      REQUIRE(BigInt(testsupport::brute_partial_partition_count(n, k)) ==
              partial_partition_count(n, k));
    }
  }
  // Lemma identity S(n,k) + (k+1) S(n,k+1) = S(n+1,k+1).
  for (long n = 0; n <= 30; ++n) {
    for (long k = 0; k <= n; ++k) {
      REQUIRE(stirling2(n, k) + (k + 1) * stirling2(n, k + 1) == stirling2(n + 1, k + 1));
    }
  }
}

TEST_CASE("bell numbers from row sums and the binomial recurrence", "[stirling]") {
  REQUIRE(bell(0) == 1);
  REQUIRE(bell(5) == 52);
  REQUIRE(bell(10) == 115975);
  std::vector<BigInt> b = {BigInt(1)};
  for (long m = 0; m <= 20; ++m) {
    REQUIRE(b.back() == bell(m));
    BigInt next = 0;
    for (long j = 0; j <= m; ++j) {
      next += binomial(m, j) * b[static_cast<size_t>(j)];
    }
    b.push_back(next);
  }
}

TEST_CASE("binomial and factorial basics", "[stirling]") {
  REQUIRE(binomial(4, 2) == 6);
  REQUIRE(factorial(4) == 24);
  REQUIRE(binomial(6, -1) == 0);
  REQUIRE(binomial(6, 7) == 0);
  BigInt sum = 0;
  for (long t = 1; t <= 4; ++t) {
    sum += binomial(4, t) * pow_int(2, static_cast<unsigned long>(t - 1));
  }
  REQUIRE(sum == 40);
}

TEST_CASE("scaled stirling numbers", "[stirling]") {
  REQUIRE(scaled_stirling(0, 0) == 1);
  REQUIRE(scaled_stirling(1, 1) == 1);
  REQUIRE(scaled_stirling(3, 2) == 6);
  REQUIRE(scaled_stirling(2, 3) == 0);
  REQUIRE(scaled_stirling(3, 0) == 0);
  for (long p = 1; p <= 20; ++p) {
    for (long q = 1; q <= p; ++q) {
      REQUIRE(scaled_stirling(p, q) ==
              scaled_stirling(p - 1, q - 1) + 2 * q * scaled_stirling(p - 1, q));
    }
  }
  // Oracle: count self-dual matching-orthogonal partitions directly.
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= p; ++q) {
      REQUIRE(BigInt(testsupport::brute_orthogonal_selfdual(p, q)) == scaled_stirling(p, q));
    }
  }
}

TEST_CASE("stirling table is safe under concurrent growth", "[stirling]") {
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([t]() {
      for (long n = 0; n < 40; ++n) {
        (void)stirling2(40 + n + t, n);
      }
    });
  }
  for (auto& worker : pool) {
    worker.join();
  }
  REQUIRE(stirling2(82, 5) == stirling2(81, 4) + 5 * stirling2(81, 5));
}
