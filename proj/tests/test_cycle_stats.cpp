#include <catch2/catch_amalgamated.hpp>

#include "nilcount/cycle_stats.hpp"
#include "test_support.hpp"

using namespace nilcount;

namespace {
IntegerPartition lam(const std::string& text) { return IntegerPartition::parse(text); }
}  // namespace

TEST_CASE("beta counts c-cycles by divisibility", "[cycle_stats]") {
  REQUIRE(beta(lam("1^2"), 1) == 4);
  REQUIRE(beta(lam("2^1"), 1) == 2);
  REQUIRE(beta(lam("1^1,2^1"), 1) == 5);
  REQUIRE(beta(lam("1^1,2^1"), 2) == 4);
  for (int r = 1; r <= 8; ++r) {
    REQUIRE(beta(lam("1^" + std::to_string(r)), 1) == static_cast<long long>(r) * r);
  }
  // Example values used for the n = 7 corrections.
  REQUIRE(beta(lam("1^2,2^1"), 1) == 10);
  REQUIRE(beta(lam("1^2,2^1"), 2) == 6);
  REQUIRE(beta(lam("2^2"), 1) == 8);
  REQUIRE(beta(lam("2^2"), 2) == 8);
}

TEST_CASE("delta and gamma", "[cycle_stats]") {
  REQUIRE(delta(lam("2^1")) == 2);
  REQUIRE(gamma(lam("2^1")) == 2);
  REQUIRE(delta(lam("1^2")) == 2);
  REQUIRE(gamma(lam("1^2")) == 3);
  REQUIRE(gamma(lam("1^3")) == 6);
  REQUIRE(gamma(lam("1^1,2^1")) == 4);
  REQUIRE(gamma(lam("3^1")) == 2);
  for (int r = 1; r <= 8; ++r) {
    for (auto const& lambda : partitions_of(r)) {
      long long b = beta(lambda, 1);
      long long d = delta(lambda);
      REQUIRE((b - d) % 2 == 0);  // skew cycles pair up
      REQUIRE(2 * gamma(lambda) == b + d);
    }
  }
}

TEST_CASE("zeta and eta", "[cycle_stats]") {
  REQUIRE(zeta(lam("1^2")) == 1);
  REQUIRE(eta(lam("1^2")) == 2);
  REQUIRE(zeta(lam("2^1")) == 1);
  REQUIRE(eta(lam("2^1")) == 2);
  REQUIRE(zeta(lam("1^3")) == 3);
  REQUIRE(eta(lam("1^3")) == 3);
  REQUIRE(zeta(lam("3^1")) == 1);
  REQUIRE(eta(lam("3^1")) == 1);
  REQUIRE(zeta(lam("4^1")) == 4);
  REQUIRE(eta(lam("4^1")) == 0);
  // Every c-cycle of the squared action is singular or in one associate pair.
  for (int r = 1; r <= 8; ++r) {
    for (auto const& lambda : partitions_of(r)) {
      long long cycles = 0;
      for (auto const& [length, count] : ccycles_of_square(lambda)) {
        (void)length;
        cycles += count;
      }
      REQUIRE(2 * zeta(lambda) + eta(lambda) == cycles);
    }
  }
}

TEST_CASE("c-cycles of the squared permutation", "[cycle_stats]") {
  auto classes = ccycles_of_square(lam("2^1"));
  REQUIRE(classes == std::vector<std::pair<int, long long>>{{1, 4}});
  for (int r = 1; r <= 6; ++r) {
    auto of_identity = ccycles_of_square(lam("1^" + std::to_string(r)));
    REQUIRE(of_identity ==
            std::vector<std::pair<int, long long>>{{1, static_cast<long long>(r) * r}});
  }
  auto of4 = ccycles_of_square(lam("4^1"));
  long long total = 0;
  for (auto const& [length, count] : of4) {
    (void)length;
    total += count;
  }
  REQUIRE(total == 8);
}

TEST_CASE("statistics agree with direct classification of a concrete permutation",
          "[cycle_stats]") {
  for (int r = 1; r <= 5; ++r) {
    for (auto const& lambda : partitions_of(r)) {
      Perm pi = testsupport::representative_of(lambda);
      REQUIRE(cycle_type(pi) == lambda);
      // Direct walk over the grid cycles of pi.
      std::vector<int> cycle_of(static_cast<size_t>(r) * r, -1);
      std::vector<int> lengths;
      for (int x = 0; x < r; ++x) {
        for (int y = 0; y < r; ++y) {
          if (cycle_of[static_cast<size_t>(x) * r + y] >= 0) {
            continue;
          }
          int cx = x;
          int cy = y;
          int len = 0;
          do {
            cycle_of[static_cast<size_t>(cx) * r + cy] = static_cast<int>(lengths.size());
            cx = pi[static_cast<size_t>(cx)];
            cy = pi[static_cast<size_t>(cy)];
            ++len;
          } while (cx != x || cy != y);
          lengths.push_back(len);
        }
      }
      for (int d = 1; d <= r; ++d) {
        long long direct = 0;
        for (int len : lengths) {
          if (len % d == 0) {
            ++direct;
          }
        }
        REQUIRE(beta(lambda, d) == direct);
      }
      // A c-cycle is symmetric iff the twist maps it onto itself.
      std::vector<bool> symmetric(lengths.size(), true);
      for (int x = 0; x < r; ++x) {
        for (int y = 0; y < r; ++y) {
          if (cycle_of[static_cast<size_t>(x) * r + y] !=
              cycle_of[static_cast<size_t>(y) * r + x]) {
            symmetric[static_cast<size_t>(cycle_of[static_cast<size_t>(x) * r + y])] = false;
          }
        }
      }
      long long symmetric_count = 0;
      for (bool flag : symmetric) {
        if (flag) {
          ++symmetric_count;
        }
      }
      REQUIRE(delta(lambda) == symmetric_count);
    }
  }
}

TEST_CASE("cycle_stats bundles the CLI fields", "[cycle_stats]") {
  auto stats = cycle_stats(lam("1^1,2^1"));
  REQUIRE(stats.weight == 2);
  REQUIRE(stats.beta.at(1) == 5);
  REQUIRE(stats.beta.at(2) == 4);
  REQUIRE(stats.delta == 3);
  REQUIRE(stats.gamma == 4);
  REQUIRE(stats.zeta == 3);
  REQUIRE(stats.eta == 3);
}
