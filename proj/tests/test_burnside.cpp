#include <catch2/catch_amalgamated.hpp>

#include "nilcount/burnside.hpp"
#include "nilcount/bounds.hpp"
#include "nilcount/cycle_stats.hpp"
#include "nilcount/oracle.hpp"
#include "nilcount/stirling.hpp"
#include "test_support.hpp"

using namespace nilcount;

namespace {
IntegerPartition lam(const std::string& text) { return IntegerPartition::parse(text); }
}  // namespace

TEST_CASE("c-cycle multisets", "[burnside]") {
  REQUIRE(ccycle_multiset(lam("1^2")).classes ==
          std::vector<std::pair<int, long long>>{{1, 4}});
  REQUIRE(ccycle_multiset(lam("2^1")).classes ==
          std::vector<std::pair<int, long long>>{{2, 2}});
  REQUIRE(ccycle_multiset(lam("1^1,2^1")).classes ==
          std::vector<std::pair<int, long long>>{{1, 1}, {2, 4}});
  for (int r = 1; r <= 7; ++r) {
    for (auto const& lambda : partitions_of(r)) {
      auto multiset = ccycle_multiset(lambda);
      REQUIRE(multiset.total_cells() == static_cast<long long>(r) * r);
      REQUIRE(multiset.total_cycles() == beta(lambda, 1));
    }
  }
}

TEST_CASE("fixed partial partitions of the identity reduce to Stirling numbers",
          "[burnside]") {
  for (int r = 1; r <= 4; ++r) {
    auto identity = lam("1^" + std::to_string(r));
    for (long k = 0; k <= static_cast<long>(r) * r; ++k) {
      REQUIRE(fixed_partial_partitions(identity, k) ==
              partial_partition_count(static_cast<long>(r) * r, k));
    }
  }
}

TEST_CASE("fixed partial partitions of small cycle types", "[burnside]") {
  REQUIRE(fixed_partial_partitions(lam("2^1"), 1) == 3);
  REQUIRE(fixed_partial_partitions(lam("2^1"), 2) == 5);
  REQUIRE(fixed_partial_partitions(lam("2^1"), 3) == 2);  // one frieze pair d=2, d=1
  REQUIRE(fixed_partial_partitions(lam("2^1"), 4) == 1);  // both c-cycles at modulus 2
  // The modulus-2 excess over the all-singleton count is the 40 partitions of
  // the k = 2 correction at rank 3.
  REQUIRE(fixed_partial_partitions(lam("1^1,2^1"), 2) - stirling2(6, 3) == 40);
}

TEST_CASE("unrestricted sums of fixed counts", "[burnside]") {
  // Summed over all ranks the identity fixes every partial partition.
  BigInt total = 0;
  for (long k = 0; k <= 9; ++k) {
    total += fixed_partial_partitions(lam("1^3"), k);
  }
  REQUIRE(total == bell(10));
  // For other types the unrestricted total matches brute force over all k.
  for (int r = 2; r <= 3; ++r) {
    for (auto const& lambda : partitions_of(r)) {
      Perm pi = testsupport::representative_of(lambda);
      BigInt dp_total = 0;
      BigInt brute_total = 1;  // the empty partition, rank 0
      for (long k = 0; k <= static_cast<long>(r) * r; ++k) {
        dp_total += fixed_partial_partitions(lambda, k);
        if (k >= 1) {
          brute_total += fixed_points_brute(r, static_cast<int>(k), {pi, false});
        }
      }
      REQUIRE(dp_total == brute_total);
    }
  }
}

TEST_CASE("fixed counts agree with brute force for r <= 3", "[burnside]") {
  for (int r = 1; r <= 3; ++r) {
    for (auto const& lambda : partitions_of(r)) {
      Perm pi = testsupport::representative_of(lambda);
      for (int k = 1; k <= r * r; ++k) {
        REQUIRE(fixed_partial_partitions(lambda, k) ==
                fixed_points_brute(r, k, {pi, false}));
      }
    }
  }
}

TEST_CASE("exact isomorphism class counts", "[burnside]") {
  REQUIRE(iso_classes_exact(3) == 1);
  REQUIRE(iso_classes_exact(4) == 9);
  REQUIRE(iso_classes_exact(5) == 118);
  REQUIRE(iso_classes_exact(6) == 4671);
  REQUIRE(iso_classes_exact(7) == 1199989);
  REQUIRE(iso_classes_exact(8) == BigInt("3661522792"));
}

TEST_CASE("per-term decomposition reproduces the worked n = 5 sum", "[burnside]") {
  auto terms = iso_classes_exact_terms(5);
  BigRat rank2 = 0;
  std::map<std::string, BigRat> rank3;
  for (auto const& term : terms) {
    if (term.r == 2) {
      rank2 += term.value;
    } else {
      rank3[term.lambda.to_string()] = term.value;
    }
  }
  REQUIRE(rank2 == BigRat(15));  // 13 semirigid + 2 modulus-2
  REQUIRE(rank3.at("1^3") == BigRat(511, 6));
  REQUIRE(rank3.at("2^1,1^1") == BigRat(31, 2));
  REQUIRE(rank3.at("3^1") == BigRat(7, 3));
}

TEST_CASE("exact count dominates the semirigid bound", "[burnside]") {
  for (long n = 3; n <= 9; ++n) {
    REQUIRE(iso_classes_exact(n) >= semirigid_iso_bound(n).floored);
  }
}
