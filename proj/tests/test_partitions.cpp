#include <catch2/catch_amalgamated.hpp>

#include "nilcount/partitions.hpp"
#include "nilcount/stirling.hpp"

using namespace nilcount;

TEST_CASE("partitions are generated in reverse-lexicographic order", "[partitions]") {
  auto of2 = partitions_of(2);
  REQUIRE(of2.size() == 2);
  REQUIRE(of2[0].to_string() == "2^1");
  REQUIRE(of2[1].to_string() == "1^2");

  auto of1 = partitions_of(1);
  REQUIRE(of1.size() == 1);
  REQUIRE(of1[0].to_string() == "1^1");

  REQUIRE(partitions_of(8).size() == 22);

  auto of4 = partitions_of(4);
  std::vector<std::string> expected = {"4^1", "3^1,1^1", "2^2", "2^1,1^2", "1^4"};
  REQUIRE(of4.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    REQUIRE(of4[i].to_string() == expected[i]);
  }
}

TEST_CASE("every partition appears exactly once with valid shape", "[partitions]") {
  for (int r = 1; r <= 12; ++r) {
    auto all = partitions_of(r);
    for (auto const& lambda : all) {
      int sum = 0;
      for (size_t i = 0; i < lambda.parts.size(); ++i) {
        REQUIRE(lambda.parts[i].length >= 1);
        REQUIRE(lambda.parts[i].multiplicity >= 1);
        if (i > 0) {
          REQUIRE(lambda.parts[i].length < lambda.parts[i - 1].length);
        }
        sum += lambda.parts[i].length * lambda.parts[i].multiplicity;
      }
      REQUIRE(sum == r);
      REQUIRE(lambda.r == r);
    }
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = i + 1; j < all.size(); ++j) {
        REQUIRE(!(all[i] == all[j]));
      }
    }
  }
}

TEST_CASE("weights give the class equation", "[partitions]") {
  REQUIRE(weight(IntegerPartition::parse("2^2")) == 8);
  REQUIRE(weight(IntegerPartition::parse("1^1,2^1")) == 2);
  for (int r = 1; r <= 10; ++r) {
    REQUIRE(weight(IntegerPartition::parse("1^" + std::to_string(r))) == factorial(r));
    // Conjugacy class sizes r!/w partition the whole group.
    BigRat total = 0;
    for (auto const& lambda : partitions_of(r)) {
      total += BigRat(factorial(r), weight(lambda));
    }
    REQUIRE(total == BigRat(factorial(r)));
  }
}

TEST_CASE("partition parsing round-trips and rejects junk", "[partitions]") {
  for (int r = 1; r <= 9; ++r) {
    for (auto const& lambda : partitions_of(r)) {
      REQUIRE(IntegerPartition::parse(lambda.to_string()) == lambda);
    }
  }
  REQUIRE(IntegerPartition::parse("3") == IntegerPartition::parse("3^1"));
  REQUIRE(IntegerPartition::parse("2,2") == IntegerPartition::parse("2^2"));
  REQUIRE(IntegerPartition::parse("1^2,2^1").expanded() == std::vector<int>{2, 1, 1});
  REQUIRE_THROWS_AS(IntegerPartition::parse(""), std::invalid_argument);
  REQUIRE_THROWS_AS(IntegerPartition::parse("0^2"), std::invalid_argument);
  REQUIRE_THROWS_AS(IntegerPartition::parse("2^"), std::invalid_argument);
  REQUIRE_THROWS_AS(IntegerPartition::parse("x"), std::invalid_argument);
}
