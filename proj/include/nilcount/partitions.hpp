#pragma once

#include <string>
#include <vector>

#include "nilcount/bigint.hpp"

namespace nilcount {

// Cycle type of a permutation of r points, stored as (length, multiplicity)
// pairs with strictly decreasing lengths.  The text form is "2^1,1^3".
struct IntegerPartition {
  struct Part {
    int length = 0;
    int multiplicity = 0;
    bool operator==(const Part&) const = default;
  };

  std::vector<Part> parts;
  int r = 0;  // sum of length * multiplicity

  bool operator==(const IntegerPartition&) const = default;

  // Lengths with multiplicity, descending, e.g. 2^1,1^2 -> {2,1,1}.
  std::vector<int> expanded() const;
  std::string to_string() const;

  // Builds from an unordered list of positive part lengths.
  static IntegerPartition from_lengths(const std::vector<int>& lengths);
  // Parses "1^2,2^1" (also bare lengths, "3" meaning 3^1).
  static IntegerPartition parse(const std::string& text);
};

// All partitions of r, each exactly once, in reverse-lexicographic order of
// the descending part lists: r first, 1^r last.
std::vector<IntegerPartition> partitions_of(int r);

// w(lambda) = prod(length^multiplicity * multiplicity!); the conjugacy class
// of this cycle type has r!/w elements.
BigInt weight(const IntegerPartition& lambda);

}  // namespace nilcount
