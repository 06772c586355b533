#pragma once

#include <utility>
#include <vector>

#include "nilcount/bigint.hpp"
#include "nilcount/partitions.hpp"

namespace nilcount {

// C-cycles of a permutation of type lambda on the r x r grid, aggregated by
// length; counts sum to beta_1(lambda), length-weighted counts to r^2.
struct CcycleMultiset {
  std::vector<std::pair<int, long long>> classes;  // (length, count), ascending length

  long long total_cycles() const;
  long long total_cells() const;
};

CcycleMultiset ccycle_multiset(const IntegerPartition& lambda);

// Number of rank-k partial partitions of the grid fixed by any permutation of
// type lambda.  Counts (block partition of the c-cycles, modulus assignment)
// pairs with moduli summing to k, each weighted by d^(t-1) friezes per
// t-cycle block of modulus d.
BigInt fixed_partial_partitions(const IntegerPartition& lambda, long k);

struct ExactTerm {
  int r = 0;
  IntegerPartition lambda;
  BigRat value;  // fixed_partial_partitions(lambda, n-r-1) / weight(lambda)
};

// Exact number of isomorphism classes of 3-nilpotent semigroups of order n,
// by orbit counting over all ranks and cycle types.  The rational sum is
// provably integral; a non-integral sum aborts.
BigInt iso_classes_exact(long n);
std::vector<ExactTerm> iso_classes_exact_terms(long n);

}  // namespace nilcount
