#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nilcount/bigint.hpp"
#include "nilcount/partitions.hpp"

namespace nilcount {

// Per-cycle-type statistics feeding the bound formulas.  A permutation of
// type lambda acts coordinatewise on the r x r grid X*X; its cycles there
// ("c-cycles") arise in blocks C_i x C_j carrying gcd(l_i,l_j) cycles of
// length lcm(l_i,l_j) each.

// Aggregated c-cycle lengths of the grid action: (length, count), sorted by
// length; counts sum to beta_1 and length-weighted counts sum to r^2.
std::vector<std::pair<int, long long>> ccycle_length_classes(const IntegerPartition& lambda);

// Number of c-cycles whose length is divisible by d.
long long beta(const IntegerPartition& lambda, int d);

// Number of symmetric c-cycles: sum of mult * (1 + [length even]).
long long delta(const IntegerPartition& lambda);

// (beta_1 + delta) / 2, the number of building blocks for symmetric
// partitions; always integral.
long long gamma(const IntegerPartition& lambda);

// Cycle type of pi^2 for pi of type lambda: odd parts persist, even parts
// split into two halves.
IntegerPartition square_cycle_type(const IntegerPartition& lambda);

// C-cycle length classes of pi^2 acting on the grid.
std::vector<std::pair<int, long long>> ccycles_of_square(const IntegerPartition& lambda);

// Associate pairs and singular cycles among the c-cycles of pi^2 under the
// pairing G <-> G*pi*twist; satisfies 2*zeta + eta = #c-cycles of pi^2.
long long zeta(const IntegerPartition& lambda);
long long eta(const IntegerPartition& lambda);

struct CycleStats {
  BigInt weight;
  std::map<int, long long> beta;  // d -> beta_d, for every d dividing a c-cycle length
  long long delta = 0;
  long long gamma = 0;
  long long zeta = 0;
  long long eta = 0;
};

CycleStats cycle_stats(const IntegerPartition& lambda);

}  // namespace nilcount
