#pragma once

#include <string>
#include <vector>

#include "nilcount/bigint.hpp"
#include "nilcount/partitions.hpp"

namespace nilcount {

// Catalogue of the counting kinds exposed by the CLI; each maps to one
// formula and one published table column.
enum class CountKind {
  identity,
  presentation,
  commutative_identity,
  commutative_presentation,
  rank_stratified,
  tn_over_nfact,
  semirigid_iso_bound,
  commutative_semirigid_bound,
  selfdual_semirigid_bound,
  equivalence_semirigid_bound,
  iso_exact,
};

std::string to_string(CountKind kind);
CountKind parse_count_kind(const std::string& name);
std::vector<CountKind> all_count_kinds();

struct BoundTerm {
  int r = 0;
  IntegerPartition lambda;
  BigRat value;
};

// A bound evaluated at one n: the exact rational sum, its floor, and the
// per-(r, lambda) terms it decomposes into.
struct BoundResult {
  long n = 0;
  BigRat exact;
  BigInt floored;
  std::vector<BoundTerm> terms;
};

// Counts of 3-nilpotent semigroups of order n, up to presentation and up to
// identity: sums of S(r^2+1, n-r), the latter weighted by n!/r!.
BigInt t_presentation(long n);
BigInt t_identity(long n);

// Same counts restricted to commutative multiplications; the grid is replaced
// by its r(r+1)/2 symmetric cells.
BigInt commutative_presentation(long n);
BigInt commutative_identity(long n);

// Number of rank-r semigroups up to presentation over all orders: B(r^2+1)-1.
BigInt rank_stratified_presentation(int r);

// t_n / n! as an exact rational; a lower bound for the isomorphism count.
BigRat tn_over_nfact(long n);

// Independent route to t_n via the alternating-sum expansion of the Stirling
// numbers; used as a cross-check only.
BigInt t_identity_inclusion_exclusion(long n);

// Upper bound for partitions of rank n-r-1 fixed by a permutation of type
// lambda composed with the twist, counting the (Q,R) normal forms built from
// associate pairs and singular cycles of the squared action.
BigInt twisted_fixed_points(const IntegerPartition& lambda, long n);

// The four bound theorems; exact rationals with a single final floor.
BoundResult semirigid_iso_bound(long n);
BoundResult commutative_semirigid_bound(long n);
BoundResult selfdual_semirigid_bound(long n);
BoundResult equivalence_semirigid_bound(long n);

// Diagnostic correction term for cycle types 1^mu1 2^mu2: partitions with
// exactly one modulus-2 frieze, divided by the weight.  Requires k >= 2.
BigRat correction_term_1a2b(int mu1, int mu2, long n);

}  // namespace nilcount
