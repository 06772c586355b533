#pragma once

#include <shared_mutex>
#include <vector>

#include "nilcount/bigint.hpp"

namespace nilcount {

// Memo table for Stirling numbers of the second kind, built by the additive
// recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1), S(0,0) = 1.  Rows are grown on
// demand; readers take a shared lock so concurrent queries are safe.
class StirlingTable {
 public:
  // S(n,k); zero outside the triangle (k < 0, k > n, or k = 0 with n > 0).
  BigInt at(long n, long k) const;

  void ensure(long max_n);
  long max_n() const;

  // Snapshot/replace of the triangle, used by the binary cache.
  std::vector<std::vector<BigInt>> snapshot() const;
  void replace(std::vector<std::vector<BigInt>> rows);
  void reset();

 private:
  void grow_locked(long max_n) const;

  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<BigInt>> rows_ = {{BigInt(1)}};
};

StirlingTable& stirling_table();

// S(n,k), total in k: out-of-range k yields 0.  Requires n >= 0.
BigInt stirling2(long n, long k);

// Number of partial partitions of an n-set into k parts: S(n+1, k+1).
BigInt partial_partition_count(long n, long k);

// Bell number, the row sum of the Stirling triangle.
BigInt bell(long m);

BigInt factorial(long n);

// Zero for k < 0 or k > n.
BigInt binomial(long n, long k);

// Diagonally scaled Stirling number 2^(p-q) * S(p,q); counts self-dual
// partitions orthogonal to a perfect matching.
BigInt scaled_stirling(long p, long q);

}  // namespace nilcount
