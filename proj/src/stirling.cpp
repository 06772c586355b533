#include "nilcount/stirling.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace nilcount {

BigInt StirlingTable::at(long n, long k) const {
  if (n < 0) {
    throw std::invalid_argument("stirling2: n must be non-negative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<long>(rows_.size())) {
      return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }
  }
  std::unique_lock lock(mutex_);
  grow_locked(n);
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

void StirlingTable::ensure(long max_n) {
  if (max_n < 0) {
    return;
  }
  std::unique_lock lock(mutex_);
  grow_locked(max_n);
}

long StirlingTable::max_n() const {
  std::shared_lock lock(mutex_);
  return static_cast<long>(rows_.size()) - 1;
}

std::vector<std::vector<BigInt>> StirlingTable::snapshot() const {
  std::shared_lock lock(mutex_);
  return rows_;
}

void StirlingTable::replace(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) {
    throw std::invalid_argument("StirlingTable::replace: empty triangle");
  }
  std::unique_lock lock(mutex_);
  rows_ = std::move(rows);
}

void StirlingTable::reset() {
  std::unique_lock lock(mutex_);
  rows_ = {{BigInt(1)}};
}

void StirlingTable::grow_locked(long max_n) const {
  for (long n = static_cast<long>(rows_.size()); n <= max_n; ++n) {
    auto const& prev = rows_.back();
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = 0;
    for (long k = 1; k < n; ++k) {
      row[static_cast<size_t>(k)] =
          k * prev[static_cast<size_t>(k)] + prev[static_cast<size_t>(k) - 1];
    }
    row[static_cast<size_t>(n)] = 1;
    rows_.push_back(std::move(row));
  }
}

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

BigInt stirling2(long n, long k) { return stirling_table().at(n, k); }

BigInt partial_partition_count(long n, long k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("partial_partition_count: arguments must be non-negative");
  }
  return stirling2(n + 1, k + 1);
}

BigInt bell(long m) {
  if (m < 0) {
    throw std::invalid_argument("bell: m must be non-negative");
  }
  stirling_table().ensure(m);
  BigInt sum = 0;
  for (long k = 0; k <= m; ++k) {
    sum += stirling_table().at(m, k);
  }
  return sum;
}

BigInt factorial(long n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: n must be non-negative");
  }
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt binomial(long n, long k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be non-negative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the partial products are binomials
  }
  return result;
}

BigInt scaled_stirling(long p, long q) {
  if (p < 0 || q < 0) {
    throw std::invalid_argument("scaled_stirling: arguments must be non-negative");
  }
  if (q > p) {
    return 0;
  }
  return stirling2(p, q) << static_cast<unsigned>(p - q);
}

}  // namespace nilcount
