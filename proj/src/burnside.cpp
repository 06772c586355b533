#include "nilcount/burnside.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "nilcount/cycle_stats.hpp"
#include "nilcount/stirling.hpp"

namespace nilcount {

long long CcycleMultiset::total_cycles() const {
  long long total = 0;
  for (auto const& [length, count] : classes) {
    (void)length;
    total += count;
  }
  return total;
}

long long CcycleMultiset::total_cells() const {
  long long total = 0;
  for (auto const& [length, count] : classes) {
    total += static_cast<long long>(length) * count;
  }
  return total;
}

CcycleMultiset ccycle_multiset(const IntegerPartition& lambda) {
  return {ccycle_length_classes(lambda)};
}

namespace {

std::vector<int> divisors_of(int n) {
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
    }
  }
  return divs;
}

// Designated-element recursion over the c-cycle length classes.  State is the
// occupancy vector of remaining cycles per class plus the remaining rank; the
// designated cycle (first non-empty class) is either left vacant or placed in
// a block whose further members are chosen per class by binomials.  A block
// of t cycles with modulus d contributes d^(t-1) friezes and d units of rank.
class FixedPointCounter {
 public:
  explicit FixedPointCounter(const IntegerPartition& lambda) {
    for (auto const& [length, count] : ccycle_length_classes(lambda)) {
      lengths_.push_back(length);
      occupancy_.push_back(count);
    }
  }

  BigInt count(long k) {
    if (k < 0) {
      return 0;
    }
    return recurse(occupancy_, k);
  }

 private:
  BigInt recurse(std::vector<long long>& occ, long k) {
    if (k == 0) {
      return 1;  // remaining cycles all stay vacant
    }
    size_t first = 0;
    while (first < occ.size() && occ[first] == 0) {
      ++first;
    }
    if (first == occ.size()) {
      return 0;
    }
    auto key = std::make_pair(occ, k);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }

    // Designated cycle stays vacant.
    --occ[first];
    BigInt total = recurse(occ, k);
    ++occ[first];

    // Designated cycle lies in a block; choose the block's other members.
    std::vector<long long> chosen(occ.size(), 0);
    auto choose_rest = [&](auto&& self, size_t cls, long long block_size, BigInt ways,
                           int common) -> void {
      if (cls == occ.size()) {
        for (int d : divisors_of(common)) {
          if (d > k) {
            break;
          }
          for (size_t j = 0; j < occ.size(); ++j) {
            occ[j] -= chosen[j];
          }
          --occ[first];
          total += ways * pow_int(d, static_cast<unsigned long>(block_size - 1)) *
                   recurse(occ, k - d);
          ++occ[first];
          for (size_t j = 0; j < occ.size(); ++j) {
            occ[j] += chosen[j];
          }
        }
        return;
      }
      long long avail = occ[cls] - (cls == first ? 1 : 0);
      for (long long take = 0; take <= avail; ++take) {
        chosen[cls] = take;
        BigInt w = take == 0 ? ways : ways * binomial(avail, take);
        int g = take == 0 ? common : std::gcd(common, lengths_[cls]);
        self(self, cls + 1, block_size + take, w, g);
      }
      chosen[cls] = 0;
    };
    choose_rest(choose_rest, 0, 1, BigInt(1), lengths_[first]);

    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<int> lengths_;
  std::vector<long long> occupancy_;
  std::map<std::pair<std::vector<long long>, long>, BigInt> memo_;
};

}  // namespace

BigInt fixed_partial_partitions(const IntegerPartition& lambda, long k) {
  if (k < 0) {
    throw std::invalid_argument("fixed_partial_partitions: k must be non-negative");
  }
  return FixedPointCounter(lambda).count(k);
}

std::vector<ExactTerm> iso_classes_exact_terms(long n) {
  if (n < 3) {
    throw std::invalid_argument("no 3-nilpotent semigroup has order below 3");
  }
  std::vector<ExactTerm> terms;
  for (int r = 1; r <= n - 2; ++r) {
    long k = n - r - 1;
    for (auto const& lambda : partitions_of(r)) {
      BigRat value(fixed_partial_partitions(lambda, k), weight(lambda));
      terms.push_back({r, lambda, std::move(value)});
    }
  }
  return terms;
}

BigInt iso_classes_exact(long n) {
  BigRat total = 0;
  for (auto const& term : iso_classes_exact_terms(n)) {
    total += term.value;
  }
  if (!is_integral(total)) {
    throw std::logic_error("iso_classes_exact: orbit count must be integral");
  }
  return rat_num(total);
}

}  // namespace nilcount
