#include "nilcount/cycle_stats.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace nilcount {

namespace {

bool even(int n) { return n % 2 == 0; }

// 1 iff length == 2 (mod 4): the x-cycles carrying off-diagonal singular
// c-cycles of pi^2.
int twice_odd(int n) { return n % 4 == 2 ? 1 : 0; }

}  // namespace

std::vector<std::pair<int, long long>> ccycle_length_classes(const IntegerPartition& lambda) {
  std::map<int, long long> by_length;
  for (auto const& a : lambda.parts) {
    for (auto const& b : lambda.parts) {
      long long pairs = static_cast<long long>(a.multiplicity) * b.multiplicity;
      int g = std::gcd(a.length, b.length);
      int l = std::lcm(a.length, b.length);
      by_length[l] += pairs * g;
    }
  }
  return {by_length.begin(), by_length.end()};
}

long long beta(const IntegerPartition& lambda, int d) {
  if (d < 1) {
    throw std::invalid_argument("beta: d must be positive");
  }
  long long total = 0;
  for (auto const& [length, count] : ccycle_length_classes(lambda)) {
    if (length % d == 0) {
      total += count;
    }
  }
  return total;
}

long long delta(const IntegerPartition& lambda) {
  long long total = 0;
  for (auto const& part : lambda.parts) {
    total += static_cast<long long>(part.multiplicity) * (1 + (even(part.length) ? 1 : 0));
  }
  return total;
}

long long gamma(const IntegerPartition& lambda) {
  long long sum = beta(lambda, 1) + delta(lambda);
  if (sum % 2 != 0) {
    throw std::logic_error("gamma: beta + delta must be even");
  }
  return sum / 2;
}

IntegerPartition square_cycle_type(const IntegerPartition& lambda) {
  std::vector<int> lengths;
  for (auto const& part : lambda.parts) {
    for (int i = 0; i < part.multiplicity; ++i) {
      if (even(part.length)) {
        lengths.push_back(part.length / 2);
        lengths.push_back(part.length / 2);
      } else {
        lengths.push_back(part.length);
      }
    }
  }
  return IntegerPartition::from_lengths(lengths);
}

std::vector<std::pair<int, long long>> ccycles_of_square(const IntegerPartition& lambda) {
  return ccycle_length_classes(square_cycle_type(lambda));
}

long long eta(const IntegerPartition& lambda) {
  long long total = 0;
  for (auto const& part : lambda.parts) {
    int e = even(part.length) ? 1 : 0;
    total += static_cast<long long>(part.multiplicity) * (1 - e + 2 * twice_odd(part.length));
  }
  return total;
}

long long zeta(const IntegerPartition& lambda) {
  long long total = 0;
  // Square panels C_i x C_i, one term per x-cycle.
  for (auto const& part : lambda.parts) {
    int e = even(part.length) ? 1 : 0;
    long long numerator =
        static_cast<long long>(1 + e) * (part.length + 1) - 2 * (twice_odd(part.length) + 1);
    if (numerator % 2 != 0) {
      throw std::logic_error("zeta: non-integral panel term");
    }
    total += part.multiplicity * (numerator / 2);
  }
  // Unordered pairs of distinct x-cycles; cycles of equal length count as
  // distinct, hence the choose-2 term within a length class.
  auto pair_term = [](int la, int lb) -> long long {
    int eij = (even(la) || even(lb)) ? 1 : 0;
    return static_cast<long long>(1 + eij) * std::gcd(la, lb);
  };
  for (size_t a = 0; a < lambda.parts.size(); ++a) {
    auto const& pa = lambda.parts[a];
    total += pair_term(pa.length, pa.length) * (static_cast<long long>(pa.multiplicity) *
                                                (pa.multiplicity - 1) / 2);
    for (size_t b = a + 1; b < lambda.parts.size(); ++b) {
      auto const& pb = lambda.parts[b];
      total += pair_term(pa.length, pb.length) * static_cast<long long>(pa.multiplicity) *
               pb.multiplicity;
    }
  }
  return total;
}

CycleStats cycle_stats(const IntegerPartition& lambda) {
  CycleStats stats;
  stats.weight = weight(lambda);
  // beta_d is reported for every divisor of a c-cycle length; other d give 0.
  for (auto const& [length, count] : ccycle_length_classes(lambda)) {
    for (int d = 1; d <= length; ++d) {
      if (length % d == 0) {
        stats.beta.try_emplace(d, 0);
      }
    }
    (void)count;
  }
  for (auto& [d, value] : stats.beta) {
    value = beta(lambda, d);
  }
  stats.delta = delta(lambda);
  stats.gamma = gamma(lambda);
  stats.zeta = zeta(lambda);
  stats.eta = eta(lambda);
  return stats;
}

}  // namespace nilcount
