#include "nilcount/bounds.hpp"

#include <stdexcept>

#include "nilcount/cycle_stats.hpp"
#include "nilcount/stirling.hpp"

namespace nilcount {

namespace {

void require_order(long n) {
  if (n < 3) {
    throw std::invalid_argument("no 3-nilpotent semigroup has order below 3");
  }
}

// Accumulates the double sum over ranks r = 1..n-2 and cycle types of r.
template <typename TermFn>
BoundResult sum_over_cycle_types(long n, TermFn&& term) {
  require_order(n);
  BoundResult result;
  result.n = n;
  result.exact = 0;
  for (int r = 1; r <= n - 2; ++r) {
    for (auto const& lambda : partitions_of(r)) {
      BigRat value = term(lambda, r);
      result.exact += value;
      result.terms.push_back({r, lambda, std::move(value)});
    }
  }
  result.floored = floor_rat(result.exact);
  return result;
}

}  // namespace

std::string to_string(CountKind kind) {
  switch (kind) {
    case CountKind::identity: return "identity";
    case CountKind::presentation: return "presentation";
    case CountKind::commutative_identity: return "commutative_identity";
    case CountKind::commutative_presentation: return "commutative_presentation";
    case CountKind::rank_stratified: return "rank_stratified";
    case CountKind::tn_over_nfact: return "tn_over_nfact";
    case CountKind::semirigid_iso_bound: return "semirigid_iso_bound";
    case CountKind::commutative_semirigid_bound: return "commutative_semirigid_bound";
    case CountKind::selfdual_semirigid_bound: return "selfdual_semirigid_bound";
    case CountKind::equivalence_semirigid_bound: return "equivalence_semirigid_bound";
    case CountKind::iso_exact: return "iso_exact";
  }
  throw std::logic_error("to_string: unknown CountKind");
}

std::vector<CountKind> all_count_kinds() {
  return {CountKind::identity,
          CountKind::presentation,
          CountKind::commutative_identity,
          CountKind::commutative_presentation,
          CountKind::rank_stratified,
          CountKind::tn_over_nfact,
          CountKind::semirigid_iso_bound,
          CountKind::commutative_semirigid_bound,
          CountKind::selfdual_semirigid_bound,
          CountKind::equivalence_semirigid_bound,
          CountKind::iso_exact};
}

CountKind parse_count_kind(const std::string& name) {
  for (CountKind kind : all_count_kinds()) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  throw std::invalid_argument("unknown count kind '" + name + "'");
}

BigInt t_presentation(long n) {
  require_order(n);
  BigInt total = 0;
  for (long r = 1; r <= n - 2; ++r) {
    total += stirling2(r * r + 1, n - r);
  }
  return total;
}

BigInt t_identity(long n) {
  require_order(n);
  BigInt n_fact = factorial(n);
  BigInt total = 0;
  for (long r = 1; r <= n - 2; ++r) {
    total += stirling2(r * r + 1, n - r) * (n_fact / factorial(r));
  }
  return total;
}

BigInt commutative_presentation(long n) {
  require_order(n);
  BigInt total = 0;
  for (long r = 1; r <= n - 2; ++r) {
    total += stirling2(r * (r + 1) / 2 + 1, n - r);
  }
  return total;
}

BigInt commutative_identity(long n) {
  require_order(n);
  BigInt n_fact = factorial(n);
  BigInt total = 0;
  for (long r = 1; r <= n - 2; ++r) {
    total += stirling2(r * (r + 1) / 2 + 1, n - r) * (n_fact / factorial(r));
  }
  return total;
}

BigInt rank_stratified_presentation(int r) {
  if (r < 1) {
    throw std::invalid_argument("rank_stratified_presentation: r must be positive");
  }
  return bell(static_cast<long>(r) * r + 1) - 1;
}

BigRat tn_over_nfact(long n) {
  require_order(n);
  BigRat total = 0;
  for (long r = 1; r <= n - 2; ++r) {
    total += BigRat(stirling2(r * r + 1, n - r), factorial(r));
  }
  return total;
}

BigInt t_identity_inclusion_exclusion(long n) {
  require_order(n);
  // Smallest rank whose grid is large enough for the required partition rank.
  long r0 = 1;
  while (r0 * r0 < n - r0 - 1) {
    ++r0;
  }
  BigInt n_fact = factorial(n);
  BigInt total = 0;
  for (long r = r0; r <= n - 2; ++r) {
    BigInt inner = 0;
    for (long j = 0; j <= n - r; ++j) {
      BigInt term = binomial(n - r, j) * pow_int(j, static_cast<unsigned long>(r * r + 1));
      if ((n - r - j) % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    BigInt scale = n_fact / factorial(r);
    BigInt denom = factorial(n - r);
    if (inner % denom != 0) {
      throw std::logic_error("t_identity_inclusion_exclusion: non-integral term");
    }
    total += scale * (inner / denom);
  }
  return total;
}

BoundResult semirigid_iso_bound(long n) {
  return sum_over_cycle_types(n, [&](const IntegerPartition& lambda, int r) {
    return BigRat(stirling2(beta(lambda, 1) + 1, n - r), weight(lambda));
  });
}

BoundResult commutative_semirigid_bound(long n) {
  return sum_over_cycle_types(n, [&](const IntegerPartition& lambda, int r) {
    return BigRat(stirling2(gamma(lambda) + 1, n - r), weight(lambda));
  });
}

BigInt twisted_fixed_points(const IntegerPartition& lambda, long n) {
  int r = lambda.r;
  if (r < 1 || r > n - 2) {
    throw std::invalid_argument("twisted_fixed_points: need 1 <= |lambda| <= n-2");
  }
  long k = n - r - 1;
  long long z = zeta(lambda);
  long long e = eta(lambda);
  BigInt total = 0;
  for (long long j = 0; j <= z; ++j) {
    BigInt choose_pairs = binomial(z, j);
    long long t_max = std::min(j, static_cast<long long>(k / 2));
    for (long long t = 0; t <= t_max; ++t) {
      total += choose_pairs * scaled_stirling(j, t) * stirling2(z + e - j + 1, n - r - 2 * t);
    }
  }
  return total;
}

BoundResult selfdual_semirigid_bound(long n) {
  return sum_over_cycle_types(n, [&](const IntegerPartition& lambda, int /*r*/) {
    return BigRat(twisted_fixed_points(lambda, n), weight(lambda));
  });
}

BoundResult equivalence_semirigid_bound(long n) {
  return sum_over_cycle_types(n, [&](const IntegerPartition& lambda, int r) {
    BigInt numerator =
        stirling2(beta(lambda, 1) + 1, n - r) + twisted_fixed_points(lambda, n);
    return BigRat(numerator, 2 * weight(lambda));
  });
}

BigRat correction_term_1a2b(int mu1, int mu2, long n) {
  if (mu1 < 0 || mu2 < 1) {
    throw std::invalid_argument("correction_term_1a2b: need mu1 >= 0 and mu2 >= 1");
  }
  long r = mu1 + 2L * mu2;
  if (r > n - 2) {
    throw std::invalid_argument("correction_term_1a2b: rank exceeds n-2");
  }
  long k = n - r - 1;
  if (k < 2) {
    throw std::invalid_argument("correction_term_1a2b: no modulus-2 frieze fits below rank 2");
  }
  long long beta1 = static_cast<long long>(mu1 + mu2) * (mu1 + mu2) +
                    static_cast<long long>(mu2) * mu2;
  long long beta2 = 2LL * mu2 * (mu1 + mu2);
  BigInt partitions = 0;
  for (long long t = 1; t <= beta2; ++t) {
    partitions += binomial(beta2, t) * pow_int(2, static_cast<unsigned long>(t - 1)) *
                  stirling2(beta1 - t + 1, k - 1);
  }
  // The closed forms for k = 2 and k = 3 double as internal checks.
  if (k == 2) {
    BigInt expected = (pow_int(3, static_cast<unsigned long>(beta2)) - 1) / 2;
    if (partitions != expected) {
      throw std::logic_error("correction_term_1a2b: k=2 closed form mismatch");
    }
  } else if (k == 3) {
    BigInt expected = (pow_int(2, static_cast<unsigned long>(beta1 + beta2)) -
                       pow_int(2, static_cast<unsigned long>(beta1)) -
                       pow_int(3, static_cast<unsigned long>(beta2)) + 1) /
                      2;
    if (partitions != expected) {
      throw std::logic_error("correction_term_1a2b: k=3 closed form mismatch");
    }
  }
  BigInt w = pow_int(2, static_cast<unsigned long>(mu2)) * factorial(mu1) * factorial(mu2);
  return BigRat(partitions, w);
}

}  // namespace nilcount
