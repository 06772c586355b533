#include "nilcount/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nilcount/stirling.hpp"

namespace nilcount {

Perm identity_perm(int r) {
  Perm pi(static_cast<size_t>(r));
  std::iota(pi.begin(), pi.end(), static_cast<uint8_t>(0));
  return pi;
}

Perm inverse_perm(const Perm& pi) {
  Perm inv(pi.size());
  for (size_t x = 0; x < pi.size(); ++x) {
    inv[pi[x]] = static_cast<uint8_t>(x);
  }
  return inv;
}

Perm compose_perm(const Perm& first, const Perm& then) {
  if (first.size() != then.size()) {
    throw std::invalid_argument("compose_perm: size mismatch");
  }
  Perm out(first.size());
  for (size_t x = 0; x < first.size(); ++x) {
    out[x] = then[first[x]];
  }
  return out;
}

Perm parse_cycles(const std::string& text, int r) {
  Perm pi = identity_perm(r);
  if (text.empty() || text == "id" || text == "()") {
    return pi;
  }
  std::vector<bool> seen(static_cast<size_t>(r), false);
  size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') {
      throw std::invalid_argument("parse_cycles: expected '(' in '" + text + "'");
    }
    size_t close = text.find(')', pos);
    if (close == std::string::npos) {
      throw std::invalid_argument("parse_cycles: unbalanced '(' in '" + text + "'");
    }
    std::vector<int> cycle;
    size_t p = pos + 1;
    while (p < close) {
      if (std::isspace(static_cast<unsigned char>(text[p])) || text[p] == ',') {
        ++p;
        continue;
      }
      size_t q = p;
      while (q < close && std::isdigit(static_cast<unsigned char>(text[q]))) {
        ++q;
      }
      if (q == p) {
        throw std::invalid_argument("parse_cycles: expected point in '" + text + "'");
      }
      int point = std::stoi(text.substr(p, q - p));
      if (point < 1 || point > r) {
        throw std::invalid_argument("parse_cycles: point out of range in '" + text + "'");
      }
      if (seen[static_cast<size_t>(point - 1)]) {
        throw std::invalid_argument("parse_cycles: repeated point in '" + text + "'");
      }
      seen[static_cast<size_t>(point - 1)] = true;
      cycle.push_back(point - 1);
      p = q;
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
      pi[static_cast<size_t>(cycle[i])] =
          static_cast<uint8_t>(cycle[(i + 1) % cycle.size()]);
    }
    pos = close + 1;
  }
  return pi;
}

IntegerPartition cycle_type(const Perm& pi) {
  std::vector<int> lengths;
  std::vector<bool> seen(pi.size(), false);
  for (size_t start = 0; start < pi.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    int len = 0;
    size_t x = start;
    do {
      seen[x] = true;
      x = pi[x];
      ++len;
    } while (x != start);
    lengths.push_back(len);
  }
  return IntegerPartition::from_lengths(lengths);
}

void PartialPartition::canonicalize() {
  std::vector<uint8_t> relabel(static_cast<size_t>(k) + 1, 0);
  uint8_t next = 0;
  for (auto& cell : cells) {
    if (cell == 0) {
      continue;
    }
    if (relabel[cell] == 0) {
      relabel[cell] = ++next;
    }
    cell = relabel[cell];
  }
}

bool PartialPartition::is_canonical() const {
  uint8_t next = 0;
  for (uint8_t cell : cells) {
    if (cell > next) {
      if (cell != next + 1) {
        return false;
      }
      ++next;
    }
  }
  return next == k;
}

PartialPartition PartialPartition::from_cells(int r, std::vector<uint8_t> cells) {
  if (static_cast<int>(cells.size()) != r * r) {
    throw std::invalid_argument("PartialPartition: need r*r cells");
  }
  int k = 0;
  std::vector<bool> used(cells.size() + 1, false);
  for (uint8_t cell : cells) {
    if (!used[cell]) {
      used[cell] = true;
      if (cell != 0) {
        ++k;
      }
    }
  }
  PartialPartition P{r, k, std::move(cells)};
  P.canonicalize();
  return P;
}

namespace {

// Grid image of a group element: cell_map[x*r+y] is the target index of
// (x,y) under the c-action (plus twist when flagged).
std::vector<int> cell_map(const Perm& pi, bool twisted, int r) {
  std::vector<int> map(static_cast<size_t>(r) * r);
  for (int x = 0; x < r; ++x) {
    for (int y = 0; y < r; ++y) {
      int tx = pi[static_cast<size_t>(x)];
      int ty = pi[static_cast<size_t>(y)];
      map[static_cast<size_t>(x) * r + y] = twisted ? ty * r + tx : tx * r + ty;
    }
  }
  return map;
}

// Lexicographic comparison of the canonicalized image of P against P itself,
// without materializing the image.  inv[t] is the source cell landing on
// target t (the cell map of the inverse element).  Returns -1/0/+1; on
// equality, blockwise reports whether the labels mapped identically, i.e.
// whether the element fixes every block setwise.
int compare_image(const uint8_t* cells, const int* inv, int ncells, int k, bool& blockwise) {
  uint8_t relabel[32];
  std::memset(relabel, 0, static_cast<size_t>(k) + 1);
  uint8_t next = 0;
  bool identical = true;
  for (int t = 0; t < ncells; ++t) {
    uint8_t raw = cells[inv[t]];
    uint8_t v = 0;
    if (raw != 0) {
      v = relabel[raw];
      if (v == 0) {
        v = ++next;
        relabel[raw] = v;
        if (raw != v) {
          identical = false;
        }
      }
    }
    uint8_t have = cells[t];
    if (v != have) {
      return v < have ? -1 : 1;
    }
  }
  blockwise = identical;
  return 0;
}

bool blocks_fixed_by(const PartialPartition& P, const std::vector<int>& map) {
  for (size_t c = 0; c < P.cells.size(); ++c) {
    if (P.cells[static_cast<size_t>(map[c])] != P.cells[c]) {
      return false;
    }
  }
  return true;
}

bool is_commutative(const PartialPartition& P) {
  for (int x = 0; x < P.r; ++x) {
    for (int y = x + 1; y < P.r; ++y) {
      if (P.cells[static_cast<size_t>(x) * P.r + y] !=
          P.cells[static_cast<size_t>(y) * P.r + x]) {
        return false;
      }
    }
  }
  return true;
}

// Canonical partitions are restricted-growth label arrays; the enumeration
// walks cells in row-major order, choosing the vacant label, a label already
// in use, or the next fresh one, pruning when the remaining cells cannot
// introduce the missing labels.  Shards split the walk at a fixed depth.
template <typename Visitor>
unsigned long long enumerate_impl(int r, int k, Visitor&& visit, int shard_count,
                                  int shard_index) {
  const int ncells = r * r;
  if (k < 1 || k > ncells) {
    throw std::invalid_argument("enumerate_partitions: need 1 <= k <= r^2");
  }
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count) {
    throw std::invalid_argument("enumerate_partitions: bad shard");
  }
  const int shard_depth = shard_count > 1 ? std::min(ncells - 1, 6) : -1;
  unsigned long long subtree = 0;
  unsigned long long visited = 0;
  PartialPartition P;
  P.r = r;
  P.k = k;
  P.cells.assign(static_cast<size_t>(ncells), 0);
  auto recurse = [&](auto&& self, int pos, int used) -> void {
    if (pos == ncells) {
      if (used == k) {
        ++visited;
        visit(static_cast<const PartialPartition&>(P));
      }
      return;
    }
    if (used + (ncells - pos) < k) {
      return;
    }
    if (pos == shard_depth) {
      if (static_cast<int>(subtree++ % static_cast<unsigned long long>(shard_count)) !=
          shard_index) {
        return;
      }
    }
    int limit = used < k ? used + 1 : used;
    for (int label = 0; label <= limit; ++label) {
      P.cells[static_cast<size_t>(pos)] = static_cast<uint8_t>(label);
      self(self, pos + 1, std::max(used, label));
    }
    P.cells[static_cast<size_t>(pos)] = 0;
  };
  recurse(recurse, 0, 0);
  return visited;
}

std::vector<Perm> all_perms(int r) {
  Perm pi = identity_perm(r);
  std::vector<Perm> perms;
  do {
    perms.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return perms;
}

}  // namespace

PartialPartition act(const PartialPartition& P, const GroupElement& g) {
  if (static_cast<int>(g.pi.size()) != P.r) {
    throw std::invalid_argument("act: permutation degree does not match rank");
  }
  auto map = cell_map(g.pi, g.twisted, P.r);
  PartialPartition out;
  out.r = P.r;
  out.k = P.k;
  out.cells.assign(P.cells.size(), 0);
  for (size_t c = 0; c < P.cells.size(); ++c) {
    out.cells[static_cast<size_t>(map[c])] = P.cells[c];
  }
  out.canonicalize();
  return out;
}

unsigned long long enumerate_partitions(
    int r, int k, const std::function<void(const PartialPartition&)>& visit,
    int shard_count, int shard_index) {
  return enumerate_impl(r, k, visit, shard_count, shard_index);
}

Flags classify(const PartialPartition& input) {
  PartialPartition P = input;
  P.canonicalize();
  const int ncells = P.r * P.r;
  Flags flags;
  flags.commutative = is_commutative(P);
  flags.rigid = true;
  flags.semirigid = true;
  for (auto const& pi : all_perms(P.r)) {
    auto inv = inverse_perm(pi);
    bool is_id = pi == identity_perm(P.r);
    if (!is_id) {
      auto inv_map = cell_map(inv, false, P.r);
      bool blockwise = false;
      if (compare_image(P.cells.data(), inv_map.data(), ncells, P.k, blockwise) == 0) {
        flags.rigid = false;
        if (!blockwise) {
          flags.semirigid = false;
        }
      }
    }
    auto inv_map_tw = cell_map(inv, true, P.r);
    bool blockwise = false;
    if (compare_image(P.cells.data(), inv_map_tw.data(), ncells, P.k, blockwise) == 0) {
      flags.selfdual = true;
    }
  }
  return flags;
}

BigInt fixed_points_brute(int r, int k, const GroupElement& g) {
  if (static_cast<int>(g.pi.size()) != r) {
    throw std::invalid_argument("fixed_points_brute: permutation degree mismatch");
  }
  auto inv_map = cell_map(inverse_perm(g.pi), g.twisted, r);
  unsigned long long count = 0;
  enumerate_impl(
      r, k,
      [&](const PartialPartition& P) {
        bool blockwise = false;
        if (compare_image(P.cells.data(), inv_map.data(), r * r, k, blockwise) == 0) {
          ++count;
        }
      },
      1, 0);
  return BigInt(count);
}

BigInt fixed_points_brute_semirigid(int r, int k, const GroupElement& g) {
  if (static_cast<int>(g.pi.size()) != r) {
    throw std::invalid_argument("fixed_points_brute_semirigid: permutation degree mismatch");
  }
  auto inv_map = cell_map(inverse_perm(g.pi), g.twisted, r);
  // Blocks must be unions of the cycles of pi (untwisted) or pi^2 (twisted).
  Perm h = g.twisted ? compose_perm(g.pi, g.pi) : g.pi;
  auto h_map = cell_map(h, false, r);
  unsigned long long count = 0;
  enumerate_impl(
      r, k,
      [&](const PartialPartition& P) {
        bool blockwise = false;
        if (compare_image(P.cells.data(), inv_map.data(), r * r, k, blockwise) == 0 &&
            blocks_fixed_by(P, h_map)) {
          ++count;
        }
      },
      1, 0);
  return BigInt(count);
}

const std::vector<std::string>& census_keys() {
  static const std::vector<std::string> keys = {
      "presentation",       "identity",     "iso",
      "equivalence",        "iso_semirigid", "iso_rigid",
      "iso_commutative",    "iso_selfdual",  "equivalence_semirigid",
      "selfdual_semirigid"};
  return keys;
}

namespace {

struct RankTally {
  unsigned long long streamed = 0;
  unsigned long long orbit_size_sum = 0;
  unsigned long long iso = 0;
  unsigned long long iso_rigid = 0;
  unsigned long long iso_semirigid = 0;
  unsigned long long iso_commutative = 0;
  unsigned long long iso_selfdual = 0;
  unsigned long long selfdual_semirigid = 0;
  unsigned long long equivalence = 0;
  unsigned long long equivalence_semirigid = 0;

  RankTally& operator+=(const RankTally& other) {
    streamed += other.streamed;
    orbit_size_sum += other.orbit_size_sum;
    iso += other.iso;
    iso_rigid += other.iso_rigid;
    iso_semirigid += other.iso_semirigid;
    iso_commutative += other.iso_commutative;
    iso_selfdual += other.iso_selfdual;
    selfdual_semirigid += other.selfdual_semirigid;
    equivalence += other.equivalence;
    equivalence_semirigid += other.equivalence_semirigid;
    return *this;
  }
};

RankTally census_rank(int r, int k, int shard_count, int shard_index) {
  const int ncells = r * r;
  auto perms = all_perms(r);
  const unsigned long long group_order = perms.size();
  // Inverse cell maps, untwisted first (identity leads), then twisted.
  std::vector<std::vector<int>> inv_plain;
  std::vector<std::vector<int>> inv_twisted;
  inv_plain.reserve(perms.size());
  inv_twisted.reserve(perms.size());
  for (auto const& pi : perms) {
    auto inv = inverse_perm(pi);
    inv_plain.push_back(cell_map(inv, false, r));
    inv_twisted.push_back(cell_map(inv, true, r));
  }

  RankTally tally;
  enumerate_impl(
      r, k,
      [&](const PartialPartition& P) {
        ++tally.streamed;
        const uint8_t* cells = P.cells.data();
        // Scan the plain group: reject unless P is the orbit minimum, and
        // collect the automorphisms along the way.
        unsigned long long aut = 1;
        bool all_blockwise = true;
        for (size_t idx = 1; idx < inv_plain.size(); ++idx) {
          bool blockwise = false;
          int cmp = compare_image(cells, inv_plain[idx].data(), ncells, k, blockwise);
          if (cmp < 0) {
            return;
          }
          if (cmp == 0) {
            ++aut;
            all_blockwise &= blockwise;
          }
        }
        // Twisted scan: equivalence minimality and self-duality.
        bool selfdual = false;
        bool equivalence_min = true;
        for (size_t idx = 0; idx < inv_twisted.size(); ++idx) {
          bool blockwise = false;
          int cmp = compare_image(cells, inv_twisted[idx].data(), ncells, k, blockwise);
          if (cmp < 0) {
            equivalence_min = false;
            if (selfdual) {
              break;
            }
          } else if (cmp == 0) {
            selfdual = true;
            if (!equivalence_min) {
              break;
            }
          }
        }
        bool semirigid = all_blockwise;
        ++tally.iso;
        tally.orbit_size_sum += group_order / aut;
        if (aut == 1) {
          ++tally.iso_rigid;
        }
        if (semirigid) {
          ++tally.iso_semirigid;
        }
        if (is_commutative(P)) {
          ++tally.iso_commutative;
        }
        if (selfdual) {
          ++tally.iso_selfdual;
          if (semirigid) {
            ++tally.selfdual_semirigid;
          }
        }
        if (equivalence_min) {
          ++tally.equivalence;
          if (semirigid) {
            ++tally.equivalence_semirigid;
          }
        }
      },
      shard_count, shard_index);
  return tally;
}

}  // namespace

ClassificationReport orbit_census(long n, const CensusOptions& options) {
  if (n < 3) {
    throw std::invalid_argument("no 3-nilpotent semigroup has order below 3");
  }
  const long cap = options.allow_slow ? 7 : 6;
  if (n > cap) {
    throw std::invalid_argument(
        "orbit_census: n exceeds the feasibility cap (6, or 7 with allow-slow)");
  }
  int threads = options.threads;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) {
      threads = 1;
    }
  }

  RankTally total;
  BigInt presentation_total = 0;
  BigInt identity_total = 0;
  BigInt n_fact = factorial(n);
  for (int r = 1; r <= static_cast<int>(n) - 2; ++r) {
    int k = static_cast<int>(n) - r - 1;
    if (k < 1 || k > r * r) {
      continue;
    }
    RankTally rank_tally;
    BigInt expected_stream = partial_partition_count(static_cast<long>(r) * r, k);
    if (threads > 1 && expected_stream > 200000) {
      std::vector<RankTally> parts(static_cast<size_t>(threads));
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(threads));
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back(
            [&, t]() { parts[static_cast<size_t>(t)] = census_rank(r, k, threads, t); });
      }
      for (auto& worker : pool) {
        worker.join();
      }
      for (auto const& part : parts) {
        rank_tally += part;
      }
    } else {
      rank_tally = census_rank(r, k, 1, 0);
    }
    if (BigInt(rank_tally.streamed) != expected_stream) {
      throw std::logic_error("orbit_census: stream cardinality mismatch");
    }
    if (rank_tally.orbit_size_sum != rank_tally.streamed) {
      throw std::logic_error("orbit_census: orbit sizes do not cover the stream");
    }
    total += rank_tally;
    presentation_total += BigInt(rank_tally.streamed);
    identity_total += BigInt(rank_tally.streamed) * (n_fact / factorial(r));
  }

  ClassificationReport report;
  report.n = n;
  report.counts["presentation"] = presentation_total;
  report.counts["identity"] = identity_total;
  report.counts["iso"] = total.iso;
  report.counts["equivalence"] = total.equivalence;
  report.counts["iso_semirigid"] = total.iso_semirigid;
  report.counts["iso_rigid"] = total.iso_rigid;
  report.counts["iso_commutative"] = total.iso_commutative;
  report.counts["iso_selfdual"] = total.iso_selfdual;
  report.counts["equivalence_semirigid"] = total.equivalence_semirigid;
  report.counts["selfdual_semirigid"] = total.selfdual_semirigid;
  return report;
}

}  // namespace nilcount
