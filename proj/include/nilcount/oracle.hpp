#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nilcount/bigint.hpp"
#include "nilcount/partitions.hpp"

namespace nilcount {

using Perm = std::vector<uint8_t>;  // pi[x] = image of x, 0-based

Perm identity_perm(int r);
Perm inverse_perm(const Perm& pi);
Perm compose_perm(const Perm& first, const Perm& then);  // x -> then[first[x]]
// Cycle notation with 1-based points, e.g. "(1 2)(3 4 5)" or "(1,2)"; empty
// or "id" is the identity.
Perm parse_cycles(const std::string& text, int r);
IntegerPartition cycle_type(const Perm& pi);

// An element of S_r x <twist>: the coordinatewise grid action, optionally
// followed by the coordinate swap (the two commute).
struct GroupElement {
  Perm pi;
  bool twisted = false;
};

// Explicit rank-k partial partition of the r x r grid.  cells[x*r + y] holds
// the block label of (x,y): 0 is the vacant part, labels 1..k appear in order
// of first occurrence in row-major scan (canonical form).
struct PartialPartition {
  int r = 0;
  int k = 0;
  std::vector<uint8_t> cells;

  bool operator==(const PartialPartition&) const = default;

  void canonicalize();
  bool is_canonical() const;
  static PartialPartition from_cells(int r, std::vector<uint8_t> cells);
};

// Relocates every cell by g and recanonicalizes the labels.
PartialPartition act(const PartialPartition& P, const GroupElement& g);

struct Flags {
  bool rigid = false;       // only the identity stabilizes
  bool semirigid = false;   // every stabilizer fixes each block setwise
  bool commutative = false; // every block symmetric under the twist
  bool selfdual = false;    // fixed by some twisted element
};

Flags classify(const PartialPartition& P);

// Streams every canonical rank-k partial partition exactly once (ascending
// lexicographic cell arrays); returns how many were visited.  When sharded,
// subtrees at a fixed prefix depth are dealt round-robin to shards, so the
// union over shard_index = 0..shard_count-1 is the full stream.
unsigned long long enumerate_partitions(
    int r, int k, const std::function<void(const PartialPartition&)>& visit,
    int shard_count = 1, int shard_index = 0);

// Number of enumerated partitions fixed by g.
BigInt fixed_points_brute(int r, int k, const GroupElement& g);

// Number of partitions fixed by g whose blocks are additionally fixed setwise
// by pi (g untwisted) or by pi^2 (g twisted) — the populations counted by the
// frieze formula at modulus 1 and by the twisted fixed-point formula.
BigInt fixed_points_brute_semirigid(int r, int k, const GroupElement& g);

struct CensusOptions {
  bool allow_slow = false;  // permits n = 7
  int threads = 0;          // 0 = hardware concurrency
};

struct ClassificationReport {
  long n = 0;
  std::map<std::string, BigInt> counts;
};

// Keys of ClassificationReport.counts in output order.
const std::vector<std::string>& census_keys();

// Exhaustive census at order n: streams canonical partitions rank by rank,
// keeps the lexicographic minimum of each orbit as representative, classifies
// it, and aggregates counts up to identity, presentation, isomorphism and
// equivalence.  n <= 6, or 7 with allow_slow.
ClassificationReport orbit_census(long n, const CensusOptions& options = {});

}  // namespace nilcount
