#pragma once

#include <string>

namespace nilcount {

// Binary cache of the Stirling triangle: versioned magic, then row count,
// then each entry as a big-endian length-prefixed magnitude.  Bit-exact
// across platforms.

struct CacheStatus {
  bool ok = false;
  long max_n = -1;
  std::string error;
};

// Ensures the global table holds rows 0..max_n and writes them out.
CacheStatus save_stirling_cache(const std::string& path, long max_n);

// Reads the file and, if it passes validation, installs it as the global
// table.  Sampled validation checks anchors and the recurrence along a
// diagonal; full validation recomputes the recurrence for every entry.
// A corrupt file leaves the global table untouched.
CacheStatus load_stirling_cache(const std::string& path, bool full_validation = false);

// Removes the cache file (if present) and resets the in-memory table.
CacheStatus clear_stirling_cache(const std::string& path);

}  // namespace nilcount
