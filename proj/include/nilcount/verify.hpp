#pragma once

#include <iosfwd>
#include <string>

namespace nilcount {

enum class VerifyLevel { fast, full };
VerifyLevel parse_verify_level(const std::string& name);

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::fast;
  bool allow_slow = false;  // extends the full oracle sweep to n = 7
  int threads = 0;
  std::string cache_path;  // when set, the file itself is fully validated
};

// Runs the cross-check suites, one "ok"/"FAIL" line per check; failures carry
// the first mismatching (n, kind, expected, got).  Returns 0 iff all passed.
int run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace nilcount
