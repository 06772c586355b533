#pragma once

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcount/bigint.hpp"
#include "nilcount/oracle.hpp"

namespace nilcount {

enum class OutputFormat { csv, json };
OutputFormat parse_format(const std::string& name);

// One labeled series {n -> value}; oracle cells beyond their cap are empty.
struct CountTable {
  std::string kind;
  std::vector<std::pair<long, std::optional<BigInt>>> values;

  bool operator==(const CountTable&) const = default;
};

nlohmann::ordered_json count_table_to_json(const CountTable& table);
CountTable count_table_from_json(const nlohmann::json& j);

enum class TableId { T1, T2, T3, T4, T5 };
TableId parse_table_id(const std::string& name);
std::string to_string(TableId id);

struct RunOptions {
  bool allow_slow = false;
  int threads = 0;
};

// Columns of one published table over n in [n_lo, n_hi].  Oracle columns are
// filled up to their cap (6, or 7 with allow_slow where the column permits).
std::vector<CountTable> table_columns(TableId id, long n_lo, long n_hi,
                                      const RunOptions& options);

// CSV with header "n,<kind>,...", LF line endings; missing cells are "-".
std::string render_table_csv(const std::vector<CountTable>& columns);
std::string render_table_json(const std::string& label,
                              const std::vector<CountTable>& columns);

std::string render_report_csv(const ClassificationReport& report);
std::string render_report_json(const ClassificationReport& report);

}  // namespace nilcount
