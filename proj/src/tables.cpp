#include "nilcount/tables.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <stdexcept>

#include "nilcount/bounds.hpp"
#include "nilcount/burnside.hpp"

namespace nilcount {

using nlohmann::json;
using nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") {
    return OutputFormat::csv;
  }
  if (name == "json") {
    return OutputFormat::json;
  }
  throw std::invalid_argument("unknown format '" + name + "' (expected csv or json)");
}

ordered_json count_table_to_json(const CountTable& table) {
  ordered_json j;
  j["kind"] = table.kind;
  j["values"] = ordered_json::array();
  for (auto const& [n, value] : table.values) {
    ordered_json cell;
    cell["n"] = n;
    if (value.has_value()) {
      cell["value"] = to_decimal(*value);
    } else {
      cell["value"] = nullptr;
    }
    j["values"].push_back(std::move(cell));
  }
  return j;
}

CountTable count_table_from_json(const json& j) {
  CountTable table;
  table.kind = j.at("kind").get<std::string>();
  for (auto const& cell : j.at("values")) {
    long n = cell.at("n").get<long>();
    if (cell.at("value").is_null()) {
      table.values.emplace_back(n, std::nullopt);
    } else {
      table.values.emplace_back(n, BigInt(cell.at("value").get<std::string>()));
    }
  }
  return table;
}

TableId parse_table_id(const std::string& name) {
  if (name == "T1" || name == "t1") return TableId::T1;
  if (name == "T2" || name == "t2") return TableId::T2;
  if (name == "T3" || name == "t3") return TableId::T3;
  if (name == "T4" || name == "t4") return TableId::T4;
  if (name == "T5" || name == "t5") return TableId::T5;
  throw std::invalid_argument("unknown table '" + name + "' (expected T1..T5)");
}

std::string to_string(TableId id) {
  switch (id) {
    case TableId::T1: return "T1";
    case TableId::T2: return "T2";
    case TableId::T3: return "T3";
    case TableId::T4: return "T4";
    case TableId::T5: return "T5";
  }
  throw std::logic_error("to_string: unknown TableId");
}

namespace {

// A table column: a name, the value at n, and for oracle columns the largest
// n the census supports.
struct ColumnSpec {
  std::string kind;
  long oracle_cap = 0;  // 0 = formula column, no cap
  std::function<BigInt(long, const std::string&)> eval;
};

std::vector<ColumnSpec> columns_for(TableId id) {
  auto formula = [](BigInt (*fn)(long)) {
    return [fn](long n, const std::string&) { return fn(n); };
  };
  auto bound = [](BoundResult (*fn)(long)) {
    return [fn](long n, const std::string&) { return fn(n).floored; };
  };
  // Census columns are evaluated together; the report is cached per n by the
  // caller and the key selects the count.
  auto oracle = [](const std::string& key) {
    return [key](long, const std::string&) -> BigInt {
      throw std::logic_error("oracle column '" + key + "' must go through the census cache");
    };
  };
  switch (id) {
    case TableId::T1:
      return {{"identity", 0, formula(&t_identity)},
              {"presentation", 0, formula(&t_presentation)}};
    case TableId::T2:
      return {{"commutative_identity", 0, formula(&commutative_identity)},
              {"commutative_presentation", 0, formula(&commutative_presentation)}};
    case TableId::T3:
      return {{"oracle_iso_semirigid", 7, oracle("iso_semirigid")},
              {"semirigid_iso_bound", 0, bound(&semirigid_iso_bound)},
              {"iso_exact", 0, [](long n, const std::string&) { return iso_classes_exact(n); }}};
    case TableId::T4:
      return {{"oracle_selfdual_semirigid", 7, oracle("selfdual_semirigid")},
              {"selfdual_semirigid_bound", 0, bound(&selfdual_semirigid_bound)},
              {"oracle_iso_selfdual", 6, oracle("iso_selfdual")}};
    case TableId::T5:
      return {{"oracle_equivalence_semirigid", 7, oracle("equivalence_semirigid")},
              {"equivalence_semirigid_bound", 0, bound(&equivalence_semirigid_bound)},
              {"oracle_equivalence", 6, oracle("equivalence")}};
  }
  throw std::logic_error("columns_for: unknown TableId");
}

std::string oracle_key(const std::string& column_kind) {
  // "oracle_<census key>"
  return column_kind.substr(std::string("oracle_").size());
}

}  // namespace

std::vector<CountTable> table_columns(TableId id, long n_lo, long n_hi,
                                      const RunOptions& options) {
  if (n_lo < 3 || n_hi < n_lo) {
    throw std::invalid_argument("table range must satisfy 3 <= a <= b");
  }
  auto specs = columns_for(id);
  const long census_cap = options.allow_slow ? 7 : 6;

  std::map<long, ClassificationReport> census;
  bool needs_census = false;
  long census_hi = 0;
  for (auto const& spec : specs) {
    if (spec.oracle_cap > 0) {
      needs_census = true;
      census_hi = std::max(census_hi, std::min({n_hi, spec.oracle_cap, census_cap}));
    }
  }
  if (needs_census) {
    for (long n = n_lo; n <= census_hi; ++n) {
      census.emplace(n, orbit_census(n, {options.allow_slow, options.threads}));
    }
  }

  std::vector<CountTable> columns;
  for (auto const& spec : specs) {
    CountTable column;
    column.kind = spec.kind;
    for (long n = n_lo; n <= n_hi; ++n) {
      if (spec.oracle_cap > 0) {
        long cap = std::min(spec.oracle_cap, census_cap);
        if (n <= cap) {
          column.values.emplace_back(n, census.at(n).counts.at(oracle_key(spec.kind)));
        } else {
          column.values.emplace_back(n, std::nullopt);
        }
      } else {
        column.values.emplace_back(n, spec.eval(n, spec.kind));
      }
    }
    columns.push_back(std::move(column));
  }
  return columns;
}

std::string render_table_csv(const std::vector<CountTable>& columns) {
  std::string out = "n";
  for (auto const& column : columns) {
    out += "," + column.kind;
  }
  out += "\n";
  if (columns.empty()) {
    return out;
  }
  for (size_t row = 0; row < columns.front().values.size(); ++row) {
    out += std::to_string(columns.front().values[row].first);
    for (auto const& column : columns) {
      auto const& cell = column.values[row].second;
      out += ",";
      out += cell.has_value() ? to_decimal(*cell) : "-";
    }
    out += "\n";
  }
  return out;
}

std::string render_table_json(const std::string& label,
                              const std::vector<CountTable>& columns) {
  ordered_json j;
  j["table"] = label;
  j["columns"] = ordered_json::array();
  for (auto const& column : columns) {
    j["columns"].push_back(count_table_to_json(column));
  }
  return j.dump(2) + "\n";
}

std::string render_report_csv(const ClassificationReport& report) {
  std::string header = "n";
  std::string row = std::to_string(report.n);
  for (auto const& key : census_keys()) {
    header += "," + key;
    row += "," + to_decimal(report.counts.at(key));
  }
  return header + "\n" + row + "\n";
}

std::string render_report_json(const ClassificationReport& report) {
  ordered_json j;
  j["n"] = report.n;
  for (auto const& key : census_keys()) {
    j[key] = to_decimal(report.counts.at(key));
  }
  return j.dump(2) + "\n";
}

}  // namespace nilcount
