#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>

#include "nilcount/bounds.hpp"
#include "nilcount/burnside.hpp"
#include "nilcount/cycle_stats.hpp"
#include "nilcount/oracle.hpp"
#include "nilcount/stirling.hpp"
#include "nilcount/stirling_cache.hpp"
#include "nilcount/tables.hpp"
#include "nilcount/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace nilcount;

struct Range {
  long lo = 0;
  long hi = 0;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      long v = std::stol(text);
      return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected <a> or <a>..<b>, got '" + text + "'");
  }
}

// One series of values over a range, as CSV ("n,<kind>") or JSON CountTable.
std::string render_series(const CountTable& table, OutputFormat format) {
  if (format == OutputFormat::json) {
    return count_table_to_json(table).dump(2) + "\n";
  }
  return render_table_csv({table});
}

int run_bounds_command(CountKind kind, Range range, OutputFormat format, bool rational,
                       bool terms) {
  const bool has_rational = kind == CountKind::tn_over_nfact ||
                            kind == CountKind::semirigid_iso_bound ||
                            kind == CountKind::commutative_semirigid_bound ||
                            kind == CountKind::selfdual_semirigid_bound ||
                            kind == CountKind::equivalence_semirigid_bound;
  const bool has_terms = kind == CountKind::semirigid_iso_bound ||
                         kind == CountKind::commutative_semirigid_bound ||
                         kind == CountKind::selfdual_semirigid_bound ||
                         kind == CountKind::equivalence_semirigid_bound ||
                         kind == CountKind::iso_exact;
  if (rational && !has_rational) {
    std::cerr << "nilcount: --rational is not meaningful for kind '" << to_string(kind)
              << "'\n";
    return 2;
  }
  if (terms && !has_terms) {
    std::cerr << "nilcount: --terms is not available for kind '" << to_string(kind) << "'\n";
    return 2;
  }
  if (terms && format != OutputFormat::json) {
    std::cerr << "nilcount: --terms requires --format json\n";
    return 2;
  }

  auto integer_value = [&](long n) -> BigInt {
    switch (kind) {
      case CountKind::identity: return t_identity(n);
      case CountKind::presentation: return t_presentation(n);
      case CountKind::commutative_identity: return commutative_identity(n);
      case CountKind::commutative_presentation: return commutative_presentation(n);
      case CountKind::rank_stratified:
        return rank_stratified_presentation(static_cast<int>(n));
      case CountKind::tn_over_nfact: return floor_rat(tn_over_nfact(n));
      case CountKind::semirigid_iso_bound: return semirigid_iso_bound(n).floored;
      case CountKind::commutative_semirigid_bound:
        return commutative_semirigid_bound(n).floored;
      case CountKind::selfdual_semirigid_bound: return selfdual_semirigid_bound(n).floored;
      case CountKind::equivalence_semirigid_bound:
        return equivalence_semirigid_bound(n).floored;
      case CountKind::iso_exact: return iso_classes_exact(n);
    }
    throw std::logic_error("unhandled kind");
  };
  auto rational_value = [&](long n) -> BigRat {
    switch (kind) {
      case CountKind::tn_over_nfact: return tn_over_nfact(n);
      case CountKind::semirigid_iso_bound: return semirigid_iso_bound(n).exact;
      case CountKind::commutative_semirigid_bound:
        return commutative_semirigid_bound(n).exact;
      case CountKind::selfdual_semirigid_bound: return selfdual_semirigid_bound(n).exact;
      case CountKind::equivalence_semirigid_bound:
        return equivalence_semirigid_bound(n).exact;
      default: throw std::logic_error("no rational form");
    }
  };

  if (format == OutputFormat::csv) {
    std::string out = "n," + to_string(kind);
    if (rational) {
      out += "," + to_string(kind) + "_rational";
    }
    out += "\n";
    for (long n = range.lo; n <= range.hi; ++n) {
      out += std::to_string(n) + "," + to_decimal(integer_value(n));
      if (rational) {
        out += "," + to_fraction_string(rational_value(n));
      }
      out += "\n";
    }
    std::cout << out;
    return 0;
  }

  ordered_json j;
  j["kind"] = to_string(kind);
  j["values"] = ordered_json::array();
  for (long n = range.lo; n <= range.hi; ++n) {
    ordered_json cell;
    cell["n"] = n;
    cell["value"] = to_decimal(integer_value(n));
    if (rational) {
      cell["rational"] = to_fraction_string(rational_value(n));
    }
    if (terms) {
      ordered_json term_list = ordered_json::array();
      std::vector<BoundTerm> bound_terms;
      if (kind == CountKind::iso_exact) {
        for (auto const& term : iso_classes_exact_terms(n)) {
          bound_terms.push_back({term.r, term.lambda, term.value});
        }
      } else {
        switch (kind) {
          case CountKind::semirigid_iso_bound:
            bound_terms = semirigid_iso_bound(n).terms;
            break;
          case CountKind::commutative_semirigid_bound:
            bound_terms = commutative_semirigid_bound(n).terms;
            break;
          case CountKind::selfdual_semirigid_bound:
            bound_terms = selfdual_semirigid_bound(n).terms;
            break;
          case CountKind::equivalence_semirigid_bound:
            bound_terms = equivalence_semirigid_bound(n).terms;
            break;
          default: break;
        }
      }
      for (auto const& term : bound_terms) {
        ordered_json entry;
        entry["r"] = term.r;
        entry["lambda"] = term.lambda.to_string();
        entry["value"] = to_fraction_string(term.value);
        term_list.push_back(std::move(entry));
      }
      cell["terms"] = std::move(term_list);
    }
    j["values"].push_back(std::move(cell));
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of 3-nilpotent semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "csv";
  int threads = 0;
  bool allow_slow = false;
  std::string cache_path;
  app.add_option("--format", format_name, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "worker threads for the oracle census (0 = auto)");
  app.add_flag("--allow-slow", allow_slow, "permit the n = 7 oracle census");
  app.add_option("--cache", cache_path, "Stirling cache file to load before computing");

  auto* table_cmd = app.add_subcommand("table", "reproduce one published table");
  std::string table_name;
  std::string table_range;
  table_cmd->add_option("id", table_name, "table id: T1..T5")->required();
  table_cmd->add_option("--n", table_range, "order range <a>..<b>")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form counts and bounds");
  std::string kind_name;
  std::string bounds_range;
  bool rational = false;
  bool terms = false;
  bounds_cmd->add_option("--kind", kind_name, "count kind")->required();
  bounds_cmd->add_option("--n", bounds_range, "order range <a>..<b>")->required();
  bounds_cmd->add_flag("--rational", rational, "also print the exact rational p/q");
  bounds_cmd->add_flag("--terms", terms, "dump per-(r,lambda) terms (json only)");

  auto* exact_cmd = app.add_subcommand("exact", "exact isomorphism class counts");
  std::string exact_range;
  bool per_rank = false;
  exact_cmd->add_option("--n", exact_range, "order range <a>..<b>")->required();
  exact_cmd->add_flag("--per-rank", per_rank, "dump per-(r,lambda) terms (json only)");

  auto* fixed_cmd = app.add_subcommand("fixed", "fixed partial partitions of one cycle type");
  std::string fixed_lambda;
  long fixed_k = 0;
  fixed_cmd->add_option("--lambda", fixed_lambda, "cycle type, e.g. 1^2,2^1")->required();
  fixed_cmd->add_option("--k", fixed_k, "partition rank")->required();

  auto* stats_cmd = app.add_subcommand("stats", "cycle-type statistics");
  std::string stats_lambda;
  stats_cmd->add_option("--lambda", stats_lambda, "cycle type, e.g. 1^2,2^1")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force census");
  long oracle_n = 0;
  std::string report_name;
  auto* oracle_n_opt = oracle_cmd->add_option("--n", oracle_n, "order to census");
  oracle_cmd->add_option("--report", report_name, "report format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* oracle_fixed = oracle_cmd->add_subcommand("fixed", "brute-force fixed points");
  int brute_r = 0;
  int brute_k = 0;
  std::string brute_perm;
  bool brute_twist = false;
  oracle_fixed->add_option("--r", brute_r, "rank of X")->required();
  oracle_fixed->add_option("--k", brute_k, "partition rank")->required();
  oracle_fixed->add_option("--perm", brute_perm, "permutation in cycle notation, 1-based")
      ->required();
  oracle_fixed->add_flag("--twist", brute_twist, "compose with the twist");

  auto* verify_cmd = app.add_subcommand("verify", "run the cross-check suites");
  std::string level_name = "fast";
  verify_cmd->add_option("--level", level_name, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));

  auto* cache_cmd = app.add_subcommand("cache", "manage the Stirling cache");
  std::string cache_action;
  std::string cache_file;
  long cache_max_n = 101;
  cache_cmd->add_option("action", cache_action, "save, load, or clear")
      ->required()
      ->check(CLI::IsMember({"save", "load", "clear"}));
  cache_cmd->add_option("--path", cache_file, "cache file (defaults to --cache)");
  cache_cmd->add_option("--max-n", cache_max_n, "rows to precompute on save");

  CLI11_PARSE(app, argc, argv);

  try {
    OutputFormat format = parse_format(format_name);

    // Warm start: a corrupt cache is reported and ignored.
    if (!cache_path.empty() && !cache_cmd->parsed()) {
      auto status = load_stirling_cache(cache_path);
      if (!status.ok) {
        std::cerr << "nilcount: ignoring cache: " << status.error << "\n";
      }
    }

    if (table_cmd->parsed()) {
      Range range = parse_range(table_range);
      TableId id = parse_table_id(table_name);
      auto columns = table_columns(id, range.lo, range.hi, {allow_slow, threads});
      std::cout << (format == OutputFormat::csv
                        ? render_table_csv(columns)
                        : render_table_json(to_string(id), columns));
      return 0;
    }

    if (bounds_cmd->parsed()) {
      return run_bounds_command(parse_count_kind(kind_name), parse_range(bounds_range), format,
                                rational, terms);
    }

    if (exact_cmd->parsed()) {
      Range range = parse_range(exact_range);
      if (per_rank && format != OutputFormat::json) {
        std::cerr << "nilcount: --per-rank requires --format json\n";
        return 2;
      }
      if (!per_rank) {
        CountTable table;
        table.kind = "iso_exact";
        for (long n = range.lo; n <= range.hi; ++n) {
          table.values.emplace_back(n, iso_classes_exact(n));
        }
        std::cout << render_series(table, format);
        return 0;
      }
      ordered_json j;
      j["kind"] = "iso_exact";
      j["values"] = ordered_json::array();
      for (long n = range.lo; n <= range.hi; ++n) {
        ordered_json cell;
        cell["n"] = n;
        cell["value"] = to_decimal(iso_classes_exact(n));
        ordered_json term_list = ordered_json::array();
        for (auto const& term : iso_classes_exact_terms(n)) {
          ordered_json entry;
          entry["r"] = term.r;
          entry["lambda"] = term.lambda.to_string();
          entry["value"] = to_fraction_string(term.value);
          term_list.push_back(std::move(entry));
        }
        cell["terms"] = std::move(term_list);
        j["values"].push_back(std::move(cell));
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (fixed_cmd->parsed()) {
      auto lambda = IntegerPartition::parse(fixed_lambda);
      BigInt value = fixed_partial_partitions(lambda, fixed_k);
      if (format == OutputFormat::json) {
        ordered_json j;
        j["lambda"] = lambda.to_string();
        j["k"] = fixed_k;
        j["value"] = to_decimal(value);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_decimal(value) << "\n";
      }
      return 0;
    }

    if (stats_cmd->parsed()) {
      auto lambda = IntegerPartition::parse(stats_lambda);
      auto stats = cycle_stats(lambda);
      ordered_json j;
      j["lambda"] = lambda.to_string();
      j["weight"] = to_decimal(stats.weight);
      ordered_json beta_map;
      for (auto const& [d, value] : stats.beta) {
        beta_map[std::to_string(d)] = value;
      }
      j["beta"] = std::move(beta_map);
      j["delta"] = stats.delta;
      j["gamma"] = stats.gamma;
      j["zeta"] = stats.zeta;
      j["eta"] = stats.eta;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (oracle_cmd->parsed()) {
      if (oracle_fixed->parsed()) {
        Perm pi = parse_cycles(brute_perm, brute_r);
        BigInt value = fixed_points_brute(brute_r, brute_k, {pi, brute_twist});
        std::cout << to_decimal(value) << "\n";
        return 0;
      }
      if (oracle_n_opt->count() == 0) {
        std::cerr << "nilcount: oracle requires --n (or the fixed subcommand)\n";
        return 2;
      }
      auto report = orbit_census(oracle_n, {allow_slow, threads});
      OutputFormat report_format = report_name.empty() ? format : parse_format(report_name);
      std::cout << (report_format == OutputFormat::csv ? render_report_csv(report)
                                                       : render_report_json(report));
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.level = parse_verify_level(level_name);
      options.allow_slow = allow_slow;
      options.threads = threads;
      options.cache_path = cache_path;
      return run_verify(options, std::cout);
    }

    if (cache_cmd->parsed()) {
      std::string path = cache_file.empty() ? cache_path : cache_file;
      if (path.empty()) {
        std::cerr << "nilcount: cache needs --path (or the global --cache)\n";
        return 2;
      }
      CacheStatus status;
      if (cache_action == "save") {
        status = save_stirling_cache(path, cache_max_n);
      } else if (cache_action == "load") {
        status = load_stirling_cache(path);
      } else {
        status = clear_stirling_cache(path);
      }
      if (!status.ok) {
        std::cerr << "nilcount: cache " << cache_action << " failed: " << status.error << "\n";
        return 1;
      }
      std::cout << "cache " << cache_action << ": ok";
      if (status.max_n >= 0) {
        std::cout << " (rows 0.." << status.max_n << ")";
      }
      std::cout << "\n";
      return 0;
    }
  } catch (const std::exception& error) {
    std::cerr << "nilcount: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
