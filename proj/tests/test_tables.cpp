#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>

#include "nilcount/stirling.hpp"
#include "nilcount/stirling_cache.hpp"
#include "nilcount/tables.hpp"

using namespace nilcount;

TEST_CASE("table T1 reproduces the published values byte for byte", "[tables]") {
  auto columns = table_columns(TableId::T1, 3, 10, {});
  const std::string expected =
      "n,identity,presentation\n"
      "3,6,1\n"
      "4,180,15\n"
      "5,11720,536\n"
      "6,3089250,74875\n"
      "7,5944080072,55046362\n"
      "8,147348275209800,493024606840\n"
      "9,38430603831264883632,75797430892164879\n"
      "10,90116197775746464859791750,120455109059841172414778\n";
  REQUIRE(render_table_csv(columns) == expected);
  // Determinism: a second run yields identical bytes.
  REQUIRE(render_table_csv(table_columns(TableId::T1, 3, 10, {})) == expected);
}

TEST_CASE("table T3 fills oracle cells up to the cap", "[tables]") {
  auto columns = table_columns(TableId::T3, 3, 8, {});
  REQUIRE(columns.size() == 3);
  REQUIRE(columns[0].kind == "oracle_iso_semirigid");
  REQUIRE(columns[1].kind == "semirigid_iso_bound");
  REQUIRE(columns[2].kind == "iso_exact");
  // n = 3..6 from the census, 7..8 unavailable without allow_slow.
  REQUIRE(columns[0].values[0].second == BigInt(1));
  REQUIRE(columns[0].values[2].second == BigInt(114));
  REQUIRE(columns[0].values[3].second == BigInt(4629));
  REQUIRE_FALSE(columns[0].values[4].second.has_value());
  REQUIRE_FALSE(columns[0].values[5].second.has_value());
  REQUIRE(columns[1].values[5].second == BigInt("3661477300"));
  REQUIRE(columns[2].values[5].second == BigInt("3661522792"));
  auto csv = render_table_csv(columns);
  REQUIRE(csv.find("7,-,1199370,1199989\n") != std::string::npos);
}

TEST_CASE("table T4 and T5 column layouts", "[tables]") {
  auto t4 = table_columns(TableId::T4, 5, 6, {});
  REQUIRE(t4[0].kind == "oracle_selfdual_semirigid");
  REQUIRE(t4[0].values[0].second == BigInt(48));
  REQUIRE(t4[1].values[0].second == BigInt(50));
  REQUIRE(t4[2].kind == "oracle_iso_selfdual");
  REQUIRE(t4[2].values[1].second == BigInt(649));
  auto t5 = table_columns(TableId::T5, 5, 6, {});
  REQUIRE(t5[0].values[1].second == BigInt(2634));
  REQUIRE(t5[1].values[0].second == BigInt(83));
  REQUIRE(t5[2].values[0].second == BigInt(84));
}

TEST_CASE("count tables round-trip through JSON", "[tables]") {
  auto columns = table_columns(TableId::T3, 3, 8, {});
  for (auto const& column : columns) {
    auto j = count_table_to_json(column);
    auto parsed = count_table_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(parsed == column);
  }
}

TEST_CASE("census report rendering", "[tables]") {
  ClassificationReport report;
  report.n = 4;
  for (auto const& key : census_keys()) {
    report.counts[key] = 1;
  }
  auto csv = render_report_csv(report);
  REQUIRE(csv.rfind("n,presentation,identity,iso,equivalence,", 0) == 0);
  auto json_text = render_report_json(report);
  auto parsed = nlohmann::json::parse(json_text);
  REQUIRE(parsed.at("n") == 4);
  REQUIRE(parsed.at("iso") == "1");
}

TEST_CASE("stirling cache round-trips and rejects corruption", "[cache]") {
  const std::string path = "stirling_test.cache";
  auto saved = save_stirling_cache(path, 40);
  REQUIRE(saved.ok);
  REQUIRE(saved.max_n >= 40);

  auto loaded = load_stirling_cache(path, true);
  REQUIRE(loaded.ok);
  REQUIRE(stirling2(5, 2) == 15);

  // Flip the stored value of S(0,0) (offset 16: magic 8 + row count 4 +
  // length prefix 4); the loader must refuse.
  std::fstream file(path, std::ios::in | std::ios::out | std::ios::binary);
  REQUIRE(file.good());
  file.seekg(16);
  char byte = 0;
  file.get(byte);
  file.seekp(16);
  file.put(static_cast<char>(byte ^ 0x40));
  file.close();
  auto corrupted = load_stirling_cache(path);
  REQUIRE_FALSE(corrupted.ok);
  REQUIRE_FALSE(corrupted.error.empty());
  // The in-memory table is untouched and still usable.
  REQUIRE(stirling2(10, 2) == 511);

  auto cleared = clear_stirling_cache(path);
  REQUIRE(cleared.ok);
  REQUIRE_FALSE(std::ifstream(path).good());
  REQUIRE(stirling2(5, 2) == 15);
}
