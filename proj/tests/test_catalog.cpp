#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "dla/catalog.hpp"
#include "dla/fixtures.hpp"
#include "support.hpp"

using namespace dla;

namespace {

Catalog load_setting(const std::string& setting) {
  return load_catalog(
      catalog_config_path(test_support::fixtures_dir(), setting));
}

}  // namespace

TEST_CASE("collections grow 42 -> 159 -> 319 tables") {
  Catalog small = load_setting("small");
  CHECK(small.db_count() == 5);
  CHECK(small.total_table_count() == 42);

  Catalog medium = load_setting("medium");
  CHECK(medium.db_count() == 14);
  CHECK(medium.total_table_count() == 159);

  Catalog large = load_setting("large");
  CHECK(large.db_count() == 23);
  CHECK(large.total_table_count() == 319);
}

TEST_CASE("database listing is id-sorted and described") {
  Catalog catalog = load_setting("small");
  auto dbs = catalog.get_db_descriptions();
  REQUIRE(dbs.size() == 5);
  CHECK(std::is_sorted(dbs.begin(), dbs.end(),
                       [](const DbDescription& a, const DbDescription& b) {
                         return a.id < b.id;
                       }));
  for (const auto& db : dbs) {
    CHECK(db.kind == DbKind::materialized);
    CHECK(!db.description.empty());
    CHECK(!db.domain_tag.empty());
  }
}

TEST_CASE("table listings carry row counts only for materialized data") {
  Catalog catalog = load_setting("medium");

  auto f1_tables = catalog.get_tables("f1");
  CHECK(std::is_sorted(f1_tables.begin(), f1_tables.end(),
                       [](const TableInfo& a, const TableInfo& b) {
                         return a.name < b.name;
                       }));
  bool found_races = false;
  for (const auto& t : f1_tables) {
    REQUIRE(t.row_count.has_value());
    if (t.name == "races") {
      found_races = true;
      CHECK(*t.row_count == 362);
    }
  }
  CHECK(found_races);

  CHECK(catalog.is_materialized("f1"));
  CHECK(!catalog.is_materialized("football_league"));
  for (const auto& t : catalog.get_tables("football_league")) {
    CHECK(!t.row_count.has_value());
  }
}

TEST_CASE("column listings expose types, keys, and references") {
  Catalog catalog = load_setting("small");
  auto cols = catalog.get_columns("f1", "races");
  REQUIRE(!cols.empty());
  CHECK(cols.front().name == "race_id");
  CHECK(cols.front().primary_key);
  bool fk_seen = false;
  for (const auto& c : cols) {
    if (c.name == "circuit_id") {
      REQUIRE(c.foreign_key.has_value());
      CHECK(c.foreign_key->table == "circuits");
      CHECK(c.foreign_key->column == "circuit_id");
      fk_seen = true;
    }
  }
  CHECK(fk_seen);
}

TEST_CASE("ids resolve case-insensitively and errors name alternatives") {
  Catalog catalog = load_setting("small");
  CHECK(catalog.has_db("F1"));
  CHECK(catalog.resolve_db_id("F1") == "f1");
  CHECK(catalog.resolve_db_id("nope") == "nope");
  CHECK_THROWS_WITH_AS(catalog.get_tables("nope"),
                       doctest::Contains("f1"), CatalogError);
  CHECK_THROWS_AS(catalog.get_columns("f1", "no_such_table"), CatalogError);
}

TEST_CASE("execute_sql answers plain selects") {
  Catalog catalog = load_setting("small");
  auto result = catalog.execute_sql("f1", "SELECT COUNT(*) FROM races");
  REQUIRE(result.rows.size() == 1);
  CHECK(canonical_scalar(result.rows[0][0]) == "362");

  auto with_result = catalog.execute_sql(
      "f1",
      "WITH y AS (SELECT season_year FROM races) "
      "SELECT COUNT(DISTINCT season_year) FROM y");
  CHECK(canonical_scalar(with_result.rows[0][0]) == "24");
}

TEST_CASE("execute_sql rejects writes, pragmas, and statement smuggling") {
  Catalog catalog = load_setting("small");
  CHECK_THROWS_AS(catalog.execute_sql("f1", "INSERT INTO races VALUES (1)"),
                  CatalogError);
  CHECK_THROWS_AS(catalog.execute_sql("f1", "PRAGMA table_info(races)"),
                  CatalogError);
  CHECK_THROWS_AS(catalog.execute_sql("f1", "DROP TABLE races"), CatalogError);
  CHECK_THROWS_AS(catalog.execute_sql("f1", "SELECT 1; SELECT 2"), CatalogError);
  CHECK_NOTHROW(catalog.execute_sql("f1", "SELECT 1;"));
  CHECK_NOTHROW(catalog.execute_sql("f1", "  select 1"));
}

TEST_CASE("execute_sql refuses schema-only databases with guidance") {
  Catalog catalog = load_setting("medium");
  CHECK_THROWS_WITH_AS(catalog.execute_sql("football_league", "SELECT 1"),
                       doctest::Contains("schema-only"), CatalogError);
}

TEST_CASE("runaway queries hit the op budget or the row cap") {
  Catalog catalog = load_setting("small");
  CHECK_THROWS_AS(
      catalog.execute_sql(
          "f1", "SELECT COUNT(*) FROM results a, results b, results c"),
      CatalogError);
  CHECK_THROWS_WITH_AS(
      catalog.execute_sql(
          "f1",
          "SELECT a.result_id FROM results a, results b WHERE b.result_id <= 40"),
      doctest::Contains("rows"), CatalogError);
}

TEST_CASE("metadata_json summarizes every database") {
  Catalog catalog = load_setting("small");
  std::string json_text = catalog.metadata_json();
  for (const char* id : {"f1", "avito", "trial", "stack", "hm"}) {
    CHECK(json_text.find("\"" + std::string(id) + "\"") != std::string::npos);
  }
}
