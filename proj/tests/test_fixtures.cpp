#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dla/bench.hpp"
#include "dla/catalog.hpp"
#include "dla/fixtures.hpp"
#include "support.hpp"

using namespace dla;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t tables_in_setting(const Manifest& manifest, const std::string& setting) {
  std::size_t n = 0;
  for (const auto& id : manifest.settings.at(setting)) {
    for (const auto& db : manifest.databases) {
      if (db.id == id) n += db.tables.size();
    }
  }
  return n;
}

}  // namespace

TEST_CASE("generation is deterministic for a fixed seed") {
  const fs::path& first = test_support::fixtures_dir();
  fs::path second = first.parent_path() / "dla_fixtures_again";
  fs::remove_all(second);
  generate_fixtures(second, {});
  CHECK(slurp(first / "manifest.json") == slurp(second / "manifest.json"));
  CHECK(slurp(first / "tasks.json") == slurp(second / "tasks.json"));
  fs::remove_all(second);
}

TEST_CASE("manifest matches the advertised collection sizes") {
  Manifest manifest = load_manifest(test_support::fixtures_dir() / "manifest.json");
  CHECK(manifest.generation_seed == 1);
  REQUIRE(manifest.settings.count("small"));
  REQUIRE(manifest.settings.count("medium"));
  REQUIRE(manifest.settings.count("large"));
  CHECK(manifest.settings.at("small").size() == 5);
  CHECK(manifest.settings.at("medium").size() == 14);
  CHECK(manifest.settings.at("large").size() == 23);
  CHECK(tables_in_setting(manifest, "small") == 42);
  CHECK(tables_in_setting(manifest, "medium") == 159);
  CHECK(tables_in_setting(manifest, "large") == 319);
  CHECK(manifest.databases.size() == 23);
}

TEST_CASE("database descriptions leak no schema names") {
  Manifest manifest = load_manifest(test_support::fixtures_dir() / "manifest.json");
  auto names = all_schema_names(manifest);
  Catalog catalog = load_catalog(
      catalog_config_path(test_support::fixtures_dir(), "large"));
  for (const auto& db : catalog.get_db_descriptions()) {
    CHECK(names_found(names, db.description).empty());
  }
}

TEST_CASE("task set is 100 tasks, balanced per database and difficulty") {
  auto tasks = load_tasks(test_support::fixtures_dir() / "tasks.json");
  REQUIRE(tasks.size() == 100);

  std::set<std::string> ids;
  std::map<std::string, int> simple_per_db, complex_per_db;
  Catalog catalog = load_catalog(
      catalog_config_path(test_support::fixtures_dir(), "small"));
  Manifest manifest = load_manifest(test_support::fixtures_dir() / "manifest.json");

  for (const auto& task : tasks) {
    CHECK(ids.insert(task.id).second);
    CHECK(catalog.is_materialized(task.target_db));
    auto refs = referenced_tables(manifest, task.target_db, task.gold_sql);
    CHECK(!refs.empty());
    if (task.difficulty == Difficulty::complex) {
      ++complex_per_db[task.target_db];
      CHECK(refs.size() >= 2);
    } else {
      ++simple_per_db[task.target_db];
      CHECK(refs.size() == 1);
    }
  }
  REQUIRE(simple_per_db.size() == 5);
  for (const auto& [db, n] : simple_per_db) CHECK(n == 10);
  for (const auto& [db, n] : complex_per_db) CHECK(n == 10);
}

TEST_CASE("questions only name tables of their database and columns of gold tables") {
  auto tasks = load_tasks(test_support::fixtures_dir() / "tasks.json");
  Manifest manifest = load_manifest(test_support::fixtures_dir() / "manifest.json");
  auto names = all_schema_names(manifest);

  for (const auto& task : tasks) {
    std::set<std::string> allowed;
    auto gold = referenced_tables(manifest, task.target_db, task.gold_sql);
    for (const auto& db : manifest.databases) {
      if (db.id != task.target_db) continue;
      for (const auto& t : db.tables) {
        allowed.insert(t.name);
        if (std::find(gold.begin(), gold.end(), t.name) != gold.end()) {
          allowed.insert(t.columns.begin(), t.columns.end());
        }
      }
    }
    for (const auto& name : names_found(names, task.question)) {
      INFO(task.id, " mentions '", name, "'");
      CHECK(allowed.count(name) == 1);
    }
  }
}

TEST_CASE("every gold query is correct against its own result") {
  auto tasks = load_tasks(test_support::fixtures_dir() / "tasks.json");
  Catalog catalog = load_catalog(
      catalog_config_path(test_support::fixtures_dir(), "small"));
  for (const auto& task : tasks) {
    INFO(task.id);
    CHECK(grade(catalog, task, task.gold_sql, task.target_db) == Graded::correct);
  }
}

TEST_CASE("spot-checked gold answers stay pinned") {
  auto tasks = load_tasks(test_support::fixtures_dir() / "tasks.json");
  Catalog catalog = load_catalog(
      catalog_config_path(test_support::fixtures_dir(), "small"));
  const std::map<std::string, std::string> expected = {
      {"t001", "18"},          {"t012", "James Hartley"},
      {"t023", "2015-04-25"},  {"t034", "desktop"},
      {"t047", "0.0004"},      {"t053", "Berlin"},
      {"t062", "10000"},       {"t069", "BlueHarbor"},
      {"t083", "16.92"},       {"t087", "75"},
  };
  int checked = 0;
  for (const auto& task : tasks) {
    auto it = expected.find(task.id);
    if (it == expected.end()) continue;
    auto result = catalog.execute_sql(task.target_db, task.gold_sql);
    REQUIRE(!result.rows.empty());
    REQUIRE(!result.rows[0].empty());
    std::string row;
    for (const auto& cell : result.rows[0]) {
      if (!row.empty()) row += ' ';
      row += canonical_scalar(cell);
    }
    INFO(task.id);
    CHECK(row == it->second);
    ++checked;
  }
  CHECK(checked == static_cast<int>(expected.size()));
}

TEST_CASE("word scanning respects identifier boundaries") {
  CHECK(contains_word("the races table", "races"));
  CHECK(contains_word("RACES!", "races"));
  CHECK(contains_word("races, then more", "races"));
  CHECK(!contains_word("braces", "races"));
  CHECK(!contains_word("races_won", "races"));
  CHECK(!contains_word("racesx", "races"));
  CHECK(contains_word("join races.race_id", "race_id"));
}

TEST_CASE("referenced_tables scans only the target database's tables") {
  Manifest manifest = load_manifest(test_support::fixtures_dir() / "manifest.json");
  auto refs = referenced_tables(
      manifest, "f1",
      "SELECT d.surname FROM standings s JOIN drivers d ON d.driver_id = "
      "s.driver_id JOIN races r ON r.race_id = s.race_id");
  CHECK(refs == std::vector<std::string>{"drivers", "races", "standings"});
}

TEST_CASE("loading rejects missing or damaged files") {
  CHECK_THROWS_AS(load_manifest("no_such_manifest.json"), FixtureError);
  CHECK_THROWS_AS(load_tasks("no_such_tasks.json"), FixtureError);
}
