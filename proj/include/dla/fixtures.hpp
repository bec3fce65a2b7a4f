#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dla {

class FixtureError : public std::runtime_error {
 public:
  explicit FixtureError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Difficulty { simple, complex };

std::string difficulty_name(Difficulty d);

/// One benchmark task: a question, the database it is about, and the gold
/// query whose execution result defines the correct answer.
struct TaskSpec {
  std::string id;
  std::string question;
  std::string target_db;
  std::string gold_sql;
  Difficulty difficulty = Difficulty::simple;
};

struct ManifestTable {
  std::string name;
  std::optional<std::int64_t> row_count;
  std::vector<std::string> columns;
};

struct ManifestDb {
  std::string id;
  std::string kind;  // "materialized" | "schema_only"
  std::vector<ManifestTable> tables;
};

/// Ground truth about the generated fixture universe, written alongside the
/// databases. Tests and the metadata-parsimony check scan against it.
struct Manifest {
  std::uint64_t generation_seed = 0;
  std::map<std::string, std::vector<std::string>> settings;  // setting -> db ids
  std::vector<ManifestDb> databases;
};

struct FixtureOptions {
  std::uint64_t seed = 1;
};

/// Writes the whole fixture universe into `out_dir`: SQLite files, schema-only
/// DDL scripts, per-setting catalog configs, manifest.json, and tasks.json.
/// Deterministic: the same seed produces byte-identical databases and files.
void generate_fixtures(const std::filesystem::path& out_dir,
                       const FixtureOptions& options = {});

Manifest load_manifest(const std::filesystem::path& file);
std::vector<TaskSpec> load_tasks(const std::filesystem::path& file);

/// Settings in growth order; catalog config path for one of them.
const std::vector<std::string>& setting_names();
std::filesystem::path catalog_config_path(const std::filesystem::path& fixtures_dir,
                                          const std::string& setting);

/// Case-insensitive whole-word occurrence check. A match must not touch an
/// adjacent identifier character ([A-Za-z0-9_]) on either side.
bool contains_word(const std::string& text, const std::string& word);

/// Every table and column name in the manifest, deduplicated.
std::vector<std::string> all_schema_names(const Manifest& manifest);

/// Subset of `names` that occur whole-word in `text`.
std::vector<std::string> names_found(const std::vector<std::string>& names,
                                     const std::string& text);

/// Tables of `db_id` referenced by `sql`, by whole-word scan, sorted.
std::vector<std::string> referenced_tables(const Manifest& manifest,
                                           const std::string& db_id,
                                           const std::string& sql);

}  // namespace dla
