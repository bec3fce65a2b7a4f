#include "dla/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "dla/catalog.hpp"
#include "fixture_schemas.hpp"
#include "task_data.hpp"

namespace dla {

namespace fs = std::filesystem;
using nlohmann::json;

std::string difficulty_name(Difficulty d) {
  return d == Difficulty::simple ? "simple" : "complex";
}

namespace {

std::string lower(std::string s) {
  for (char& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) {
    throw FixtureError("cannot write " + path.string());
  }
}

json config_entry(const char* id, const char* kind, const std::string& source,
                  const char* description, const char* domain_tag) {
  return json{{"id", id},
              {"kind", kind},
              {"source", source},
              {"description", description},
              {"domain_tag", domain_tag}};
}

void validate_tasks(const Catalog& catalog, const Manifest& manifest,
                    const std::vector<TaskSpec>& tasks) {
  if (tasks.size() != 100) {
    throw FixtureError("expected 100 tasks, have " + std::to_string(tasks.size()));
  }
  const std::vector<std::string> names = all_schema_names(manifest);
  std::set<std::string> ids;
  std::map<std::string, std::array<int, 2>> per_db;
  for (const TaskSpec& task : tasks) {
    if (!ids.insert(task.id).second) {
      throw FixtureError("duplicate task id " + task.id);
    }
    if (!catalog.is_materialized(task.target_db)) {
      throw FixtureError(task.id + ": target " + task.target_db +
                         " is not materialized");
    }
    const std::vector<std::string> gold_tables =
        referenced_tables(manifest, task.target_db, task.gold_sql);
    if (gold_tables.empty()) {
      throw FixtureError(task.id + ": gold query references no known table");
    }
    const bool is_complex = gold_tables.size() >= 2;
    if ((task.difficulty == Difficulty::complex) != is_complex) {
      throw FixtureError(task.id + ": difficulty says " +
                         difficulty_name(task.difficulty) + " but gold uses " +
                         std::to_string(gold_tables.size()) + " table(s)");
    }
    per_db[task.target_db][is_complex ? 1 : 0] += 1;

    // A question may only name target-database tables and columns of the
    // tables its gold query touches; anything else would leak metadata the
    // agent never requested into the transcript.
    std::set<std::string> allowed;
    for (const ManifestDb& db : manifest.databases) {
      if (db.id != task.target_db) continue;
      for (const ManifestTable& t : db.tables) {
        allowed.insert(t.name);
        if (std::find(gold_tables.begin(), gold_tables.end(), t.name) !=
            gold_tables.end()) {
          allowed.insert(t.columns.begin(), t.columns.end());
        }
      }
    }
    for (const std::string& n : names_found(names, task.question)) {
      if (allowed.count(n) == 0) {
        throw FixtureError(task.id + ": question leaks schema name '" + n + "'");
      }
    }

    QueryResult gold = catalog.execute_sql(task.target_db, task.gold_sql);
    if (gold.rows.empty()) {
      throw FixtureError(task.id + ": gold query returns no rows");
    }
  }
  if (per_db.size() != fixture_detail::materialized_dbs().size()) {
    throw FixtureError("tasks must cover every materialized database");
  }
  for (const auto& [db, counts] : per_db) {
    if (counts[0] != 10 || counts[1] != 10) {
      throw FixtureError(db + ": need 10 simple + 10 complex tasks, have " +
                         std::to_string(counts[0]) + "+" +
                         std::to_string(counts[1]));
    }
  }
}

}  // namespace

bool contains_word(const std::string& text, const std::string& word) {
  if (word.empty()) return false;
  const std::string t = lower(text);
  const std::string w = lower(word);
  std::size_t pos = 0;
  while ((pos = t.find(w, pos)) != std::string::npos) {
    const std::size_t end = pos + w.size();
    const bool left_ok = pos == 0 || !ident_char(t[pos - 1]);
    const bool right_ok = end == t.size() || !ident_char(t[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

std::vector<std::string> all_schema_names(const Manifest& manifest) {
  std::set<std::string> names;
  for (const ManifestDb& db : manifest.databases) {
    for (const ManifestTable& t : db.tables) {
      names.insert(t.name);
      names.insert(t.columns.begin(), t.columns.end());
    }
  }
  return {names.begin(), names.end()};
}

std::vector<std::string> names_found(const std::vector<std::string>& names,
                                     const std::string& text) {
  std::vector<std::string> found;
  for (const std::string& n : names) {
    if (contains_word(text, n)) found.push_back(n);
  }
  return found;
}

std::vector<std::string> referenced_tables(const Manifest& manifest,
                                           const std::string& db_id,
                                           const std::string& sql) {
  std::vector<std::string> tables;
  for (const ManifestDb& db : manifest.databases) {
    if (db.id != db_id) continue;
    for (const ManifestTable& t : db.tables) {
      if (contains_word(sql, t.name)) tables.push_back(t.name);
    }
  }
  std::sort(tables.begin(), tables.end());
  return tables;
}

const std::vector<std::string>& setting_names() {
  static const std::vector<std::string> names = {"small", "medium", "large"};
  return names;
}

fs::path catalog_config_path(const fs::path& fixtures_dir,
                             const std::string& setting) {
  return fixtures_dir / ("catalog_" + setting + ".json");
}

void generate_fixtures(const fs::path& out_dir, const FixtureOptions& options) {
  namespace fd = fixture_detail;
  fs::create_directories(out_dir / "db");
  fs::create_directories(out_dir / "schemas");

  for (const fd::MaterializedDbSpec& spec : fd::materialized_dbs()) {
    const fs::path path = out_dir / "db" / (std::string(spec.id) + ".sqlite");
    fs::remove(path);
    SqliteDb db(path, SqliteDb::Mode::read_write_create);
    spec.build(db, options.seed);
  }
  for (const fd::SchemaOnlyDbSpec& spec : fd::schema_only_dbs()) {
    write_file(out_dir / "schemas" / (std::string(spec.id) + ".sql"),
               fd::schema_only_ddl(spec));
  }

  json small = json::array();
  json medium = json::array();
  json large = json::array();
  for (const fd::MaterializedDbSpec& spec : fd::materialized_dbs()) {
    json e = config_entry(spec.id, "materialized",
                          "db/" + std::string(spec.id) + ".sqlite",
                          spec.description, spec.domain_tag);
    small.push_back(e);
    medium.push_back(e);
    large.push_back(e);
  }
  for (const fd::SchemaOnlyDbSpec& spec : fd::schema_only_dbs()) {
    json e = config_entry(spec.id, "schema_only",
                          "schemas/" + std::string(spec.id) + ".sql",
                          spec.description, spec.domain_tag);
    if (std::string(spec.setting) == "medium") medium.push_back(e);
    large.push_back(e);
  }
  write_file(catalog_config_path(out_dir, "small"),
             json{{"databases", small}}.dump(2) + "\n");
  write_file(catalog_config_path(out_dir, "medium"),
             json{{"databases", medium}}.dump(2) + "\n");
  write_file(catalog_config_path(out_dir, "large"),
             json{{"databases", large}}.dump(2) + "\n");

  Catalog catalog = load_catalog(catalog_config_path(out_dir, "large"));

  Manifest manifest;
  manifest.generation_seed = options.seed;
  for (const json& e : small) {
    manifest.settings["small"].push_back(e.at("id"));
  }
  for (const json& e : medium) {
    manifest.settings["medium"].push_back(e.at("id"));
  }
  for (const json& e : large) {
    manifest.settings["large"].push_back(e.at("id"));
  }
  for (auto& [_, db_ids] : manifest.settings) {
    std::sort(db_ids.begin(), db_ids.end());
  }
  for (const DbDescription& d : catalog.get_db_descriptions()) {
    ManifestDb mdb;
    mdb.id = d.id;
    mdb.kind = d.kind == DbKind::materialized ? "materialized" : "schema_only";
    for (const TableInfo& t : catalog.get_tables(d.id)) {
      ManifestTable mt;
      mt.name = t.name;
      mt.row_count = t.row_count;
      for (const ColumnInfo& c : catalog.get_columns(d.id, t.name)) {
        mt.columns.push_back(c.name);
      }
      mdb.tables.push_back(std::move(mt));
    }
    manifest.databases.push_back(std::move(mdb));
  }

  // Database descriptions must stay schema-name-free: the agent sees them
  // before requesting anything, so a leaked name would break parsimony.
  const std::vector<std::string> names = all_schema_names(manifest);
  for (const DbDescription& d : catalog.get_db_descriptions()) {
    std::vector<std::string> leaked = names_found(names, d.description);
    if (!leaked.empty()) {
      throw FixtureError("description of " + d.id + " leaks schema name '" +
                         leaked.front() + "'");
    }
  }

  json jdbs = json::array();
  for (const ManifestDb& db : manifest.databases) {
    json jtables = json::array();
    for (const ManifestTable& t : db.tables) {
      json jt{{"name", t.name}, {"columns", t.columns}};
      jt["row_count"] = t.row_count ? json(*t.row_count) : json(nullptr);
      jtables.push_back(std::move(jt));
    }
    jdbs.push_back(json{{"id", db.id}, {"kind", db.kind}, {"tables", jtables}});
  }
  write_file(out_dir / "manifest.json",
             json{{"generation_seed", manifest.generation_seed},
                  {"settings", manifest.settings},
                  {"databases", jdbs}}
                     .dump(2) +
                 "\n");

  const std::vector<TaskSpec>& tasks = fd::authored_tasks();
  validate_tasks(catalog, manifest, tasks);
  json jtasks = json::array();
  for (const TaskSpec& t : tasks) {
    jtasks.push_back(json{{"id", t.id},
                          {"question", t.question},
                          {"target_db", t.target_db},
                          {"gold_sql", t.gold_sql},
                          {"difficulty", difficulty_name(t.difficulty)}});
  }
  write_file(out_dir / "tasks.json", json{{"tasks", jtasks}}.dump(2) + "\n");
}

Manifest load_manifest(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw FixtureError("cannot read " + file.string());
  }
  try {
    json j = json::parse(in);
    Manifest m;
    m.generation_seed = j.at("generation_seed").get<std::uint64_t>();
    for (const auto& [setting, ids] : j.at("settings").items()) {
      m.settings[setting] = ids.get<std::vector<std::string>>();
    }
    for (const json& jdb : j.at("databases")) {
      ManifestDb db;
      db.id = jdb.at("id").get<std::string>();
      db.kind = jdb.at("kind").get<std::string>();
      for (const json& jt : jdb.at("tables")) {
        ManifestTable t;
        t.name = jt.at("name").get<std::string>();
        if (!jt.at("row_count").is_null()) {
          t.row_count = jt.at("row_count").get<std::int64_t>();
        }
        t.columns = jt.at("columns").get<std::vector<std::string>>();
        db.tables.push_back(std::move(t));
      }
      m.databases.push_back(std::move(db));
    }
    return m;
  } catch (const json::exception& e) {
    throw FixtureError("manifest " + file.string() + ": " + e.what());
  }
}

std::vector<TaskSpec> load_tasks(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw FixtureError("cannot read " + file.string());
  }
  try {
    json j = json::parse(in);
    std::vector<TaskSpec> tasks;
    for (const json& jt : j.at("tasks")) {
      TaskSpec t;
      t.id = jt.at("id").get<std::string>();
      t.question = jt.at("question").get<std::string>();
      t.target_db = jt.at("target_db").get<std::string>();
      t.gold_sql = jt.at("gold_sql").get<std::string>();
      const std::string d = jt.at("difficulty").get<std::string>();
      if (d == "simple") {
        t.difficulty = Difficulty::simple;
      } else if (d == "complex") {
        t.difficulty = Difficulty::complex;
      } else {
        throw FixtureError(t.id + ": unknown difficulty '" + d + "'");
      }
      tasks.push_back(std::move(t));
    }
    return tasks;
  } catch (const json::exception& e) {
    throw FixtureError("tasks " + file.string() + ": " + e.what());
  }
}

}  // namespace dla
