#include "dla/catalog.hpp"

#include <sqlite3.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dla {

namespace {

using nlohmann::json;

constexpr std::int64_t kExecutionBudgetOps = 50'000'000;
constexpr std::size_t kMaxResultRows = 100'000;

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

DbKind parse_kind(const std::string& s) {
  if (s == "materialized") return DbKind::materialized;
  if (s == "schema_only") return DbKind::schema_only;
  throw CatalogError("config error: unknown database kind '" + s + "'");
}

/// Introspects an open database: table list (optionally with row counts) plus
/// per-table columns with PK and FK annotations.
void introspect_open(const SqliteDb& db, const SqliteDb* countable,
                     std::vector<TableInfo>& tables,
                     std::map<std::string, std::vector<ColumnInfo>>& columns) {
  QueryResult names = db.query(
      "SELECT name FROM sqlite_schema "
      "WHERE type = 'table' AND name NOT LIKE 'sqlite_%' ORDER BY name");
  for (const auto& row : names.rows) {
    const std::string& table = std::get<std::string>(row[0]);
    TableInfo info;
    info.name = table;
    if (countable) {
      info.row_count = countable->query_int("SELECT COUNT(*) FROM \"" + table + "\"");
    }
    tables.push_back(std::move(info));

    std::vector<ColumnInfo> cols;
    QueryResult ti = db.query("PRAGMA table_info(\"" + table + "\")");
    for (const auto& c : ti.rows) {
      ColumnInfo col;
      col.name = std::get<std::string>(c[1]);
      col.type = std::get<std::string>(c[2]);
      col.primary_key = std::get<std::int64_t>(c[5]) != 0;
      cols.push_back(std::move(col));
    }
    QueryResult fk = db.query("PRAGMA foreign_key_list(\"" + table + "\")");
    for (const auto& f : fk.rows) {
      // foreign_key_list columns: id, seq, table, from, to, ...
      const std::string& ref_table = std::get<std::string>(f[2]);
      const std::string& from_col = std::get<std::string>(f[3]);
      std::string to_col;
      if (auto* s = std::get_if<std::string>(&f[4])) to_col = *s;
      for (auto& col : cols) {
        if (col.name == from_col) {
          col.foreign_key = ForeignKeyRef{ref_table, to_col};
        }
      }
    }
    columns.emplace(table, std::move(cols));
  }
}

void introspect(const std::filesystem::path& file, bool count_rows,
                std::vector<TableInfo>& tables,
                std::map<std::string, std::vector<ColumnInfo>>& columns) {
  SqliteDb db(file, SqliteDb::Mode::read_only);
  introspect_open(db, count_rows ? &db : nullptr, tables, columns);
}

/// Schema-only databases ship as a .sql DDL script: run it in an in-memory
/// database and introspect that.
void introspect_schema_sql(const std::filesystem::path& file,
                           std::vector<TableInfo>& tables,
                           std::map<std::string, std::vector<ColumnInfo>>& columns) {
  std::ifstream in(file);
  if (!in) throw CatalogError("config error: cannot read schema file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();

  SqliteDb db(":memory:", SqliteDb::Mode::read_write_create);
  db.exec(buf.str());
  introspect_open(db, nullptr, tables, columns);
}

}  // namespace

void check_sql_is_readonly_select(const std::string& sql) {
  // First word decides: only SELECT and WITH are query statements.
  std::size_t i = 0;
  while (i < sql.size() && std::isspace(static_cast<unsigned char>(sql[i]))) ++i;
  std::size_t start = i;
  while (i < sql.size() && std::isalpha(static_cast<unsigned char>(sql[i]))) ++i;
  std::string word = to_lower(sql.substr(start, i - start));
  if (word != "select" && word != "with") {
    throw CatalogError(
        "only read-only SELECT queries are allowed; the statement must start "
        "with SELECT or WITH");
  }
}

std::vector<DbDescription> Catalog::get_db_descriptions() const {
  std::vector<DbDescription> out;
  out.reserve(order_.size());
  for (const auto& id : order_) {
    const DbData& d = dbs_.at(to_lower(id));
    out.push_back(DbDescription{d.entry.id, d.entry.kind, d.entry.description,
                                d.entry.domain_tag});
  }
  return out;
}

const Catalog::DbData* Catalog::find_db_ptr(const std::string& db_id) const {
  auto it = dbs_.find(to_lower(db_id));
  return it == dbs_.end() ? nullptr : &it->second;
}

const Catalog::DbData& Catalog::find_db(const std::string& db_id) const {
  const DbData* d = find_db_ptr(db_id);
  if (!d) {
    throw CatalogError("unknown database '" + db_id +
                       "'; valid database ids are: " + join_ids(order_));
  }
  return *d;
}

std::vector<TableInfo> Catalog::get_tables(const std::string& db_id) const {
  return find_db(db_id).tables;
}

std::vector<ColumnInfo> Catalog::get_columns(const std::string& db_id,
                                             const std::string& table) const {
  const DbData& d = find_db(db_id);
  // Case-insensitive table match, returning the canonical spelling's columns.
  std::string want = to_lower(table);
  for (const auto& [name, cols] : d.columns) {
    if (to_lower(name) == want) return cols;
  }
  std::vector<std::string> names;
  for (const auto& t : d.tables) names.push_back(t.name);
  throw CatalogError("database '" + d.entry.id + "' has no table '" + table +
                     "'; its tables are: " + join_ids(names));
}

QueryResult Catalog::execute_sql(const std::string& db_id,
                                 const std::string& sql) const {
  const DbData& d = find_db(db_id);
  if (d.entry.kind == DbKind::schema_only) {
    std::vector<std::string> materialized;
    for (const auto& id : order_) {
      if (dbs_.at(to_lower(id)).entry.kind == DbKind::materialized) {
        materialized.push_back(id);
      }
    }
    throw CatalogError("database '" + d.entry.id +
                       "' is schema-only and has no data attached; queryable "
                       "databases are: " +
                       join_ids(materialized));
  }
  check_sql_is_readonly_select(sql);

  SqliteDb db(d.entry.source, SqliteDb::Mode::read_only);
  db.set_execution_budget(kExecutionBudgetOps);

  // Statement-level guard: prepare, confirm it is read-only and alone.
  sqlite3_stmt* stmt = nullptr;
  const char* tail = nullptr;
  if (sqlite3_prepare_v2(db.handle(), sql.c_str(), -1, &stmt, &tail) != SQLITE_OK) {
    std::string msg = sqlite3_errmsg(db.handle());
    throw CatalogError("SQL error: " + msg);
  }
  if (!stmt) throw CatalogError("SQL error: empty statement");
  bool readonly = sqlite3_stmt_readonly(stmt) != 0;
  std::string rest = tail ? tail : "";
  sqlite3_finalize(stmt);
  if (!readonly) {
    throw CatalogError("only read-only SELECT queries are allowed");
  }
  bool tail_nonblank = std::any_of(rest.begin(), rest.end(), [](unsigned char c) {
    return !std::isspace(c) && c != ';';
  });
  if (tail_nonblank) {
    throw CatalogError("only a single SQL statement is allowed per query");
  }

  QueryResult result;
  try {
    result = db.query(sql);
  } catch (const SqliteError& e) {
    throw CatalogError("SQL error: " + std::string(e.what()));
  }
  if (result.rows.size() > kMaxResultRows) {
    throw CatalogError("query returned more than " +
                       std::to_string(kMaxResultRows) +
                       " rows; add a LIMIT or aggregate");
  }
  return result;
}

bool Catalog::is_materialized(const std::string& db_id) const {
  const DbData* d = find_db_ptr(db_id);
  return d && d->entry.kind == DbKind::materialized;
}

bool Catalog::has_db(const std::string& db_id) const {
  return find_db_ptr(db_id) != nullptr;
}

std::string Catalog::resolve_db_id(const std::string& db_id) const {
  const DbData* d = find_db_ptr(db_id);
  return d ? d->entry.id : db_id;
}

std::size_t Catalog::total_table_count() const {
  std::size_t n = 0;
  for (const auto& [key, d] : dbs_) n += d.tables.size();
  return n;
}

std::string Catalog::metadata_json() const {
  json doc = json::object();
  json dbs = json::array();
  for (const auto& id : order_) {
    const DbData& d = dbs_.at(to_lower(id));
    json jdb = json::object();
    jdb["id"] = d.entry.id;
    jdb["kind"] = d.entry.kind == DbKind::materialized ? "materialized" : "schema_only";
    jdb["description"] = d.entry.description;
    jdb["domain_tag"] = d.entry.domain_tag;
    json tables = json::array();
    for (const auto& t : d.tables) {
      json jt = json::object();
      jt["name"] = t.name;
      if (t.row_count) jt["row_count"] = *t.row_count;
      json cols = json::array();
      for (const auto& c : d.columns.at(t.name)) {
        json jc = json::object();
        jc["name"] = c.name;
        jc["type"] = c.type;
        jc["primary_key"] = c.primary_key;
        if (c.foreign_key) {
          jc["foreign_key"] =
              json{{"table", c.foreign_key->table}, {"column", c.foreign_key->column}};
        }
        cols.push_back(std::move(jc));
      }
      jt["columns"] = std::move(cols);
      tables.push_back(std::move(jt));
    }
    jdb["tables"] = std::move(tables);
    dbs.push_back(std::move(jdb));
  }
  doc["databases"] = std::move(dbs);
  return doc.dump(2);
}

Catalog load_catalog(const std::filesystem::path& config_file) {
  std::ifstream in(config_file);
  if (!in) {
    throw CatalogError("cannot open catalog config " + config_file.string());
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw CatalogError("catalog config is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.contains("databases") || !doc["databases"].is_array()) {
    throw CatalogError("catalog config must contain a 'databases' array");
  }

  std::filesystem::path base = config_file.parent_path();
  Catalog catalog;
  for (const auto& jdb : doc["databases"]) {
    CatalogEntry entry;
    entry.id = jdb.at("id").get<std::string>();
    entry.kind = parse_kind(jdb.at("kind").get<std::string>());
    entry.description = jdb.at("description").get<std::string>();
    entry.domain_tag = jdb.value("domain_tag", std::string{});
    std::filesystem::path src = jdb.at("source").get<std::string>();
    entry.source = src.is_absolute() ? src : base / src;

    if (!std::filesystem::exists(entry.source)) {
      throw CatalogError("database source not found: " + entry.source.string());
    }

    Catalog::DbData data;
    data.entry = entry;
    if (entry.kind == DbKind::materialized) {
      introspect(entry.source, /*count_rows=*/true, data.tables, data.columns);
    } else if (entry.source.extension() == ".sql") {
      introspect_schema_sql(entry.source, data.tables, data.columns);
    } else {
      introspect(entry.source, /*count_rows=*/false, data.tables, data.columns);
    }

    std::string key = to_lower(entry.id);
    if (catalog.dbs_.count(key)) {
      throw CatalogError("duplicate database id '" + entry.id + "' in config");
    }
    catalog.dbs_.emplace(key, std::move(data));
    catalog.order_.push_back(entry.id);
  }
  std::sort(catalog.order_.begin(), catalog.order_.end());
  return catalog;
}

}  // namespace dla
