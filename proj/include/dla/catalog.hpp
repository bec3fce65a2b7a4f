#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dla/sqlite_util.hpp"

namespace dla {

/// Raised for lookups the model got wrong (unknown database, unknown table,
/// querying a schema-only database). The message is written for the model:
/// it names the valid alternatives so the next turn can recover.
class CatalogError : public std::runtime_error {
 public:
  explicit CatalogError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class DbKind { materialized, schema_only };

struct DbDescription {
  std::string id;
  DbKind kind = DbKind::materialized;
  std::string description;
  std::string domain_tag;
};

struct TableInfo {
  std::string name;
  // Row count is only known for materialized databases.
  std::optional<std::int64_t> row_count;
};

struct ForeignKeyRef {
  std::string table;
  std::string column;
};

struct ColumnInfo {
  std::string name;
  std::string type;
  bool primary_key = false;
  std::optional<ForeignKeyRef> foreign_key;
};

/// One entry of the collection config: where a database lives and how it is
/// described to the model.
struct CatalogEntry {
  std::string id;
  DbKind kind = DbKind::materialized;
  std::filesystem::path source;  // .sqlite file or schema-only .sql file
  std::string description;
  std::string domain_tag;
};

/// A loaded collection of databases. Metadata is introspected once at load
/// time; queries open fresh read-only connections, so a Catalog can be
/// shared across threads without locking.
class Catalog {
 public:
  /// Databases in the collection, sorted by id.
  std::vector<DbDescription> get_db_descriptions() const;

  /// Tables of one database, sorted by name.
  std::vector<TableInfo> get_tables(const std::string& db_id) const;

  /// Columns of one table, in schema declaration order.
  std::vector<ColumnInfo> get_columns(const std::string& db_id,
                                      const std::string& table) const;

  /// Executes read-only SQL against a materialized database. Rejects
  /// non-SELECT statements and enforces an execution budget and row cap.
  QueryResult execute_sql(const std::string& db_id, const std::string& sql) const;

  /// True when the database holds data that execute_sql can reach.
  bool is_materialized(const std::string& db_id) const;
  bool has_db(const std::string& db_id) const;

  /// Canonical id for a case-insensitive match, or the input unchanged.
  std::string resolve_db_id(const std::string& db_id) const;

  std::size_t db_count() const { return order_.size(); }
  std::size_t total_table_count() const;

  /// Canonical JSON dump of every piece of metadata the catalog serves.
  /// Byte-identical across loads of the same collection.
  std::string metadata_json() const;

  friend Catalog load_catalog(const std::filesystem::path& config_file);

 private:
  struct DbData {
    CatalogEntry entry;
    std::vector<TableInfo> tables;
    std::map<std::string, std::vector<ColumnInfo>> columns;  // by table name
  };

  const DbData& find_db(const std::string& db_id) const;
  const DbData* find_db_ptr(const std::string& db_id) const;

  std::map<std::string, DbData> dbs_;   // keyed by lowercased id
  std::vector<std::string> order_;      // canonical ids, sorted
};

/// Reads a collection config (JSON) and introspects every database in it.
/// Relative source paths resolve against the config file's directory.
Catalog load_catalog(const std::filesystem::path& config_file);

/// Guard used by execute_sql, exposed for tests: accepts a single SELECT or
/// WITH statement, rejects everything else with a model-facing message.
void check_sql_is_readonly_select(const std::string& sql);

}  // namespace dla
