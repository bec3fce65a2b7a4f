#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

struct sqlite3;
struct sqlite3_stmt;

namespace dla {

/// One SQL scalar: null, integer, real, or text.
using Value = std::variant<std::monostate, std::int64_t, double, std::string>;

struct QueryResult {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// Canonical text form of a scalar: integers undecorated, reals to 9
/// significant digits, text verbatim, null as "NULL". Grading and result
/// rendering both go through this, so "42" and 42.0 compare equal.
std::string canonical_scalar(const Value& v);

class SqliteError : public std::runtime_error {
 public:
  explicit SqliteError(const std::string& msg) : std::runtime_error(msg) {}
};

/// RAII connection to a SQLite database file.
class SqliteDb {
 public:
  enum class Mode { read_only, read_write_create };

  SqliteDb(const std::filesystem::path& file, Mode mode);
  ~SqliteDb();

  SqliteDb(const SqliteDb&) = delete;
  SqliteDb& operator=(const SqliteDb&) = delete;
  SqliteDb(SqliteDb&& other) noexcept;
  SqliteDb& operator=(SqliteDb&& other) noexcept;

  /// Executes one or more statements that produce no result (DDL, inserts).
  void exec(const std::string& sql);

  /// Runs a single query and materializes the full result.
  QueryResult query(const std::string& sql) const;

  /// Single-row single-column convenience, e.g. COUNT(*).
  std::int64_t query_int(const std::string& sql) const;

  /// Prepared insert helper: binds `rows` one by one against `insert_sql`
  /// (with ? placeholders) inside the current transaction.
  void insert_rows(const std::string& insert_sql,
                   const std::vector<std::vector<Value>>& rows);

  void begin_transaction() { exec("BEGIN"); }
  void commit() { exec("COMMIT"); }

  /// Aborts any statement once roughly `ops` VM instructions have run.
  /// Keeps arbitrary generated SQL from running unbounded. The handler
  /// points into this object, so call it only once the connection has
  /// reached its final location (no moves afterwards).
  void set_execution_budget(std::int64_t ops);

  sqlite3* handle() const { return db_; }

 private:
  sqlite3* db_ = nullptr;
  std::int64_t budget_remaining_ = 0;
};

}  // namespace dla
