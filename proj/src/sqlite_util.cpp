#include "dla/sqlite_util.hpp"

#include <sqlite3.h>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <utility>

namespace dla {

std::string canonical_scalar(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "NULL"; }
    std::string operator()(std::int64_t i) const {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%" PRId64, i);
      return buf;
    }
    std::string operator()(double d) const {
      if (std::isnan(d)) return "NaN";
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.9g", d);
      return buf;
    }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

namespace {

Value column_value(sqlite3_stmt* stmt, int col) {
  switch (sqlite3_column_type(stmt, col)) {
    case SQLITE_NULL:
      return std::monostate{};
    case SQLITE_INTEGER:
      return static_cast<std::int64_t>(sqlite3_column_int64(stmt, col));
    case SQLITE_FLOAT:
      return sqlite3_column_double(stmt, col);
    default: {
      const unsigned char* text = sqlite3_column_text(stmt, col);
      return std::string(text ? reinterpret_cast<const char*>(text) : "");
    }
  }
}

void bind_value(sqlite3_stmt* stmt, int idx, const Value& v) {
  struct Binder {
    sqlite3_stmt* stmt;
    int idx;
    int operator()(std::monostate) const { return sqlite3_bind_null(stmt, idx); }
    int operator()(std::int64_t i) const { return sqlite3_bind_int64(stmt, idx, i); }
    int operator()(double d) const { return sqlite3_bind_double(stmt, idx, d); }
    int operator()(const std::string& s) const {
      return sqlite3_bind_text(stmt, idx, s.c_str(), -1, SQLITE_TRANSIENT);
    }
  };
  if (std::visit(Binder{stmt, idx}, v) != SQLITE_OK) {
    throw SqliteError("failed to bind parameter " + std::to_string(idx));
  }
}

class Stmt {
 public:
  Stmt(sqlite3* db, const std::string& sql) {
    const char* tail = nullptr;
    if (sqlite3_prepare_v2(db, sql.c_str(), -1, &stmt_, &tail) != SQLITE_OK) {
      throw SqliteError(sqlite3_errmsg(db));
    }
    if (!stmt_) throw SqliteError("empty SQL statement");
    tail_ = tail ? tail : "";
  }
  ~Stmt() { sqlite3_finalize(stmt_); }
  Stmt(const Stmt&) = delete;
  Stmt& operator=(const Stmt&) = delete;

  sqlite3_stmt* get() const { return stmt_; }
  const std::string& tail() const { return tail_; }

 private:
  sqlite3_stmt* stmt_ = nullptr;
  std::string tail_;
};

}  // namespace

SqliteDb::SqliteDb(const std::filesystem::path& file, Mode mode) {
  int flags = mode == Mode::read_only
                  ? SQLITE_OPEN_READONLY
                  : (SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE);
  if (sqlite3_open_v2(file.string().c_str(), &db_, flags, nullptr) != SQLITE_OK) {
    std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
    sqlite3_close(db_);
    db_ = nullptr;
    throw SqliteError("cannot open " + file.string() + ": " + msg);
  }
  sqlite3_busy_timeout(db_, 5000);
}

SqliteDb::~SqliteDb() { sqlite3_close(db_); }

SqliteDb::SqliteDb(SqliteDb&& other) noexcept
    : db_(other.db_), budget_remaining_(other.budget_remaining_) {
  other.db_ = nullptr;
}

SqliteDb& SqliteDb::operator=(SqliteDb&& other) noexcept {
  if (this != &other) {
    sqlite3_close(db_);
    db_ = other.db_;
    budget_remaining_ = other.budget_remaining_;
    other.db_ = nullptr;
  }
  return *this;
}

void SqliteDb::exec(const std::string& sql) {
  char* err = nullptr;
  if (sqlite3_exec(db_, sql.c_str(), nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw SqliteError(msg);
  }
}

QueryResult SqliteDb::query(const std::string& sql) const {
  Stmt stmt(db_, sql);
  QueryResult result;
  int ncol = sqlite3_column_count(stmt.get());
  for (int i = 0; i < ncol; ++i) {
    const char* name = sqlite3_column_name(stmt.get(), i);
    result.columns.emplace_back(name ? name : "");
  }
  while (true) {
    int rc = sqlite3_step(stmt.get());
    if (rc == SQLITE_ROW) {
      std::vector<Value> row;
      row.reserve(ncol);
      for (int i = 0; i < ncol; ++i) row.push_back(column_value(stmt.get(), i));
      result.rows.push_back(std::move(row));
    } else if (rc == SQLITE_DONE) {
      break;
    } else {
      throw SqliteError(sqlite3_errmsg(db_));
    }
  }
  return result;
}

std::int64_t SqliteDb::query_int(const std::string& sql) const {
  QueryResult r = query(sql);
  if (r.rows.size() != 1 || r.rows[0].size() != 1) {
    throw SqliteError("expected a single scalar from: " + sql);
  }
  if (auto* i = std::get_if<std::int64_t>(&r.rows[0][0])) return *i;
  throw SqliteError("expected an integer scalar from: " + sql);
}

void SqliteDb::insert_rows(const std::string& insert_sql,
                           const std::vector<std::vector<Value>>& rows) {
  Stmt stmt(db_, insert_sql);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      bind_value(stmt.get(), static_cast<int>(i + 1), row[i]);
    }
    if (sqlite3_step(stmt.get()) != SQLITE_DONE) {
      throw SqliteError(sqlite3_errmsg(db_));
    }
    sqlite3_reset(stmt.get());
    sqlite3_clear_bindings(stmt.get());
  }
}

void SqliteDb::set_execution_budget(std::int64_t ops) {
  // The progress handler fires every N instructions; returning nonzero
  // interrupts the statement with SQLITE_INTERRUPT.
  constexpr int kInterval = 1000;
  budget_remaining_ = ops / kInterval;
  sqlite3_progress_handler(
      db_, kInterval,
      [](void* p) -> int {
        auto* remaining = static_cast<std::int64_t*>(p);
        return --*remaining <= 0 ? 1 : 0;
      },
      &budget_remaining_);
}

}  // namespace dla
