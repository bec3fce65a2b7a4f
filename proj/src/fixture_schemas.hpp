#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dla/sqlite_util.hpp"

// Fixture universe definitions, internal to the generator: the five
// materialized databases with synthesized rows, and the eighteen schema-only
// databases that exist purely to inflate the metadata universe.
namespace dla::fixture_detail {

struct MaterializedDbSpec {
  const char* id;
  const char* description;
  const char* domain_tag;
  void (*build)(SqliteDb& db, std::uint64_t seed);
};

const std::vector<MaterializedDbSpec>& materialized_dbs();

struct SchemaOnlyDbSpec {
  const char* id;
  const char* description;
  const char* domain_tag;
  const char* setting;  // first setting that includes it: "medium" | "large"
  std::vector<const char*> tables;
  std::vector<const char*> column_pool;
};

const std::vector<SchemaOnlyDbSpec>& schema_only_dbs();

/// Deterministic DDL for one schema-only database.
std::string schema_only_ddl(const SchemaOnlyDbSpec& spec);

std::uint64_t fnv1a(const std::string& s);

}  // namespace dla::fixture_detail
